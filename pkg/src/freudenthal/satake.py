"""Torus-level lift maps between unramified Satake parameters.

Values are exact monomials q^r * zeta, with r a rational exponent and
zeta a root of unity stored as a rational phase (zeta = e^{2 pi i phase}).
Conjugacy classes are canonical eigenvalue multisets in a fixed reference
representation per group: SL3 the standard 3, G2 the 7, Spin7 the 8-dim
spin, F4 the 26, SO3 the 3.

The two nontrivial torus embeddings (G2 -> Spin7 and G2 x SO3 -> F4) were
solved as integer cocharacter-lattice maps against the target weight
multisets; the solver lives in lattices.py and the frozen outcomes here
are exactly what it reproduces:

- the 8 spin weights pull back to {0} + (7-dim G2 weights), so the spin
  multiset of the image is {1} + the input 7-multiset;
- the 26 F4 weights pull back to (7-dim G2 weights) x {1,0,-1} +
  (0) x {2,1,0,-1,-2}: the 26-multiset is 7x3 + 1x5.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union


class ProductNotOne(Exception):
    pass


class NotUnitary(Exception):
    pass


class MixedGroups(Exception):
    pass


@dataclass(frozen=True, order=True)
class UnramifiedValue:
    """q^qexp * e^{2 pi i phase}, both rational, phase taken mod 1."""

    qexp: Fraction
    phase: Fraction

    @staticmethod
    def of(qexp=0, phase=0) -> "UnramifiedValue":
        return UnramifiedValue(Fraction(qexp), Fraction(phase) % 1)

    @staticmethod
    def one() -> "UnramifiedValue":
        return UnramifiedValue.of(0, 0)

    def __mul__(self, other: "UnramifiedValue") -> "UnramifiedValue":
        return UnramifiedValue.of(self.qexp + other.qexp, self.phase + other.phase)

    def inv(self) -> "UnramifiedValue":
        return UnramifiedValue.of(-self.qexp, -self.phase)

    def conj(self) -> "UnramifiedValue":
        return UnramifiedValue.of(self.qexp, -self.phase)

    @property
    def is_unitary(self) -> bool:
        return self.qexp == 0

    def numeric(self, q: float) -> complex:
        return (q ** float(self.qexp)) * cmath.exp(2j * cmath.pi * float(self.phase))


ONE = UnramifiedValue.one()

GROUPS = ("SL3", "GL2", "G2", "Spin7", "F4", "SO3", "PGSp6-side")
REFERENCE_DIM = {"SL3": 3, "GL2": 2, "G2": 7, "Spin7": 8, "F4": 26, "SO3": 3}


@dataclass(frozen=True)
class SatakeClass:
    """Canonical (sorted) eigenvalue multiset in the reference representation."""

    group: str
    eigenvalues: Tuple[UnramifiedValue, ...]

    @staticmethod
    def make(group: str, values: Sequence[UnramifiedValue]) -> "SatakeClass":
        if group not in GROUPS:
            raise MixedGroups(f"unknown group tag {group}")
        dim = REFERENCE_DIM.get(group)
        if dim is not None and len(values) != dim:
            raise ValueError(f"{group} reference multiset must have {dim} entries")
        return SatakeClass(group, tuple(sorted(values)))

    def inversion_closed(self) -> bool:
        return tuple(sorted(v.inv() for v in self.eigenvalues)) == self.eigenvalues


def class_eq(a: SatakeClass, b: SatakeClass, tol: float | None = None, q: float = 2.0) -> bool:
    if a.group != b.group:
        raise MixedGroups(f"{a.group} vs {b.group}")
    if tol is None:
        return a.eigenvalues == b.eigenvalues
    if len(a.eigenvalues) != len(b.eigenvalues):
        return False
    av = sorted((v.numeric(q).real, v.numeric(q).imag) for v in a.eigenvalues)
    bv = sorted((v.numeric(q).real, v.numeric(q).imag) for v in b.eigenvalues)
    return all(abs(x - u) <= tol and abs(y - w) <= tol for (x, y), (u, w) in zip(av, bv))


# -- lift maps ---------------------------------------------------------------


def phi_a2_g2(t1: UnramifiedValue, t2: UnramifiedValue, t3: UnramifiedValue) -> SatakeClass:
    """SL3 parameter (t1,t2,t3), product 1, to the 7-dim G2 multiset."""
    prod = t1 * t2 * t3
    if prod != ONE:
        raise ProductNotOne(f"t1 t2 t3 = {prod}")
    vals = [ONE]
    for t in (t1, t2, t3):
        vals.append(t)
        vals.append(t.inv())
    return SatakeClass.make("G2", vals)


def phi_g2_b3(c: SatakeClass) -> SatakeClass:
    """G2 class to the 8-dim spin multiset of Spin7: {1} + the 7-multiset.

    This is the frozen form of the solved cocharacter map (lattices.py):
    the spin weights pull back to {0} + the 7-dim G2 weights."""
    if c.group != "G2":
        raise MixedGroups(f"expected G2 class, got {c.group}")
    return SatakeClass.make("Spin7", (ONE,) + c.eigenvalues)


def _so3_unit(r: SatakeClass) -> UnramifiedValue:
    """The u with r = {u, 1, u^-1} (canonical SO3 class)."""
    if r.group != "SO3":
        raise MixedGroups(f"expected SO3 class, got {r.group}")
    vals = list(r.eigenvalues)
    if ONE not in vals:
        raise ValueError("SO3 reference multiset must contain 1")
    vals.remove(ONE)
    u, v = vals
    if u.inv() != v:
        raise ValueError("SO3 multiset must be {u, 1, 1/u}")
    return u


def psi_g2a1_f4(c: SatakeClass, r: SatakeClass) -> SatakeClass:
    """G2 x SO3 class to the 26-dim F4 multiset.

    Frozen form of the solved torus map (lattices.py): the 26-dim
    representation restricts to (7-dim) x (3-dim) + (1) x (5-dim)."""
    if c.group != "G2":
        raise MixedGroups(f"expected G2 class, got {c.group}")
    u = _so3_unit(r)
    vals: List[UnramifiedValue] = []
    for y in (u, ONE, u.inv()):
        vals.extend(x * y for x in c.eigenvalues)
    uu = u * u
    vals.extend([uu, u, ONE, u.inv(), uu.inv()])
    return SatakeClass.make("F4", vals)


def trivial_so3_param(q_exp: Union[int, Fraction] = 1) -> SatakeClass:
    """Class of diag(q, 1, 1/q): the principal parameter of the trivial
    representation (q given through its exponent, default q^1)."""
    u = UnramifiedValue.of(Fraction(q_exp), 0)
    return SatakeClass.make("SO3", [u, ONE, u.inv()])


def subregular_param(d, marking=None) -> List[UnramifiedValue]:
    """alpha_i(s) = q^{m_i / 2} for the subregular 0/2 marking of d."""
    from .rootdata import subregular_marking

    if marking is None:
        marking = subregular_marking(d)
    return [UnramifiedValue.of(Fraction(marking[i], 2), 0) for i in d.nodes()]


# -- rank-2 block parameter bookkeeping ----------------------------------------


def gl2_to_g2_param_map(chi: UnramifiedValue, mu: UnramifiedValue, force: bool = False):
    """The tempered GL2-block parameter (chi q^{-1/2}, mu q^{-1/2}) maps to
    (chi^-1 q^{-3/2}, mu^-1 q^{-3/2}); |pi| = q^-1 throughout."""
    if not force and not (chi.is_unitary and mu.is_unitary):
        raise NotUnitary("chi and mu must be unitary (pass force=True to override)")
    half = UnramifiedValue.of(Fraction(-1, 2), 0)
    threehalf = UnramifiedValue.of(Fraction(-3, 2), 0)
    source = tuple(sorted((chi * half, mu * half)))
    target = tuple(sorted((chi.inv() * threehalf, mu.inv() * threehalf)))
    return source, target


def t1_t2_scalars(chi: UnramifiedValue, mu: UnramifiedValue, q: float, tol: float = 1e-9):
    """The two Hecke scalars on the tempered parameter and the separation
    verdicts used to tell the lift apart from the Iwahori-spherical line.

    T1 = q^2 (chi^-1 + mu^-1) - q (chi mu)^-1, reference constant q^3;
    T2 = q^-1 chi mu."""
    x = chi.numeric(q)
    y = mu.numeric(q)
    t1 = q * q * (1 / x + 1 / y) - q / (x * y)
    t2_exact = chi * mu * UnramifiedValue.of(-1, 0)
    t2 = t2_exact.numeric(q)
    t1_real = abs(t1.imag) <= tol
    verdicts = {
        "t1_real_implies_lt_2q2": (not t1_real) or t1.real < 2 * q * q - tol,
        "t1_not_reference": abs(t1 - q**3) > tol,
        "t2_not_q_minus_2": abs(t2 - q**-2.0) > tol,
        "t2_not_q_minus_4": abs(t2 - q**-4.0) > tol,
    }
    return {
        "T1": t1,
        "T2": t2_exact,
        "reference_scalar": q**3,
        "verdicts": verdicts,
        "all_pass": all(verdicts.values()),
    }


def so3_bookkeeping(n: int, chi_unitary: bool = True):
    """Exponent bookkeeping for the rank-one tower at split rank n."""
    if n < 2:
        raise ValueError("n >= 2")
    return {
        "tau_inducing_exponent": Fraction(1, 2),
        "sigma_scaling_exponent": Fraction(3, 2) - n,
        "jacquet_eigenvalue_exponents": (Fraction(1), Fraction(n - 1)),
        "lift_defined": bool(chi_unitary),
        "lift": "chi -> sigma_chi",
    }
