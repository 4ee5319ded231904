"""Cocharacter-lattice solvers behind the frozen lift maps in satake.py.

Each solver searches for an integer torus map whose pullback of a target
representation's weight multiset equals a prescribed multiset.  They are
kept as the provenance oracle for the two identities frozen into
satake.phi_g2_b3 and satake.psi_g2a1_f4; the test suite re-runs them.

Torus conventions:
- G2 torus coordinates (a, b) via the SL3 parameter (t1, t2, t3) = (a, b,
  1/(ab)); the 7-dim weight multiset is {(0,0)} + {+-(1,0), +-(0,1),
  +-(1,1)} in (a, b)-exponents.
- Spin7 torus in the standard orthogonal coordinates; spin weights are
  (+-1 +-1 +-1)/2.
- F4 torus in the standard 4-dim coordinates; the 26-dim weight multiset
  is the 24 short roots plus two zeros.
- SO3 torus coordinate u; the 5-dim weights are (2,1,0,-1,-2).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

Vec = Tuple[Fraction, ...]


def _g2_7dim_weights() -> List[Tuple[int, int]]:
    w = [(0, 0)]
    for v in ((1, 0), (0, 1), (1, 1)):
        w.append(v)
        w.append((-v[0], -v[1]))
    return w


def _spin7_spin_weights() -> List[Vec]:
    half = Fraction(1, 2)
    return [
        (s1 * half, s2 * half, s3 * half)
        for s1 in (1, -1)
        for s2 in (1, -1)
        for s3 in (1, -1)
    ]


def _f4_26dim_weights() -> List[Vec]:
    out: List[Vec] = [tuple(Fraction(0) for _ in range(4))] * 2
    for i in range(4):
        for s in (1, -1):
            out.append(tuple(Fraction(s if j == i else 0) for j in range(4)))
    half = Fraction(1, 2)
    for signs in itertools.product((1, -1), repeat=4):
        out.append(tuple(s * half for s in signs))
    assert len(out) == 26
    return out


def _pullback(weight: Vec, columns: List[Tuple[int, ...]]) -> Tuple[Fraction, ...]:
    """Rows of the torus map are `columns[i]`: the exponent vector of the
    i-th ambient coordinate in the source torus coordinates."""
    n = len(columns[0])
    out = [Fraction(0)] * n
    for wi, col in zip(weight, columns):
        for k in range(n):
            out[k] += wi * col[k]
    return tuple(out)


def solve_g2_to_spin7(bound: int = 2) -> Optional[List[Tuple[int, int]]]:
    """Integer images of the three orthogonal coordinates in (a, b)
    exponents such that the spin multiset pulls back to {0} + 7-dim."""
    target = sorted(
        [(Fraction(0), Fraction(0))] + [(Fraction(x), Fraction(y)) for x, y in _g2_7dim_weights()]
    )
    spin = _spin7_spin_weights()
    rng = range(-bound, bound + 1)
    for cols in itertools.product(itertools.product(rng, rng), repeat=3):
        got = sorted(_pullback(w, list(cols)) for w in spin)
        if got == target:
            return list(cols)
    return None


def solve_g2so3_to_f4(bound: int = 2) -> Optional[List[Tuple[int, int, int]]]:
    """Integer images of the four F4 coordinates in (a, b, u) exponents
    such that the 26-dim multiset pulls back to 7x3 + 1x5."""
    g2w = _g2_7dim_weights()
    target = []
    for k in (1, 0, -1):
        for x, y in g2w:
            target.append((Fraction(x), Fraction(y), Fraction(k)))
    for k in (2, 1, 0, -1, -2):
        target.append((Fraction(0), Fraction(0), Fraction(k)))
    target.sort()
    weights26 = _f4_26dim_weights()
    # Each +-e_i image must itself be a target vector, which prunes the
    # search from 5^12 to a few hundred thousand candidates.
    cand = sorted({tuple(int(c) for c in t) for t in target if all(c.denominator == 1 for c in t)})
    cand = [c for c in cand if any(c)]
    for cols in itertools.product(cand, repeat=4):
        got = sorted(_pullback(w, list(cols)) for w in weights26)
        if got == target:
            return list(cols)
    return None


def verify_frozen_identities() -> Dict[str, bool]:
    """Re-derive both identities; used by tests and the CLI check suite."""
    m1 = solve_g2_to_spin7()
    m2 = solve_g2so3_to_f4()
    return {
        "g2_to_spin7_solved": m1 is not None,
        "g2so3_to_f4_solved": m2 is not None,
        "g2_to_spin7_map": m1,
        "g2so3_to_f4_map": m2,
    }
