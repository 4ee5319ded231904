"""The graded space F + J_D + J_D* + F with its explicit group actions.

Vectors are flat tuples (a,) + y + z + (b,) with y, z the flat coordinates
of Jordan elements.  The grading torus acts with weights (-3, -1, 1, 3) on
(a, y, z, b); that pins the variable roles inside the unipotent action:

    plus side:   a' = a
                 y' = y + a u
                 z' = z + 2 u x y + a u#
                 b' = b + tr(u z) + tr(u# y) + a det(u)

(the trace and trilinear terms use z and y respectively -- the unique
assignment that is torus-equivariant and additive in u).  The minus side
is the (a, y) <-> (b, z) mirror.

All of these maps are linear in the vector, so generators are realized as
explicit matrices over F_q and orbit computation is vectorized matrix
arithmetic (see omega_bfs).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .composition import CompositionAlgebra
from .field import Field, PrimeField
from .jordan import (
    BadCharacteristic,
    JordanAlgebra,
    JordanElement,
    from_matrix3,
    to_matrix3,
)
from .linalg import mat3_adj, mat3_det, mat3_inv, mat3_mul, mat3_transpose, rank


class UnsupportedAlgebraDim(Exception):
    pass


class FrontierOverflow(Exception):
    pass


class PartitionMismatch(Exception):
    pass


FTSVector = tuple


class FTS:
    """The four-term graded module over a rank-3 Jordan algebra."""

    def __init__(self, J: JordanAlgebra):
        self.J = J
        self.field: Field = J.field
        self.dim = 2 + 2 * J.dim

    def __repr__(self):
        return f"FTS({self.J!r})"

    # -- vectors ---------------------------------------------------------

    def vector(self, a, y: JordanElement, z: JordanElement, b) -> FTSVector:
        F = self.field
        of = lambda v: F.of(v) if isinstance(v, int) else v
        return (of(a),) + self.J.to_vector(y) + self.J.to_vector(z) + (of(b),)

    def split(self, v: FTSVector):
        d = self.J.dim
        a = v[0]
        y = self.J.from_vector(v[1 : 1 + d])
        z = self.J.from_vector(v[1 + d : 1 + 2 * d])
        b = v[1 + 2 * d]
        return a, y, z, b

    @property
    def zero(self) -> FTSVector:
        return (self.field.zero,) * self.dim

    def basis_vector(self, i: int) -> FTSVector:
        F = self.field
        v = [F.zero] * self.dim
        v[i] = F.one
        return tuple(v)

    def lowest(self) -> FTSVector:
        """(1, 0, 0, 0), the seed of the singular-vector orbit."""
        J = self.J
        return self.vector(1, J.zero, J.zero, 0)

    # -- unipotent actions --------------------------------------------------

    def u_plus_action(self, u: JordanElement, v: FTSVector) -> FTSVector:
        J, F = self.J, self.field
        a, y, z, b = self.split(v)
        usharp = J.adjoint_sharp(u)
        y2 = J.add(y, J.scale(a, u))
        z2 = J.add(z, J.add(J.scale(F.of(2), J.cross(u, y)), J.scale(a, usharp)))
        b2 = F.add(b, J.trace_pairing(u, z))
        b2 = F.add(b2, J.trace_pairing(usharp, y))
        b2 = F.add(b2, F.mul(a, J.jdet(u)))
        return self.vector(a, y2, z2, b2)

    def u_minus_action(self, u: JordanElement, v: FTSVector) -> FTSVector:
        J, F = self.J, self.field
        a, y, z, b = self.split(v)
        usharp = J.adjoint_sharp(u)
        z2 = J.add(z, J.scale(b, u))
        y2 = J.add(y, J.add(J.scale(F.of(2), J.cross(u, z)), J.scale(b, usharp)))
        a2 = F.add(a, J.trace_pairing(u, y))
        a2 = F.add(a2, J.trace_pairing(usharp, z))
        a2 = F.add(a2, F.mul(b, J.jdet(u)))
        return self.vector(a2, y2, z2, b)

    # -- Levi actions ---------------------------------------------------------

    def torus_action(self, lam, v: FTSVector) -> FTSVector:
        """Grading torus, weights (-3, -1, 1, 3)."""
        F = self.field
        a, y, z, b = self.split(v)
        li = F.inv(lam)
        l3 = F.mul(F.mul(lam, lam), lam)
        li3 = F.inv(l3)
        return self.vector(
            F.mul(li3, a), self.J.scale(li, y), self.J.scale(lam, z), F.mul(l3, b)
        )

    def levi_dim1_action(self, g, v: FTSVector) -> FTSVector:
        """g in GL3 on the symmetric-matrix model: y -> det(g)^-1 g y g^T.

        For det(g) = 1 this is the plain action fixing a and b; the
        det twist extends it to all of GL3 while preserving the pairing.
        """
        if self.J.D.dim != 1:
            raise UnsupportedAlgebraDim("dim-1 Levi action needs dim D = 1")
        F, J = self.field, self.J
        d = mat3_det(F, g)
        dinv = F.inv(d)
        gi = mat3_inv(F, g)
        a, y, z, b = self.split(v)
        My = to_matrix3(J, y)
        Mz = to_matrix3(J, z)
        My2 = mat3_mul(F, mat3_mul(F, g, My), mat3_transpose(g))
        Mz2 = mat3_mul(F, mat3_mul(F, mat3_transpose(gi), Mz), gi)
        My2 = tuple(tuple(F.mul(dinv, t) for t in row) for row in My2)
        Mz2 = tuple(tuple(F.mul(d, t) for t in row) for row in Mz2)
        return self.vector(
            F.mul(dinv, a), from_matrix3(J, My2), from_matrix3(J, Mz2), F.mul(d, b)
        )

    def levi_dim2_action(self, g, h, v: FTSVector) -> FTSVector:
        """(g, h) in GL3 x GL3 acting y -> g y h^-1, z -> h z g^-1,
        with a, b twisted by det(g)/det(h)."""
        if self.J.D.dim != 2:
            raise UnsupportedAlgebraDim("dim-2 Levi action needs dim D = 2")
        F, J = self.field, self.J
        alpha = F.div(mat3_det(F, g), mat3_det(F, h))
        gi = mat3_inv(F, g)
        hi = mat3_inv(F, h)
        a, y, z, b = self.split(v)
        My2 = mat3_mul(F, mat3_mul(F, g, to_matrix3(J, y)), hi)
        Mz2 = mat3_mul(F, mat3_mul(F, h, to_matrix3(J, z)), gi)
        return self.vector(
            F.mul(alpha, a),
            from_matrix3(J, My2),
            from_matrix3(J, Mz2),
            F.mul(F.inv(alpha), b),
        )

    # -- invariant pairing --------------------------------------------------

    def pairing(self, v: FTSVector, w: FTSVector):
        """<(a,y,z,b), (a',y',z',b')> = ab' - ba' - tr(y z') + tr(z y')."""
        F, J = self.field, self.J
        a, y, z, b = self.split(v)
        a2, y2, z2, b2 = self.split(w)
        t = F.sub(F.mul(a, b2), F.mul(b, a2))
        t = F.sub(t, J.trace_pairing(y, z2))
        return F.add(t, J.trace_pairing(z, y2))

    def pairing_gram(self):
        n = self.dim
        basis = [self.basis_vector(i) for i in range(n)]
        return tuple(tuple(self.pairing(basis[i], basis[j]) for j in range(n)) for i in range(n))

    # -- generators as matrices ----------------------------------------------

    def matrix_of(self, action: Callable[[FTSVector], FTSVector]):
        """Matrix M (rows = image coordinates) with action(v) = M v."""
        n = self.dim
        cols = [action(self.basis_vector(j)) for j in range(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Generator:
    label: str
    matrix: tuple  # dim x dim over the base field, acting as v -> M v


class GeneratorSet:
    """Invertible pairing-preserving linear maps on the graded space."""

    def __init__(self, fts: FTS, generators: Sequence[Generator]):
        self.fts = fts
        self.generators = list(generators)
        gram = fts.pairing_gram()
        F = fts.field
        n = fts.dim
        for gen in self.generators:
            M = gen.matrix
            if rank(M, F) != n:
                raise ValueError(f"generator {gen.label} is singular")
            # M^T Gram M == Gram
            for i in range(n):
                for j in range(n):
                    s = F.zero
                    for k in range(n):
                        for l in range(n):
                            s = F.add(s, F.mul(F.mul(M[k][i], gram[k][l]), M[l][j]))
                    if s != gram[i][j]:
                        raise ValueError(f"generator {gen.label} breaks the pairing")

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


# -- finite-field orbit machinery ---------------------------------------------


def _sl3_elementaries(field: Field):
    """E_ij(1) for i != j; they generate SL3 over a prime field."""
    out = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            m = [[field.one if r == c else field.zero for c in range(3)] for r in range(3)]
            m[i][j] = field.one
            out.append((f"e{i}{j}", tuple(tuple(r) for r in m)))
    return out


def _first_singular(J: JordanAlgebra) -> JordanElement:
    """A fixed nonzero singular element, deterministic per algebra."""
    F = J.field
    if J.D.dim == 2:
        # E_12 in the matrix model: rank-one nilpotent.
        return from_matrix3(
            J,
            ((F.zero, F.one, F.zero), (F.zero, F.zero, F.zero), (F.zero, F.zero, F.zero)),
        )
    if J.D.dim == 1:
        # v v^T for the first isotropic vector v in lexicographic order.
        p = J.field.p
        import itertools

        for v in itertools.product(range(p), repeat=3):
            if any(v) and sum(c * c for c in v) % p == 0:
                M = tuple(tuple((v[i] * v[j]) % p for j in range(3)) for i in range(3))
                return from_matrix3(J, M)
        raise ValueError(f"no isotropic vector over F_{p}")
    raise UnsupportedAlgebraDim("fixed singular element only for dim D in {1, 2}")


def build_fts(dim_d: int, q: int) -> FTS:
    if dim_d not in (1, 2):
        raise UnsupportedAlgebraDim("orbit machinery supports dim D in {1, 2}")
    field = PrimeField(q)
    if field.characteristic in (2, 3):
        raise BadCharacteristic("orbit actions need characteristic >= 5")
    return FTS(JordanAlgebra(CompositionAlgebra(dim_d, field)))


def unipotent_generators(fts: FTS, scalars: Optional[Sequence[int]] = None) -> List[Generator]:
    """u_plus(c e_i) and u_minus(c e_i) for Jordan basis elements e_i."""
    F = fts.field
    if scalars is None:
        scalars = [c for c in range(1, F.p)] if isinstance(F, PrimeField) else [1]
    gens = []
    for i, e in enumerate(fts.J.basis()):
        for c in scalars:
            u = fts.J.scale(F.of(c), e)
            gens.append(
                Generator(f"u+({c}*e{i})", fts.matrix_of(lambda v, u=u: fts.u_plus_action(u, v)))
            )
            gens.append(
                Generator(f"u-({c}*e{i})", fts.matrix_of(lambda v, u=u: fts.u_minus_action(u, v)))
            )
    return gens


def levi_generators(fts: FTS) -> List[Generator]:
    """Generators of the Levi of the flag stabilizer: special-linear
    elementaries, a GL torus, and the grading torus."""
    F = fts.field
    assert isinstance(F, PrimeField)
    gens = []
    dim_d = fts.J.D.dim
    units = range(1, F.p)
    if dim_d == 1:
        for name, g in _sl3_elementaries(F):
            gens.append(Generator(f"levi:{name}", fts.matrix_of(lambda v, g=g: fts.levi_dim1_action(g, v))))
        for t in units:
            g = ((F.of(t), F.zero, F.zero), (F.zero, F.one, F.zero), (F.zero, F.zero, F.one))
            gens.append(Generator(f"levi:diag({t},1,1)", fts.matrix_of(lambda v, g=g: fts.levi_dim1_action(g, v))))
    elif dim_d == 2:
        ident = ((F.one, F.zero, F.zero), (F.zero, F.one, F.zero), (F.zero, F.zero, F.one))
        for name, g in _sl3_elementaries(F):
            gens.append(
                Generator(f"levi:L{name}", fts.matrix_of(lambda v, g=g: fts.levi_dim2_action(g, ident, v)))
            )
            gens.append(
                Generator(f"levi:R{name}", fts.matrix_of(lambda v, g=g: fts.levi_dim2_action(ident, g, v)))
            )
        for t in units:
            ti = F.inv(F.of(t))
            g = ((F.of(t), F.zero, F.zero), (F.zero, F.one, F.zero), (F.zero, F.zero, F.one))
            h = ((ti, F.zero, F.zero), (F.zero, F.one, F.zero), (F.zero, F.zero, F.one))
            gens.append(
                Generator(f"levi:diag({t})", fts.matrix_of(lambda v, g=g, h=h: fts.levi_dim2_action(g, h, v)))
            )
    else:
        raise UnsupportedAlgebraDim("Levi generators only for dim D in {1, 2}")
    for lam in units:
        if lam == 1:
            continue
        gens.append(
            Generator(f"torus({lam})", fts.matrix_of(lambda v, lam=F.of(lam): fts.torus_action(lam, v)))
        )
    return gens


class OmegaOrbit:
    """The singular-vector orbit over F_q as a sorted packed-key array."""

    def __init__(self, fts: FTS, keys: np.ndarray):
        self.fts = fts
        self.q = fts.field.p
        self.dim = fts.dim
        self.keys = keys  # sorted int64
        self._pows = self.q ** np.arange(self.dim, dtype=np.int64)

    @property
    def size(self) -> int:
        return int(self.keys.size)

    def pack(self, vectors: np.ndarray) -> np.ndarray:
        return (vectors.astype(np.int64) @ self._pows).astype(np.int64)

    def pack_one(self, v: FTSVector) -> int:
        return int(sum(int(c) * int(p) for c, p in zip(v, self._pows)))

    def unpack(self, keys: np.ndarray) -> np.ndarray:
        out = np.empty((keys.size, self.dim), dtype=np.int64)
        rest = keys.copy()
        for i in range(self.dim):
            out[:, i] = rest % self.q
            rest //= self.q
        return out

    def contains(self, v: FTSVector) -> bool:
        k = self.pack_one(v)
        i = np.searchsorted(self.keys, k)
        return bool(i < self.keys.size and self.keys[i] == k)

    def contains_keys(self, keys: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.keys, keys)
        idx = np.clip(idx, 0, self.keys.size - 1)
        return self.keys[idx] == keys


def _gen_arrays(fts: FTS, gens: Sequence[Generator]) -> List[np.ndarray]:
    return [np.array(g.matrix, dtype=np.float64).T for g in gens]


def matrix_orbit(
    fts: FTS,
    seeds: Sequence[FTSVector],
    gens: Sequence[Generator],
    max_states: Optional[int] = None,
    workers: int = 1,
    projective: bool = False,
) -> np.ndarray:
    """Sorted packed keys of the closure of the seeds under the generators.

    Generator application is batched matrix arithmetic; with workers > 1
    the frontier is split into contiguous slices whose results are merged
    with a deterministic sorted union, so the output does not depend on
    the worker count.

    With projective=True, states are scaled so their first nonzero
    coordinate is 1 before dedup.  That computes the closure of the seed
    lines; it returns the same point set as projective=False exactly when
    that closure is stable under nonzero scalars (the caller's burden --
    omega_bfs verifies it).  Output keys are then the full scalar sweep
    of the representatives.
    """
    q = fts.field.p
    n = fts.dim
    pows = (q ** np.arange(n, dtype=np.int64)).astype(np.float64)
    mats = _gen_arrays(fts, gens)
    itype = np.int16 if n * (q - 1) * (q - 1) < 32000 else np.int64
    inv_table = np.array([0] + [pow(c, q - 2, q) for c in range(1, q)], dtype=itype)
    total = q**n
    # Membership bookkeeping: one bit per state when the whole space fits
    # in 2 GiB of bits, otherwise a sorted key array with binary search.
    use_bits = total <= (1 << 34)
    if use_bits:
        bits = np.zeros(total // 8 + 1, dtype=np.uint8)

        def seen(keys: np.ndarray) -> np.ndarray:
            return ((bits[keys >> 3] >> (keys & 7).astype(np.uint8)) & 1) != 0

        def mark(keys: np.ndarray) -> None:
            np.bitwise_or.at(bits, keys >> 3, np.left_shift(1, (keys & 7)).astype(np.uint8))

    else:
        sorted_keys = np.empty(0, dtype=np.int64)

        def seen(keys: np.ndarray) -> np.ndarray:
            if not sorted_keys.size:
                return np.zeros(keys.shape, dtype=bool)
            idx = np.searchsorted(sorted_keys, keys)
            np.clip(idx, 0, sorted_keys.size - 1, out=idx)
            return sorted_keys[idx] == keys

        def mark(keys: np.ndarray) -> None:
            nonlocal sorted_keys
            merged = np.concatenate([sorted_keys, keys])
            merged.sort()
            sorted_keys = merged

    def normalize(img: np.ndarray) -> np.ndarray:
        lead = img[np.arange(img.shape[0]), np.argmax(img != 0, axis=1)]
        img = img * inv_table[lead][:, None]
        img %= q
        return img

    def expand_chunk(coords: np.ndarray) -> List[np.ndarray]:
        # The membership structure is only read here; it is mutated
        # between levels in the main thread, so concurrent reads are safe.
        found = []
        for M in mats:
            img = (coords @ M).astype(itype)
            img %= q
            if projective:
                img = normalize(img)
            keys = (img.astype(np.float64) @ pows).astype(np.int64)
            found.append(keys[~seen(keys)])
        return found

    def pack_seed(v: FTSVector) -> int:
        c = [int(t) for t in v]
        if projective:
            lead = next(t for t in c if t)
            c = [(t * pow(lead, q - 2, q)) % q for t in c]
        return sum(t * q**i for i, t in enumerate(c))

    seed_keys = np.unique(np.array([pack_seed(v) for v in seeds], dtype=np.int64))
    mark(seed_keys)
    levels = [seed_keys]
    frontier = seed_keys
    count = seed_keys.size
    while frontier.size:
        if max_states is not None and count > max_states:
            raise FrontierOverflow(f"orbit exceeded {max_states} states")
        coords = np.empty((frontier.size, n), dtype=np.int64)
        rest = frontier.copy()
        for i in range(n):
            coords[:, i] = rest % q
            rest //= q
        coords = coords.astype(np.float64)
        chunks = np.array_split(coords, max(1, workers))
        results: List[np.ndarray] = []
        if workers > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(expand_chunk, [c for c in chunks if c.size]):
                    results.extend(part)
        else:
            for c in chunks:
                if c.size:
                    results.extend(expand_chunk(c))
        results = [r for r in results if r.size]
        if not results:
            break
        candidates = np.unique(np.concatenate(results))
        new = candidates[~seen(candidates)]
        if new.size:
            mark(new)
            levels.append(new)
            count += new.size
        frontier = new
    visited = np.concatenate(levels)
    if projective:
        coords = np.empty((visited.size, n), dtype=np.int64)
        rest = visited.copy()
        for i in range(n):
            coords[:, i] = rest % q
            rest //= q
        sweeps = [visited]
        for c in range(2, q):
            scaled = (coords * c) % q
            sweeps.append((scaled.astype(np.float64) @ pows).astype(np.int64))
        visited = np.concatenate(sweeps)
    visited.sort()
    return visited


def omega_bfs(
    dim_d: int,
    q: int,
    max_states: Optional[int] = None,
    workers: int = 1,
    full_subgroups: bool = False,
    projective: Optional[bool] = None,
) -> OmegaOrbit:
    """Closure of (1,0,0,0) under the plus/minus unipotent generators.

    By default expansion uses the c = 1 generators only; u(c e) = u(e)^c,
    so the closure is identical to using every scalar multiple.  Pass
    full_subgroups=True to expand with all of them (slower, same result).

    When gcd(3, q-1) = 1 the search runs on scaled representatives and
    sweeps scalars back in afterwards: the generated group contains the
    grading torus (standard SL2 relations), which acts on the seed line
    by lambda^-3, and cubing is onto the units -- so every scalar
    multiple of an orbit point is an orbit point.  Set projective=False
    to force the plain search (same result, slower).
    """
    import math

    fts = build_fts(dim_d, q)
    if projective is None:
        projective = math.gcd(3, q - 1) == 1
    elif projective and math.gcd(3, q - 1) != 1:
        raise ValueError("projective search needs gcd(3, q-1) = 1")
    scalars = None if full_subgroups else [1]
    gens = unipotent_generators(fts, scalars=scalars)
    keys = matrix_orbit(
        fts, [fts.lowest()], gens, max_states=max_states, workers=workers, projective=projective
    )
    return OmegaOrbit(fts, keys)


def qd_orbit_partition(omega: OmegaOrbit, workers: int = 1) -> List[np.ndarray]:
    """Split the singular-vector set into the four flag-stabilizer orbits.

    Seeds: (1,0,0,0), (0,x,0,0), (0,0,x,0), (0,0,0,1) with x a fixed
    singular Jordan element; expansion uses u_plus and Levi generators
    only.  Raises PartitionMismatch if the classes overlap or fail to
    cover.
    """
    fts = omega.fts
    J = fts.J
    x = _first_singular(J)
    seeds = [
        fts.lowest(),
        fts.vector(0, x, J.zero, 0),
        fts.vector(0, J.zero, x, 0),
        fts.vector(0, J.zero, J.zero, 1),
    ]
    plus_only = []
    for i, e in enumerate(fts.J.basis()):
        plus_only.append(
            Generator(f"u+(e{i})", fts.matrix_of(lambda v, u=e: fts.u_plus_action(u, v)))
        )
    gens = plus_only + levi_generators(fts)
    classes = [matrix_orbit(fts, [s], gens, workers=workers) for s in seeds]
    total = sum(c.size for c in classes)
    union = np.unique(np.concatenate(classes))
    if total != union.size or union.size != omega.size or not np.array_equal(union, omega.keys):
        raise PartitionMismatch(
            f"classes sizes {[c.size for c in classes]} do not partition the orbit of size {omega.size}"
        )
    return classes


def nn_membership(omega: OmegaOrbit, y: JordanElement, z: JordanElement) -> bool:
    """Is (0, y, z, 0) a singular vector?  (y, z) must not both vanish."""
    J = omega.fts.J
    if J.is_zero(y) and J.is_zero(z):
        raise ValueError("(y, z) must be nonzero")
    return omega.contains(omega.fts.vector(0, y, z, 0))
