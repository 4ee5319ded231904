"""Rank-3 Jordan algebras of 3x3 Hermitian matrices over a split
composition algebra D.

An element is a pair (diag, off): diag = (a, b, c) field scalars, off =
(x, y, z) coordinate tuples in D, laid out as

    [[a,    x,    y ],
     [x̄,    b,    z ],
     [ȳ,    z̄,    c ]]

The symmetric trilinear form is normalized so that its cube diagonal is
the determinant: on the dim-2 algebra (where J is plain 3x3 matrices)
(X, X, X) equals the classical det.  With that anchor the sign on the
triple-trace term comes out positive:

    6(x,y,z) = 2tr(xyz) - tr(x)tr(yz) - tr(y)tr(zx) - tr(z)tr(xy)
               + tr(x)tr(y)tr(z).

Matrix squares and the trace pairing are division-free and work in every
characteristic; the trilinear form, adjoint and cross product need
characteristic >= 5.
"""

from __future__ import annotations

import itertools
from typing import Iterator, List, Sequence, Tuple

from .composition import CompositionAlgebra, Coords
from .field import Field, PrimeField
from .linalg import in_row_space, rank, rref

JordanElement = Tuple[Tuple, Tuple[Coords, Coords, Coords]]


class CharTwo(Exception):
    pass


class BadCharacteristic(Exception):
    pass


class NotTraceless(Exception):
    pass


class JordanAlgebra:
    """J_D: 3x3 Hermitian matrices over a composition algebra D."""

    def __init__(self, D: CompositionAlgebra):
        self.D = D
        self.field: Field = D.field
        self.dim = 3 + 3 * D.dim

    def __repr__(self):
        return f"JordanAlgebra(D={self.D!r})"

    def __eq__(self, other):
        return isinstance(other, JordanAlgebra) and other.D == self.D

    def __hash__(self):
        return hash(("JordanAlgebra", self.D))

    def _char_check(self, need: int):
        ch = self.field.characteristic
        if need == 2 and ch == 2:
            raise CharTwo("operation needs characteristic != 2")
        if need == 6 and ch in (2, 3):
            raise BadCharacteristic("operation needs characteristic >= 5")

    # -- constructors ---------------------------------------------------

    @property
    def zero(self) -> JordanElement:
        F, D = self.field, self.D
        return ((F.zero,) * 3, (D.zero, D.zero, D.zero))

    @property
    def identity(self) -> JordanElement:
        F, D = self.field, self.D
        return ((F.one,) * 3, (D.zero, D.zero, D.zero))

    def diag(self, a, b, c) -> JordanElement:
        F, D = self.field, self.D
        of = lambda v: F.of(v) if isinstance(v, int) else v
        return ((of(a), of(b), of(c)), (D.zero, D.zero, D.zero))

    def element(self, diag, off) -> JordanElement:
        F = self.field
        of = lambda v: F.of(v) if isinstance(v, int) else v
        return (tuple(of(v) for v in diag), tuple(tuple(of(c) for c in x) for x in off))

    # -- flat coordinates -----------------------------------------------

    def to_vector(self, X: JordanElement) -> tuple:
        (a, b, c), (x, y, z) = X
        return (a, b, c) + x + y + z

    def from_vector(self, v: Sequence) -> JordanElement:
        d = self.D.dim
        off = tuple(tuple(v[3 + i * d : 3 + (i + 1) * d]) for i in range(3))
        return (tuple(v[:3]), off)

    def basis(self) -> List[JordanElement]:
        F = self.field
        out = []
        for i in range(self.dim):
            v = [F.zero] * self.dim
            v[i] = F.one
            out.append(self.from_vector(v))
        return out

    # -- linear structure -------------------------------------------------

    def add(self, X: JordanElement, Y: JordanElement) -> JordanElement:
        (a, b, c), (x, y, z) = X
        (a2, b2, c2), (x2, y2, z2) = Y
        F, D = self.field, self.D
        return (
            (F.add(a, a2), F.add(b, b2), F.add(c, c2)),
            (D.add(x, x2), D.add(y, y2), D.add(z, z2)),
        )

    def sub(self, X: JordanElement, Y: JordanElement) -> JordanElement:
        return self.add(X, self.scale(self.field.neg(self.field.one), Y))

    def scale(self, s, X: JordanElement) -> JordanElement:
        (a, b, c), (x, y, z) = X
        F, D = self.field, self.D
        m = F.mul
        return ((m(s, a), m(s, b), m(s, c)), (D.scale(s, x), D.scale(s, y), D.scale(s, z)))

    def is_zero(self, X: JordanElement) -> bool:
        (a, b, c), (x, y, z) = X
        z0 = self.field.zero
        return a == z0 and b == z0 and c == z0 and all(self.D.is_zero(w) for w in (x, y, z))

    def eq(self, X: JordanElement, Y: JordanElement) -> bool:
        return self.is_zero(self.sub(X, Y))

    # -- full 3x3 matrix form ---------------------------------------------

    def as_matrix(self, X: JordanElement):
        """The Hermitian matrix with scalar diagonal embedded into D."""
        (a, b, c), (x, y, z) = X
        D = self.D
        e = lambda s: D.scale(s, D.one)
        xb, yb, zb = D.conj(x), D.conj(y), D.conj(z)
        return ((e(a), x, y), (xb, e(b), z), (yb, zb, e(c)))

    def mat_mul(self, M, N):
        D = self.D
        return tuple(
            tuple(
                D.add(D.add(D.mul(M[i][0], N[0][j]), D.mul(M[i][1], N[1][j])), D.mul(M[i][2], N[2][j]))
                for j in range(3)
            )
            for i in range(3)
        )

    def _mat_trace_scalar(self, M):
        """Sum of scalar parts of the diagonal; needs char != 2."""
        self._char_check(2)
        F, D = self.field, self.D
        half = F.inv(F.of(2))
        t = F.zero
        for i in range(3):
            t = F.add(t, F.mul(half, D.trace(M[i][i])))
        return t

    # -- squares, products, trace ------------------------------------------

    def jmatrix_square(self, X: JordanElement) -> JordanElement:
        """Entrywise matrix square; division-free, any characteristic."""
        (a, b, c), (x, y, z) = X
        F, D = self.field, self.D
        m = F.mul
        # (X^2)_ii = a_i^2 + N(row i off-diagonal entries): w wbar = N(w) 1.
        nx2, ny2, nz2 = (D.norm(w) for w in (x, y, z))
        da = F.add(m(a, a), F.add(nx2, ny2))
        db = F.add(m(b, b), F.add(nx2, nz2))
        dc = F.add(m(c, c), F.add(ny2, nz2))
        xq = D.add(D.scale(F.add(a, b), x), D.mul(y, D.conj(z)))
        yq = D.add(D.scale(F.add(a, c), y), D.mul(x, z))
        zq = D.add(D.scale(F.add(b, c), z), D.mul(D.conj(x), y))
        return ((da, db, dc), (xq, yq, zq))

    def jordan_product(self, X: JordanElement, Y: JordanElement) -> JordanElement:
        """X o Y = ((XY) + (YX)) / 2; characteristic != 2."""
        self._char_check(2)
        F = self.field
        half = F.inv(F.of(2))
        s = self.jmatrix_square(self.add(X, Y))
        s = self.sub(self.sub(s, self.jmatrix_square(X)), self.jmatrix_square(Y))
        return self.scale(half, s)

    def jtrace(self, X: JordanElement):
        (a, b, c), _ = X
        F = self.field
        return F.add(F.add(a, b), c)

    def trace_pairing(self, X: JordanElement, Y: JordanElement):
        """tr(XY) read as a scalar; division-free and symmetric."""
        (a, b, c), (x, y, z) = X
        (a2, b2, c2), (x2, y2, z2) = Y
        F, D = self.field, self.D
        t = F.add(F.add(F.mul(a, a2), F.mul(b, b2)), F.mul(c, c2))
        for w, w2 in ((x, x2), (y, y2), (z, z2)):
            t = F.add(t, D.norm_bilinear(w, w2))
        return t

    # -- cubic form and friends --------------------------------------------

    def trilinear(self, X: JordanElement, Y: JordanElement, Z: JordanElement):
        """The symmetric trilinear form with (X,X,X) = det X."""
        self._char_check(6)
        F = self.field
        MX, MY, MZ = (self.as_matrix(W) for W in (X, Y, Z))
        txyz = self._mat_trace_scalar(self.mat_mul(self.mat_mul(MX, MY), MZ))
        tx, ty, tz = (self.jtrace(W) for W in (X, Y, Z))
        txy = self.trace_pairing(X, Y)
        tyz = self.trace_pairing(Y, Z)
        tzx = self.trace_pairing(Z, X)
        m, a, s = F.mul, F.add, F.sub
        six = a(txyz, txyz)
        six = s(six, m(tx, tyz))
        six = s(six, m(ty, tzx))
        six = s(six, m(tz, txy))
        six = a(six, m(tx, m(ty, tz)))
        return F.mul(F.inv(F.of(6)), six)

    def jdet(self, X: JordanElement):
        return self.trilinear(X, X, X)

    def jdet_division_free(self, X: JordanElement):
        """det X = abc - a N(z) - b N(y) - c N(x) + tr(x z conj(y)).

        Agrees with jdet wherever trilinear is defined, and extends the
        determinant to characteristics 2 and 3."""
        (a, b, c), (x, y, z) = X
        F, D = self.field, self.D
        det = F.mul(F.mul(a, b), c)
        det = F.sub(det, F.mul(a, D.norm(z)))
        det = F.sub(det, F.mul(b, D.norm(y)))
        det = F.sub(det, F.mul(c, D.norm(x)))
        return F.add(det, D.trace(D.mul(D.mul(x, z), D.conj(y))))

    def sigma(self, X: JordanElement):
        """Second coefficient of the characteristic polynomial."""
        self._char_check(2)
        F = self.field
        t = self.jtrace(X)
        t2 = self.jtrace(self.jmatrix_square(X))
        return F.mul(F.inv(F.of(2)), F.sub(F.mul(t, t), t2))

    def adjoint_sharp(self, X: JordanElement) -> JordanElement:
        """X# = X^2 - tr(X) X + sigma(X) I, so tr(X# o Y) = 3(X,X,Y)."""
        self._char_check(6)
        F = self.field
        out = self.jmatrix_square(X)
        out = self.sub(out, self.scale(self.jtrace(X), X))
        out = self.add(out, self.scale(self.sigma(X), self.identity))
        return out

    def cross(self, X: JordanElement, Y: JordanElement) -> JordanElement:
        """Polarized adjoint: cross(X, X) = X#."""
        self._char_check(6)
        F = self.field
        half = F.inv(F.of(2))
        c = self.adjoint_sharp(self.add(X, Y))
        c = self.sub(self.sub(c, self.adjoint_sharp(X)), self.adjoint_sharp(Y))
        return self.scale(half, c)

    # -- singular and amber predicates ---------------------------------------

    def is_traceless(self, X: JordanElement) -> bool:
        return self.jtrace(X) == self.field.zero

    def is_singular(self, X: JordanElement) -> bool:
        if not self.is_traceless(X):
            raise NotTraceless("singularity is defined for traceless elements")
        return self.is_zero(self.jmatrix_square(X))

    def mult_image(self, X: JordanElement) -> List[tuple]:
        """Basis (flat row vectors) of the image of Y -> X o Y."""
        self._char_check(2)
        rows = [self.to_vector(self.jordan_product(X, B)) for B in self.basis()]
        return rref(rows, self.field)[0]

    def span_rank(self, elements: Sequence[JordanElement]) -> int:
        return rank([self.to_vector(X) for X in elements], self.field)

    def is_amber(self, span: "JordanSpan") -> bool:
        """Singular space contained in x o J_D for each of its points."""
        self._char_check(2)
        basis = span.basis
        for X in basis:
            if not self.is_singular(X):
                return False
        for X, Y in itertools.combinations(basis, 2):
            if not self.is_zero(self.jordan_product(X, Y)):
                return False
        vecs = [self.to_vector(X) for X in basis]
        for X in basis:
            image = self.mult_image(X)
            for v in vecs:
                if not in_row_space(v, image, self.field):
                    return False
        return True

    # -- enumeration -----------------------------------------------------

    def traceless_elements(self) -> Iterator[JordanElement]:
        if not isinstance(self.field, PrimeField):
            raise ValueError("can only enumerate over a finite field")
        p = self.field.p
        offs = list(itertools.product(range(p), repeat=self.D.dim))
        for a, b in itertools.product(range(p), repeat=2):
            c = (-a - b) % p
            for x in offs:
                for y in offs:
                    for z in offs:
                        yield ((a, b, c), (x, y, z))


class JordanSpan:
    """A 1- or 2-dimensional subspace given by an independent basis."""

    def __init__(self, J: JordanAlgebra, basis: Sequence[JordanElement]):
        if not 1 <= len(basis) <= 2:
            raise ValueError("span must have 1 or 2 basis elements")
        if J.span_rank(basis) != len(basis):
            raise ValueError("basis elements are linearly dependent")
        self.J = J
        self.basis = list(basis)


def to_matrix3(J: JordanAlgebra, X: JordanElement):
    """Concrete 3x3 matrix over the base field for dim D in {1, 2}.

    dim 1 gives the symmetric matrix itself; dim 2 uses the isomorphism
    of J_{F+F} with full 3x3 matrices (first component above the diagonal,
    second below).
    """
    (a, b, c), (x, y, z) = X
    if J.D.dim == 1:
        return ((a, x[0], y[0]), (x[0], b, z[0]), (y[0], z[0], c))
    if J.D.dim == 2:
        return ((a, x[0], y[0]), (x[1], b, z[0]), (y[1], z[1], c))
    raise ValueError("matrix form only for composition dimension 1 or 2")


def from_matrix3(J: JordanAlgebra, M) -> JordanElement:
    if J.D.dim == 1:
        if (M[0][1], M[0][2], M[1][2]) != (M[1][0], M[2][0], M[2][1]):
            raise ValueError("matrix is not symmetric")
        off = ((M[0][1],), (M[0][2],), (M[1][2],))
    elif J.D.dim == 2:
        off = ((M[0][1], M[1][0]), (M[0][2], M[2][0]), (M[1][2], M[2][1]))
    else:
        raise ValueError("matrix form only for composition dimension 1 or 2")
    return ((M[0][0], M[1][1], M[2][2]), off)
