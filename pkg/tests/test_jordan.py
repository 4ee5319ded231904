import itertools
from fractions import Fraction

import pytest

from freudenthal.composition import CompositionAlgebra
from freudenthal.field import QQ, PrimeField
from freudenthal.jordan import (
    CharTwo,
    BadCharacteristic,
    JordanAlgebra,
    JordanSpan,
    NotTraceless,
    from_matrix3,
    to_matrix3,
)
from freudenthal.linalg import mat3_det


def jalg(dim, p=None):
    F = QQ if p is None else PrimeField(p)
    return JordanAlgebra(CompositionAlgebra(dim, F))


def random_x(J, rng):
    F = J.field
    if F.kind == "prime-field":
        return J.from_vector(tuple(F.of(rng.randrange(F.p)) for _ in range(J.dim)))
    return J.from_vector(tuple(F.of(rng.randrange(-9, 10)) for _ in range(J.dim)))


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_trilinear_symmetric_and_det_diagonal(dim, rng):
    J = jalg(dim, 101)
    for _ in range(100):
        X, Y, Z = (random_x(J, rng) for _ in range(3))
        vals = {
            J.trilinear(*perm)
            for perm in itertools.permutations((X, Y, Z))
        }
        assert len(vals) == 1
        assert J.jdet(X) == J.trilinear(X, X, X)


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
@pytest.mark.parametrize("p", [5, 101])
def test_division_free_det_agrees(dim, p, rng):
    J = jalg(dim, p)
    for _ in range(200):
        X = random_x(J, rng)
        assert J.jdet_division_free(X) == J.jdet(X)


def test_det_matches_classical_matrix_det_dim2():
    # J over F+F is isomorphic to 3x3 matrices; all 512 at p = 2 through
    # the division-free determinant.
    J = jalg(2, 2)
    F = J.field
    for bits in itertools.product((0, 1), repeat=9):
        X = J.from_vector(tuple(F.of(b) for b in bits))
        assert J.jdet_division_free(X) == mat3_det(F, to_matrix3(J, X))


def test_det_matches_classical_matrix_det_rational(rng):
    J = jalg(2)
    for _ in range(300):
        X = random_x(J, rng)
        assert J.jdet(X) == mat3_det(QQ, to_matrix3(J, X))
        assert J.jdet_division_free(X) == J.jdet(X)


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_adjoint_and_cross(dim, rng):
    J = jalg(dim, 101)
    for _ in range(100):
        X, Y = random_x(J, rng), random_x(J, rng)
        # X# o X = det(X) I
        assert J.eq(
            J.jordan_product(J.adjoint_sharp(X), X),
            J.scale(J.jdet(X), J.identity),
        )
        # cross is the polarization of the adjoint
        assert J.eq(J.cross(X, X), J.adjoint_sharp(X))
        lhs = J.adjoint_sharp(J.add(X, Y))
        rhs = J.add(
            J.add(J.adjoint_sharp(X), J.adjoint_sharp(Y)),
            J.scale(J.field.of(2), J.cross(X, Y)),
        )
        assert J.eq(lhs, rhs)


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
@pytest.mark.parametrize("p", [5, 101])
def test_cross_duality(dim, p, rng):
    # tr((u x y) o x) = 3 (x, y, u)
    J = jalg(dim, p)
    F = J.field
    three = F.of(3)
    for _ in range(200):
        x, y, u = (random_x(J, rng) for _ in range(3))
        lhs = J.trace_pairing(J.cross(u, y), x)
        assert lhs == F.mul(three, J.trilinear(x, y, u))


def test_singularity_requires_traceless():
    J = jalg(1, 5)
    with pytest.raises(NotTraceless):
        J.is_singular(J.identity)


def test_char_guards():
    J2 = jalg(1, 2)
    with pytest.raises(CharTwo):
        J2.jordan_product(J2.identity, J2.identity)
    J3 = jalg(1, 3)
    with pytest.raises(BadCharacteristic):
        J3.trilinear(J3.identity, J3.identity, J3.identity)


def test_singular_counts_dim1_q5():
    # traceless symmetric rank-one squares-to-zero: one per isotropic
    # line of x^2+y^2+z^2, scaled: (q+1)(q-1) nonzero elements at q = 5
    J = jalg(1, 5)
    count = sum(
        1
        for X in J.traceless_elements()
        if not J.is_zero(X) and J.is_zero(J.jmatrix_square(X))
    )
    assert count == 24


def test_amber_dim2_examples():
    J = jalg(2, 5)
    F = J.field

    def E(i, j):
        m = [[F.zero] * 3 for _ in range(3)]
        m[i - 1][j - 1] = F.one
        return from_matrix3(J, m)

    # both classical families of singular planes are amber
    assert J.is_amber(JordanSpan(J, [E(1, 3), E(2, 3)]))  # common kernel
    assert J.is_amber(JordanSpan(J, [E(1, 2), E(1, 3)]))  # common image
    # a pair of singular elements with non-singular span is not amber
    assert not J.is_amber(JordanSpan(J, [E(1, 2), E(2, 1)]))


def test_matrix3_roundtrip(rng):
    for p in (2, 5):
        for dim in (1, 2):
            J = jalg(dim, p)
            for _ in range(50):
                X = random_x(J, rng)
                assert J.eq(from_matrix3(J, to_matrix3(J, X)), X)
