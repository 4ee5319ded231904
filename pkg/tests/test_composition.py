import itertools

import pytest

from freudenthal.composition import CompositionAlgebra
from freudenthal.field import QQ, PrimeField


def random_elt(A, rng):
    F = A.field
    if F.kind == "prime-field":
        return tuple(F.of(rng.randrange(F.p)) for _ in range(A.dim))
    return tuple(F.of(rng.randrange(-9, 10)) for _ in range(A.dim))


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
@pytest.mark.parametrize("p", [2, 3, 5, 101])
def test_norm_multiplicative(dim, p, rng):
    F = PrimeField(p)
    A = CompositionAlgebra(dim, F)
    for _ in range(500):
        x, y = random_elt(A, rng), random_elt(A, rng)
        assert A.norm(A.mul(x, y)) == F.mul(A.norm(x), A.norm(y))


@pytest.mark.parametrize("dim", [1, 2, 4])
def test_norm_multiplicative_exhaustive_p2(dim):
    F = PrimeField(2)
    A = CompositionAlgebra(dim, F)
    elts = list(itertools.product((0, 1), repeat=dim))
    for x in elts:
        for y in elts:
            assert A.norm(A.mul(x, y)) == F.mul(A.norm(x), A.norm(y))


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_cayley_hamilton(dim, rng):
    # x^2 - tr(x) x + N(x) 1 = 0
    F = PrimeField(101)
    A = CompositionAlgebra(dim, F)
    one = A.one
    for _ in range(500):
        x = random_elt(A, rng)
        sq = A.mul(x, x)
        t, n = A.trace(x), A.norm(x)
        got = tuple(
            F.add(F.sub(s, F.mul(t, xi)), F.mul(n, o))
            for s, xi, o in zip(sq, x, one)
        )
        assert got == A.zero


def test_conjugation_antiautomorphism(rng):
    A = CompositionAlgebra(8, PrimeField(11))
    for _ in range(200):
        x, y = random_elt(A, rng), random_elt(A, rng)
        assert A.conj(A.mul(x, y)) == A.mul(A.conj(y), A.conj(x))
        assert A.conj(A.conj(x)) == x


def test_trace_norm_bilinear(rng):
    A = CompositionAlgebra(8, PrimeField(7))
    F = A.field
    for _ in range(200):
        x, y = random_elt(A, rng), random_elt(A, rng)
        # N(x + y) - N(x) - N(y) = <x, y>
        s = tuple(F.add(a, b) for a, b in zip(x, y))
        lhs = F.sub(F.sub(A.norm(s), A.norm(x)), A.norm(y))
        assert lhs == A.norm_bilinear(x, y)


def test_null_traceless_counts():
    # nonzero traceless square-zero octonions over F_q number q^6 - 1
    for q in (2, 3):
        A = CompositionAlgebra(8, PrimeField(q))
        count = sum(
            1
            for x in A.traceless_elements()
            if any(x) and A.mul(x, x) == A.zero
        )
        assert count == q**6 - 1


def test_rational_octonions(rng):
    A = CompositionAlgebra(8, QQ)
    for _ in range(50):
        x, y = random_elt(A, rng), random_elt(A, rng)
        assert A.norm(A.mul(x, y)) == QQ.mul(A.norm(x), A.norm(y))
