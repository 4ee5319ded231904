from fractions import Fraction

import pytest

from freudenthal.field import (
    QQ,
    DivisionByZero,
    FieldError,
    PrimeField,
)


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_prime_field_axioms(rng):
    for p in (2, 3, 5, 101):
        F = PrimeField(p)
        for _ in range(200):
            a, b, c = (F.of(rng.randrange(p)) for _ in range(3))
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.sub(F.add(a, b), b) == a
            if b != F.zero:
                assert F.mul(F.div(a, b), b) == a
                assert F.mul(b, F.inv(b)) == F.one


def test_canonical_residues():
    F = PrimeField(5)
    assert F.of(-1) == 4
    assert F.of(12) == 2
    assert sorted(F.elements()) == [0, 1, 2, 3, 4]


def test_division_by_zero():
    F = PrimeField(7)
    with pytest.raises(DivisionByZero):
        F.inv(F.zero)
    with pytest.raises(DivisionByZero):
        QQ.inv(QQ.zero)


def test_rationals_exact():
    a = QQ.of(1)
    third = QQ.div(a, QQ.of(3))
    assert third == Fraction(1, 3)
    assert QQ.add(third, QQ.mul(third, QQ.of(2))) == QQ.one
