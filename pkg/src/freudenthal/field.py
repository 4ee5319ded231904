"""Exact scalar arithmetic: prime fields F_p and the rationals.

Elements of a prime field are canonical residues (plain ints in [0, p));
rational elements are `fractions.Fraction`.  The `Field` object carries the
arithmetic; hot loops elsewhere call its methods on raw values.  The thin
`Scalar` wrapper exists for code that wants operator syntax and descriptor
checking.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

Element = Union[int, Fraction]

MAX_PRIME = 2**31  # products of residues must fit in 64-bit intermediates


class FieldError(Exception):
    pass


class DivisionByZero(FieldError):
    pass


class MixedFields(FieldError):
    pass


class InfiniteField(FieldError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class Field:
    """Common interface; see PrimeField and Rationals."""

    kind: str

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return a == b

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def of(self, n: int):
        """Canonical image of the integer n."""
        raise NotImplementedError

    def elements(self) -> Iterator[Element]:
        raise NotImplementedError

    def scalar(self, n: int) -> "Scalar":
        return Scalar(self, self.of(n))


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p: int):
        if not (2 <= p < MAX_PRIME):
            raise ValueError(f"modulus out of range: {p}")
        if not _is_prime(p):
            raise ValueError(f"modulus not prime: {p}")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    @property
    def characteristic(self) -> int:
        return self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def of(self, n: int):
        return n % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))


class Rationals(Field):
    kind = "rationals"

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    @property
    def characteristic(self) -> int:
        return 0

    def add(self, a, b):
        return Fraction(a) + b

    def sub(self, a, b):
        return Fraction(a) - b

    def mul(self, a, b):
        return Fraction(a) * b

    def neg(self, a):
        return -Fraction(a)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(a)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, n: int):
        return Fraction(n)

    def elements(self):
        raise InfiniteField("cannot enumerate the rationals")


QQ = Rationals()


class Scalar:
    """A field element bundled with its field, with operator syntax."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Element):
        self.field = field
        self.value = value

    def _check(self, other: "Scalar"):
        if other.field != self.field:
            raise MixedFields(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        self._check(other)
        if other.value == self.field.zero:
            raise DivisionByZero("division by zero")
        return Scalar(self.field, self.field.div(self.value, other.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        self._check(other)
        return self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"Scalar({self.field!r}, {self.value})"


def field_arith(op: str, a: Scalar, b: Scalar | None = None):
    """Dispatch a named field operation; binary ops require b."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if b is None:
        raise ValueError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def enumerate_field(field: Field) -> Iterator[Element]:
    """All elements of a finite field in ascending residue order."""
    return field.elements()
