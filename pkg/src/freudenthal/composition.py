"""Split composition algebras of dimension 1, 2, 4, 8.

Elements are flat tuples of raw field values:

  dim 1:  (x,)                       the base field itself
  dim 2:  (a, b)                     F + F, componentwise product
  dim 4:  (a, b, c, d)               2x2 matrices [[a, b], [c, d]]
  dim 8:  (a, v1, v2, v3, w1, w2, w3, b)
          vector matrices [[a, v], [w, b]], v, w in F^3

The dim-8 product uses the cross-product sign convention under which the
norm is multiplicative; that law is what the test suite pins down, not the
formula text.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Tuple

from .field import Field, PrimeField

Coords = Tuple


class MixedAlgebras(Exception):
    pass


class CompositionAlgebra:
    """Split composition algebra of dimension 1, 2, 4 or 8 over a field."""

    def __init__(self, dim: int, field: Field):
        if dim not in (1, 2, 4, 8):
            raise ValueError(f"not a composition dimension: {dim}")
        self.dim = dim
        self.field = field

    def __repr__(self):
        return f"CompositionAlgebra(dim={self.dim}, field={self.field!r})"

    def __eq__(self, other):
        return (
            isinstance(other, CompositionAlgebra)
            and other.dim == self.dim
            and other.field == self.field
        )

    def __hash__(self):
        return hash(("CompositionAlgebra", self.dim, self.field))

    # -- constructors -------------------------------------------------

    @property
    def zero(self) -> Coords:
        return (self.field.zero,) * self.dim

    @property
    def one(self) -> Coords:
        F = self.field
        if self.dim == 1:
            return (F.one,)
        if self.dim == 2:
            return (F.one, F.one)
        if self.dim == 4:
            return (F.one, F.zero, F.zero, F.one)
        return (F.one, F.zero, F.zero, F.zero, F.zero, F.zero, F.zero, F.one)

    def basis(self):
        """Coordinate basis vectors, in coordinate order."""
        F = self.field
        out = []
        for i in range(self.dim):
            e = [F.zero] * self.dim
            e[i] = F.one
            out.append(tuple(e))
        return out

    def element(self, *coords) -> Coords:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates")
        return tuple(self.field.of(c) if isinstance(c, int) else c for c in coords)

    def scale(self, c, x: Coords) -> Coords:
        m = self.field.mul
        return tuple(m(c, xi) for xi in x)

    def add(self, x: Coords, y: Coords) -> Coords:
        a = self.field.add
        return tuple(a(xi, yi) for xi, yi in zip(x, y))

    def sub(self, x: Coords, y: Coords) -> Coords:
        s = self.field.sub
        return tuple(s(xi, yi) for xi, yi in zip(x, y))

    def neg(self, x: Coords) -> Coords:
        n = self.field.neg
        return tuple(n(xi) for xi in x)

    # -- product, conjugation, trace, norm -----------------------------

    def mul(self, x: Coords, y: Coords) -> Coords:
        if len(x) != self.dim or len(y) != self.dim:
            raise MixedAlgebras("coordinate count does not match algebra dim")
        F = self.field
        m, a, s = F.mul, F.add, F.sub
        if self.dim == 1:
            return (m(x[0], y[0]),)
        if self.dim == 2:
            return (m(x[0], y[0]), m(x[1], y[1]))
        if self.dim == 4:
            return (
                a(m(x[0], y[0]), m(x[1], y[2])),
                a(m(x[0], y[1]), m(x[1], y[3])),
                a(m(x[2], y[0]), m(x[3], y[2])),
                a(m(x[2], y[1]), m(x[3], y[3])),
            )
        # Zorn vector matrices.
        xa, xv, xw, xb = x[0], x[1:4], x[4:7], x[7]
        ya, yv, yw, yb = y[0], y[1:4], y[4:7], y[7]

        def dot(u, v):
            return a(a(m(u[0], v[0]), m(u[1], v[1])), m(u[2], v[2]))

        def cross(u, v):
            return (
                s(m(u[1], v[2]), m(u[2], v[1])),
                s(m(u[2], v[0]), m(u[0], v[2])),
                s(m(u[0], v[1]), m(u[1], v[0])),
            )

        za = a(m(xa, ya), dot(xv, yw))
        zb = a(m(xb, yb), dot(xw, yv))
        cvv = cross(xv, yv)
        cww = cross(xw, yw)
        zv = tuple(
            s(a(m(xa, yv[i]), m(yb, xv[i])), cww[i]) for i in range(3)
        )
        zw = tuple(
            a(a(m(ya, xw[i]), m(xb, yw[i])), cvv[i]) for i in range(3)
        )
        return (za,) + zv + zw + (zb,)

    def conj(self, x: Coords) -> Coords:
        n = self.field.neg
        if self.dim == 1:
            return x
        if self.dim == 2:
            return (x[1], x[0])
        if self.dim == 4:
            return (x[3], n(x[1]), n(x[2]), x[0])
        return (x[7],) + tuple(n(c) for c in x[1:7]) + (x[0],)

    def trace(self, x: Coords):
        F = self.field
        if self.dim == 1:
            return F.add(x[0], x[0])
        if self.dim == 2:
            return F.add(x[0], x[1])
        if self.dim == 4:
            return F.add(x[0], x[3])
        return F.add(x[0], x[7])

    def norm(self, x: Coords):
        F = self.field
        m, s = F.mul, F.sub
        if self.dim == 1:
            return m(x[0], x[0])
        if self.dim == 2:
            return m(x[0], x[1])
        if self.dim == 4:
            return s(m(x[0], x[3]), m(x[1], x[2]))
        dot = F.add(F.add(m(x[1], x[4]), m(x[2], x[5])), m(x[3], x[6]))
        return s(m(x[0], x[7]), dot)

    def norm_bilinear(self, x: Coords, y: Coords):
        """Polarization N(x+y) - N(x) - N(y)."""
        F = self.field
        nxy = self.norm(self.add(x, y))
        return F.sub(F.sub(nxy, self.norm(x)), self.norm(y))

    def is_zero(self, x: Coords) -> bool:
        z = self.field.zero
        return all(c == z for c in x)

    def is_null_traceless(self, x: Coords) -> bool:
        """Traceless with vanishing square (equivalently trace and norm zero)."""
        z = self.field.zero
        return self.trace(x) == z and self.norm(x) == z

    # -- enumeration ----------------------------------------------------

    def elements(self) -> Iterator[Coords]:
        if not isinstance(self.field, PrimeField):
            raise ValueError("can only enumerate over a finite field")
        return itertools.product(range(self.field.p), repeat=self.dim)

    def traceless_elements(self) -> Iterator[Coords]:
        """All x with trace(x) = 0, over a finite field."""
        if not isinstance(self.field, PrimeField):
            raise ValueError("can only enumerate over a finite field")
        p = self.field.p
        if self.dim == 1:
            if p == 2:
                yield from ((c,) for c in range(2))
            else:
                yield (0,)
            return
        for rest in itertools.product(range(p), repeat=self.dim - 1):
            if self.dim == 2:
                yield (rest[0], -rest[0] % p)
            elif self.dim == 4:
                yield (rest[0], rest[1], rest[2], -rest[0] % p)
            else:
                yield (rest[0],) + rest[1:] + (-rest[0] % p,)
