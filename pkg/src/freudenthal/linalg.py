"""Tiny exact linear algebra over a Field: rref, rank, membership."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .field import Field


def rref(rows: Sequence[Sequence], field: Field) -> Tuple[List[tuple], List[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != field.zero:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, v) for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != field.zero:
                f = mat[i][c]
                mat[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows: Sequence[Sequence], field: Field) -> int:
    return len(rref(rows, field)[0])


def in_row_space(vec: Sequence, rows: Sequence[Sequence], field: Field) -> bool:
    """Is vec a linear combination of the given rows?"""
    base = rank(rows, field)
    return rank(list(rows) + [list(vec)], field) == base


# -- 3x3 matrices as nested tuples over a Field ------------------------------


def mat3_mul(field: Field, A, B):
    m, a = field.mul, field.add
    return tuple(
        tuple(a(a(m(A[i][0], B[0][j]), m(A[i][1], B[1][j])), m(A[i][2], B[2][j])) for j in range(3))
        for i in range(3)
    )


def mat3_transpose(A):
    return tuple(tuple(A[j][i] for j in range(3)) for i in range(3))


def mat3_det(field: Field, A):
    m, a, s = field.mul, field.add, field.sub
    d = m(A[0][0], s(m(A[1][1], A[2][2]), m(A[1][2], A[2][1])))
    d = s(d, m(A[0][1], s(m(A[1][0], A[2][2]), m(A[1][2], A[2][0]))))
    return a(d, m(A[0][2], s(m(A[1][0], A[2][1]), m(A[1][1], A[2][0]))))


def mat3_adj(field: Field, A):
    """Adjugate: A * adj(A) = det(A) * I."""
    m, s = field.mul, field.sub
    cof = [[None] * 3 for _ in range(3)]
    idx = ((1, 2), (0, 2), (0, 1))
    for i in range(3):
        for j in range(3):
            r0, r1 = idx[i]
            c0, c1 = idx[j]
            minor = s(m(A[r0][c0], A[r1][c1]), m(A[r0][c1], A[r1][c0]))
            cof[i][j] = minor if (i + j) % 2 == 0 else field.neg(minor)
    return tuple(tuple(cof[j][i] for j in range(3)) for i in range(3))


def mat3_inv(field: Field, A):
    d = mat3_det(field, A)
    dinv = field.inv(d)
    adj = mat3_adj(field, A)
    return tuple(tuple(field.mul(dinv, v) for v in row) for row in adj)


def mat3_identity(field: Field):
    o, z = field.one, field.zero
    return ((o, z, z), (z, o, z), (z, z, o))
