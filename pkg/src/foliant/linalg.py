"""Tiny exact linear algebra over the rationals.

Matrices are tuples of row tuples of ``Fraction``; only the 2x2 and 3x3
cases needed by coordinate changes are implemented.  Everything is
immutable and pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Row = Tuple[Fraction, ...]
Matrix = Tuple[Row, ...]


def mat(rows: Iterable[Iterable]) -> Matrix:
    """Normalize nested iterables of numbers into a Fraction matrix."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b[0]), len(b)
    return tuple(
        tuple(sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m))
        for i in range(n)
    )


def matvec(a: Matrix, v: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def det(a: Matrix) -> Fraction:
    if len(a) == 1:
        return a[0][0]
    if len(a) == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if len(a) == 3:
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
    raise ValueError("det implemented for sizes 1..3 only")


def inverse(a: Matrix) -> Matrix:
    d = det(a)
    if d == 0:
        raise ZeroDivisionError("matrix is singular")
    if len(a) == 2:
        return mat([[a[1][1] / d, -a[0][1] / d], [-a[1][0] / d, a[0][0] / d]])
    if len(a) == 3:
        cof = [
            [
                (a[(i + 1) % 3][(j + 1) % 3] * a[(i + 2) % 3][(j + 2) % 3]
                 - a[(i + 1) % 3][(j + 2) % 3] * a[(i + 2) % 3][(j + 1) % 3])
                for j in range(3)
            ]
            for i in range(3)
        ]
        # adjugate is the transpose of the cofactor matrix built above
        return tuple(tuple(cof[j][i] / d for j in range(3)) for i in range(3))
    raise ValueError("inverse implemented for sizes 2 and 3 only")


def from_columns(cols: Sequence[Sequence[Fraction]]) -> Matrix:
    return transpose(mat(cols))


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """Matrix sending basis vector e_i to e_{perm[i]}."""
    n = len(perm)
    return tuple(
        tuple(Fraction(1) if perm[j] == i else Fraction(0) for j in range(n))
        for i in range(n)
    )
