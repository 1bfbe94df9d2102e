"""Small exact matrix helpers over Fraction (lists of lists)."""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def transpose(A: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = transpose(B)
    # skipping zero factors matters: transition matrices are triangular
    return [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in Bt]
            for row in A]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def is_unit_upper_triangular(A: Sequence[Sequence]) -> bool:
    n = len(A)
    return all(
        len(A[i]) == n and A[i][i] == 1 and all(A[i][j] == 0 for j in range(i))
        for i in range(n)
    )
