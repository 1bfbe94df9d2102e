"""Exact determinants and determinantal polynomials in a general basis."""
from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

from .basis import GeneralBasis, PolyInBasis
from .errors import DegreeError, ShapeError
from .poly import Poly

Matrix = list[list[Fraction]]
PolyMatrix = list[list[Poly]]

# det_polymatrix switches from cofactor expansion to fraction-free elimination here
_COFACTOR_LIMIT = 6


def _check_square(M: Sequence[Sequence]) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ShapeError(f"determinant of a non-square {n}x{len(M[0]) if n else 0} matrix")
    return n


def _bareiss_int(A: list[list[int]]) -> int:
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        row_k = A[k]
        for i in range(k + 1, n):
            row_i = A[i]
            a_ik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - a_ik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def det_exact(M: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by Bareiss elimination on a denominator-cleared integer copy."""
    _check_square(M)
    scale = Fraction(1)
    A = []
    for row in M:
        row = [Fraction(v) for v in row]
        den = math.lcm(*(v.denominator for v in row)) if row else 1
        scale *= den
        A.append([v.numerator * (den // v.denominator) for v in row])
    return Fraction(_bareiss_int(A)) / scale


def det_gauss(M: Sequence[Sequence[Fraction]]) -> Fraction:
    """Plain rational Gaussian elimination; the cross-check for :func:`det_exact`."""
    n = _check_square(M)
    A = [[Fraction(v) for v in row] for row in M]
    det = Fraction(1)
    for k in range(n):
        p = next((r for r in range(k, n) if A[r][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            A[k], A[p] = A[p], A[k]
            det = -det
        det *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return det


def detp_general(M: Sequence[Sequence[Fraction]], basis: GeneralBasis, k: int) -> PolyInBasis:
    """Sum over i = 0..k of det(first s-k-1 columns + column s-i) * omega_i.

    ``M`` has shape (s-k) x s.  Column ``s-i`` in 1-based counting is index
    ``s-i-1`` here.
    """
    rows = len(M)
    s = len(M[0]) if rows else 0
    if any(len(r) != s for r in M):
        raise ShapeError("ragged matrix")
    if not 0 <= k < s or rows != s - k:
        raise ShapeError(f"expected shape (s-k)x s with 0 <= k < s, got {rows}x{s}, k={k}")
    if s > basis.size + 1:
        raise ShapeError(f"{s} columns need a basis of size >= {s - 1}, got {basis.size}")
    lead = s - k - 1
    coeffs = []
    for i in range(k + 1):
        col = s - i - 1
        sub = [list(row[:lead]) + [row[col]] for row in M]
        coeffs.append(det_exact(sub))
    return PolyInBasis(basis, coeffs)


def x_block(basis: GeneralBasis, n: int, k: int) -> PolyMatrix:
    """The k x n block stacked under an (n-k) x n matrix to turn detp into a det.

    The row for omega_i (i = k..1) has -1 in 0-based column n-i-1 and omega_i
    in the last column.  k = 0 gives an empty block.
    """
    if not 0 <= k < n:
        raise DegreeError(f"need 0 <= k < n, got k={k}, n={n}")
    if k > basis.size:
        raise DegreeError(f"omega_{k} is not in a basis of size {basis.size}")
    block = []
    for i in range(k, 0, -1):
        row = [Poly() for _ in range(n)]
        row[n - i - 1] = Poly([-1])
        row[n - 1] = basis.omegas[i]
        block.append(row)
    return block


def _det_poly_cofactor(M: PolyMatrix) -> Poly:
    n = len(M)
    if n == 0:
        return Poly([1])
    if n == 1:
        return M[0][0]
    acc = Poly()
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _det_poly_cofactor(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _det_poly_bareiss(M: PolyMatrix) -> Poly:
    A = [list(row) for row in M]
    n = len(A)
    sign = 1
    prev = Poly([1])
    for k in range(n - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, n):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return Poly()
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * A[i][j] - A[i][k] * A[k][j]
                q, r = divmod(num, prev)
                assert r.is_zero(), "Bareiss division must be exact"
                A[i][j] = q
            A[i][k] = Poly()
        prev = pivot
    return A[n - 1][n - 1] if sign > 0 else -A[n - 1][n - 1]


def det_polymatrix(M: Sequence[Sequence[Poly]]) -> Poly:
    n = _check_square(M)
    rows = [list(r) for r in M]
    if n < _COFACTOR_LIMIT:
        return _det_poly_cofactor(rows)
    return _det_poly_bareiss(rows)
