"""Cayley quotient and Bezout matrices in the power basis and in general bases."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .basis import GeneralBasis, PolyInBasis, make_power_basis, transition_matrix
from .errors import BasisMismatchError, DegreeError
from .linalg import matmul, transpose
from .poly import Poly

Table = list[list[Fraction]]  # table[i][j] = coefficient of x**i * y**j


@dataclass(frozen=True)
class BezoutMatrix:
    """n x n symmetric matrix of the Cayley quotient in ``basis``.

    Rows and columns are indexed by omega_{n-1}, ..., omega_0.
    """

    n: int
    basis: GeneralBasis
    entries: tuple[tuple[Fraction, ...], ...]

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class TruncatedBezout:
    rows: tuple[tuple[Fraction, ...], ...]
    k: int
    basis: GeneralBasis


def cayley_numerator(F: Poly, G: Poly) -> Table:
    """Coefficient table of F(x)G(y) - F(y)G(x)."""
    size = max(len(F.coeffs), len(G.coeffs), 1)
    return [[F[i] * G[j] - F[j] * G[i] for j in range(size)] for i in range(size)]


def cayley_quotient(F: Poly, G: Poly) -> Table:
    """Coefficient table of (F(x)G(y) - F(y)G(x)) / (x - y), size n x n.

    Matching coefficients of x**i y**(j+1) in N = (x - y) C gives
    c[i][j] = c[i-1][j+1] - N[i][j+1].
    """
    N = cayley_numerator(F, G)
    n = len(N) - 1
    if n < 1:
        return []
    C = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            above = C[i - 1][j + 1] if i > 0 and j + 1 < n else Fraction(0)
            C[i][j] = above - N[i][j + 1]
    return C


def bezout_matrix_power(F: Poly, G: Poly) -> BezoutMatrix:
    n = F.degree
    if n < 1:
        raise DegreeError("F must have degree >= 1")
    if G.degree > n:
        raise DegreeError(f"deg G = {G.degree} exceeds deg F = {n}")
    C = cayley_quotient(F, G)
    entries = tuple(tuple(C[n - 1 - r][n - 1 - c] for c in range(n)) for r in range(n))
    return BezoutMatrix(n, make_power_basis(n), entries)


def _check_pair(F: PolyInBasis, G: PolyInBasis) -> None:
    if F.basis.omegas[: G.basis.size + 1] != G.basis.omegas[: F.basis.size + 1]:
        raise BasisMismatchError("F and G are expressed in different bases")


def bezout_matrix_general(F: PolyInBasis, G: PolyInBasis) -> BezoutMatrix:
    """Bezout matrix of F and G in their shared basis.

    With U the transition matrix (x_bar = U omega_bar), the bilinear form
    x_bar(x)^T B x_bar(y) equals omega_bar(x)^T (U^T B U) omega_bar(y).
    """
    _check_pair(F, G)
    basis = F.basis if F.basis.size >= G.basis.size else G.basis
    Fp, Gp = F.to_power(), G.to_power()
    B = bezout_matrix_power(Fp, Gp)
    n = B.n
    U = transition_matrix(basis, n)
    B_omega = matmul(matmul(transpose(U), B.rows()), U)
    return BezoutMatrix(n, basis, tuple(tuple(r) for r in B_omega))


def truncate_rows(B: BezoutMatrix, k: int) -> TruncatedBezout:
    if not 0 <= k < B.n:
        raise DegreeError(f"k must be in 0..{B.n - 1}, got {k}")
    return TruncatedBezout(B.entries[: B.n - k], k, B.basis)
