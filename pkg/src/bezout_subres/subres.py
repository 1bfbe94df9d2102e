"""Subresultant polynomials from Bezout matrices in a general basis.

``bezout_subresultant`` is the main route.  ``sylvester_subresultant`` and
``root_based_subresultant`` are independent oracles: neither touches the
Bezout code, and both work purely in the power basis.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .basis import GeneralBasis, PolyInBasis, from_power
from .bezout import bezout_matrix_general, truncate_rows
from .detp import det_gauss, detp_general
from .errors import DegreeError, RootsError, ZeroDivisorError
from .poly import Poly, RationalLike, as_rational


@dataclass(frozen=True)
class SubresultantChain:
    basis: GeneralBasis
    polys: tuple[PolyInBasis, ...]  # polys[k] is S_k
    principals: tuple[Fraction, ...]  # principals[k] is the omega_k coefficient of S_k


def coefficient_c_omega(n: int, m: int, k: int, a_n: RationalLike) -> Fraction:
    """(-1)**C(n-k, 2) * a_n**(m-n); a genuine fraction since m < n."""
    a_n = as_rational(a_n)
    if a_n == 0:
        raise ZeroDivisorError("leading coefficient a_n must be nonzero")
    if not n > m >= k >= 0:
        raise DegreeError(f"need n > m >= k >= 0, got n={n}, m={m}, k={k}")
    sign = -1 if comb(n - k, 2) % 2 else 1
    return sign * a_n ** (m - n)


def _degrees(F: PolyInBasis, G: PolyInBasis) -> tuple[int, int]:
    n, m = F.degree, G.degree
    if G.degree < 0:
        raise DegreeError("G is the zero polynomial")
    if n <= m:
        raise DegreeError(
            f"need deg F > deg G, got {n} and {m}; reduce first, "
            "e.g. replace G by lc(F)*G - lc(G)*F"
        )
    return n, m


def bezout_subresultant(F: PolyInBasis, G: PolyInBasis, k: int) -> PolyInBasis:
    n, m = _degrees(F, G)
    if not 0 <= k <= m:
        raise DegreeError(f"k must be in 0..{m}, got {k}")
    B = bezout_matrix_general(F, G)
    return _subres_from_matrix(B, F, n, m, k)


def _subres_from_matrix(B, F: PolyInBasis, n: int, m: int, k: int) -> PolyInBasis:
    c = coefficient_c_omega(n, m, k, F.to_power().lc)
    d = detp_general(truncate_rows(B, k).rows, B.basis, k)
    return PolyInBasis(B.basis, [c * v for v in d.coeffs])


def subresultant_chain(F: PolyInBasis, G: PolyInBasis) -> SubresultantChain:
    n, m = _degrees(F, G)
    B = bezout_matrix_general(F, G)
    polys = tuple(_subres_from_matrix(B, F, n, m, k) for k in range(m + 1))
    principals = tuple(S[k] for k, S in enumerate(polys))
    return SubresultantChain(B.basis, polys, principals)


def gcd_via_subresultants(
    F: PolyInBasis, G: PolyInBasis, monic: bool = False
) -> tuple[int, PolyInBasis]:
    """Return (deg gcd, S_k) with k the first index whose principal is nonzero.

    S_k is a nonzero rational multiple of gcd(F, G); ``monic=True`` rescales
    it so that its power-basis form is monic.
    """
    chain = subresultant_chain(F, G)
    for k, s in enumerate(chain.principals):
        if s != 0:
            S = chain.polys[k]
            if monic:
                S = PolyInBasis(S.basis, [v / s for v in S.coeffs])
            return k, S
    # unreachable for deg F > deg G >= 0: s_m = lc(G)^(n-m) * ... != 0
    raise AssertionError("no nonzero principal subresultant")


def _detpol_rows(rows: list[list[Fraction]]) -> Poly:
    """Determinantal polynomial of an r x c matrix whose columns are x**(c-1)..x**0.

    One Gaussian pass on the first r-1 columns: row operations rescale every
    maximal minor by the same factor, so each det(first r-1 cols + col j) is
    the product of pivots times the reduced last-row entry.
    """
    r = len(rows)
    c = len(rows[0])
    A = [list(row) for row in rows]
    scale = Fraction(1)
    for col in range(r - 1):
        p = next((i for i in range(col, r) if A[i][col] != 0), None)
        if p is None:
            return Poly()
        if p != col:
            A[col], A[p] = A[p], A[col]
            scale = -scale
        scale *= A[col][col]
        for i in range(col + 1, r):
            f = A[i][col] / A[col][col]
            if f:
                for j in range(col, c):
                    A[i][j] -= f * A[col][j]
    last = A[r - 1]
    out = [Fraction(0)] * (c - r + 1)
    for j in range(r - 1, c):
        out[c - 1 - j] = scale * last[j]
    return Poly(out)


def sylvester_subresultant(F: Poly, G: Poly, k: int) -> Poly:
    """Classical k-th subresultant from the Sylvester-type submatrix.

    Rows x**(m-k-1) F, ..., F, x**(n-k-1) G, ..., G in descending powers of x.
    With this row order no extra sign is needed to agree with the roots-based
    normalisation c = (-1)**k a_n**(m-k) (checked for every n <= 7 shape).
    """
    n, m = F.degree, G.degree
    if G.is_zero() or not n > m >= k >= 0:
        raise DegreeError(f"need deg F > deg G >= k >= 0, got n={n}, m={m}, k={k}")
    width = n + m - k
    rows = []
    for shift in range(m - k - 1, -1, -1):
        rows.append(_shifted_row(F, shift, width))
    for shift in range(n - k - 1, -1, -1):
        rows.append(_shifted_row(G, shift, width))
    return _detpol_rows(rows)


def _shifted_row(p: Poly, shift: int, width: int) -> list[Fraction]:
    # descending powers x**(width-1) .. x**0 of x**shift * p
    return [p[width - 1 - j - shift] if width - 1 - j - shift >= 0 else Fraction(0)
            for j in range(width)]


def root_based_subresultant(
    roots: Sequence[RationalLike], a_n: RationalLike, G: Poly, k: int
) -> Poly:
    """S_k of F = a_n * prod(x - root) and G from the roots of F.

    The numerator determinant has x**k .. x**0 in its last column only; it is
    expanded along that column.  Roots must be pairwise distinct so that the
    Vandermonde denominator is nonzero.
    """
    alphas = [as_rational(r) for r in roots]
    a_n = as_rational(a_n)
    n = len(alphas)
    m = G.degree
    if len(set(alphas)) != n:
        raise RootsError("roots must be pairwise distinct")
    if a_n == 0:
        raise ZeroDivisorError("leading coefficient must be nonzero")
    if G.is_zero() or not n > m >= k >= 0:
        raise DegreeError(f"need n > deg G >= k >= 0, got n={n}, m={m}, k={k}")
    c = (-1) ** k * a_n ** (m - k)
    g_vals = [G(a) for a in alphas]
    top = [[a ** e * g for a, g in zip(alphas, g_vals)] for e in range(n - k - 1, -1, -1)]
    bottom = [[a ** e for a in alphas] for e in range(k, -1, -1)]
    vander = det_gauss([[a ** e for a in alphas] for e in range(n - 1, -1, -1)])
    size = n + 1
    out = [Fraction(0)] * (k + 1)
    for r in range(k + 1):
        # bottom row r carries x**(k-r) in the last column, at matrix row n-k+r
        row_idx = n - k + r
        minor = top + bottom[:r] + bottom[r + 1:]
        sign = -1 if (row_idx + size - 1) % 2 else 1
        out[k - r] = sign * det_gauss(minor)
    return Poly(c * v / vander for v in out)


def chain_in_power(F: Poly, G: Poly, basis: GeneralBasis) -> list[Poly]:
    """Convenience: Bezout chain of power-basis inputs, returned in power basis."""
    Fb, Gb = from_power(F, basis), from_power(G, basis)
    return [S.to_power() for S in subresultant_chain(Fb, Gb).polys]
