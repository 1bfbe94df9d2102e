"""Monic degree-graded polynomial bases and conversions to/from powers of x.

A basis of size ``s`` is the list ``omegas[0..s]`` where ``omegas[i]`` is a
monic polynomial of degree exactly ``i`` (so ``omegas[0] == 1``).  Storage is
ascending by index; matrices that the paper lays out by descending degree are
built from descending views (see :func:`transition_matrix`).
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import BasisError, DegreeError
from .poly import Poly, RationalLike, as_rational

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class GeneralBasis:
    omegas: tuple[Poly, ...]
    kind: str = "custom"
    nodes: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        _validate(self.omegas)

    @property
    def size(self) -> int:
        return len(self.omegas) - 1

    def __getitem__(self, i: int) -> Poly:
        return self.omegas[i]


def _validate(omegas: Sequence[Poly]) -> None:
    if len(omegas) < 2:
        raise BasisError("a basis needs at least omega_0 and omega_1")
    for i, w in enumerate(omegas):
        if w.degree != i:
            raise BasisError(f"omega_{i} has degree {w.degree}, expected {i}")
        if w.lc != 1:
            raise BasisError(f"omega_{i} is not monic (leading coefficient {w.lc})")


@lru_cache(maxsize=64)
def make_power_basis(s: int) -> GeneralBasis:
    if s < 1:
        raise BasisError(f"basis size must be >= 1, got {s}")
    return GeneralBasis(tuple(Poly([0] * i + [1]) for i in range(s + 1)), kind="power")


def make_newton_basis(nodes: Sequence[RationalLike]) -> GeneralBasis:
    """Newton basis for nodes written in paper order ``(lam_s, ..., lam_1)``.

    ``omega_i = (x - lam_i) * omega_{i-1}``, so the *last* node is used first.
    """
    if len(nodes) == 0:
        raise BasisError("Newton basis needs at least one node")
    lams = [as_rational(v) for v in nodes]
    by_index = lams[::-1]  # by_index[i - 1] == lam_i
    omegas = [Poly([1])]
    for lam in by_index:
        omegas.append(omegas[-1] * Poly([-lam, 1]))
    return GeneralBasis(tuple(omegas), kind="newton", nodes=tuple(lams))


def make_custom_basis(omega_coeffs: Sequence[Sequence[RationalLike]]) -> GeneralBasis:
    """Validate explicit power-basis coefficient vectors (ascending) of each omega_i."""
    omegas = tuple(Poly(c) for c in omega_coeffs)
    return GeneralBasis(omegas, kind="custom")


@dataclass(frozen=True)
class PolyInBasis:
    basis: GeneralBasis
    coeffs: tuple[Fraction, ...] = field(default=())

    def __init__(self, basis: GeneralBasis, coeffs: Iterable[RationalLike]):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) > basis.size + 1:
            raise DegreeError(
                f"{len(cs)} coefficients do not fit a basis of size {basis.size}"
            )
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int | float:
        # valid because the basis is degree-graded
        return self.to_power().degree

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def to_power(self) -> Poly:
        return to_power(self)


def to_power(p: PolyInBasis) -> Poly:
    acc = Poly()
    for c, w in zip(p.coeffs, p.basis.omegas):
        if c:
            acc = acc + w.scale(c)
    return acc


def from_power(p: Poly, basis: GeneralBasis) -> PolyInBasis:
    if p.degree > basis.size:
        raise DegreeError(f"degree {p.degree} exceeds basis size {basis.size}")
    rest = p
    out = [Fraction(0)] * len(p.coeffs)
    while not rest.is_zero():
        d = rest.degree
        c = rest.lc
        out[d] = c
        rest = rest - basis.omegas[d].scale(c)
    return PolyInBasis(basis, out)


def basis_matrix(basis: GeneralBasis, dim: int) -> Matrix:
    """Unit upper triangular W with ``omega_bar = W @ x_bar``.

    Both vectors are ordered by descending degree, length ``dim``.
    """
    _check_dim(basis, dim)
    W = [[Fraction(0)] * dim for _ in range(dim)]
    for r in range(dim):
        w = basis.omegas[dim - 1 - r]
        for c in range(dim):
            W[r][c] = w[dim - 1 - c]
    return W


def transition_matrix(basis: GeneralBasis, dim: int) -> Matrix:
    """Unit upper triangular U with ``x_bar = U @ omega_bar`` (descending order).

    Row ``r`` holds the omega-coordinates of ``x**(dim-1-r)``, found by
    back-substitution against the triangular omega coefficient vectors.
    """
    _check_dim(basis, dim)
    return [list(row) for row in _transition_rows(basis, dim)]


@lru_cache(maxsize=256)
def _transition_rows(basis: GeneralBasis, dim: int) -> tuple[tuple[Fraction, ...], ...]:
    rows = []
    for r in range(dim):
        coords = from_power(Poly([0] * (dim - 1 - r) + [1]), basis)
        rows.append(tuple(coords[dim - 1 - c] for c in range(dim)))
    return tuple(rows)


def _check_dim(basis: GeneralBasis, dim: int) -> None:
    if not 1 <= dim <= basis.size + 1:
        raise DegreeError(f"dim must be in 1..{basis.size + 1}, got {dim}")
