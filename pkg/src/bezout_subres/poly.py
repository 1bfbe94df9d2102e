"""Dense univariate polynomials over the rationals.

Coefficients are ``fractions.Fraction`` and are stored ascending: ``coeffs[i]``
is the coefficient of ``x**i``.  The zero polynomial has an empty coefficient
tuple and degree ``-inf`` so that ``deg(p*q) == deg(p) + deg(q)`` holds
without special cases.
"""
from __future__ import annotations

import math
import re
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, ZeroDivisorError

RationalLike = int | Fraction | str

NEG_INF = -math.inf

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats and decimal strings are refused: every input must be exact.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if m is None:
            raise ParseError(f"not an exact rational: {value!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise ParseError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _trim(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coeffs", _trim(as_rational(c) for c in coeffs))

    @classmethod
    def _raw(cls, coeffs: list[Fraction]) -> Poly:
        # trusted internal constructor: entries are already Fractions
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", tuple(coeffs))
        return p

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def const(cls, c: RationalLike) -> Poly:
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike], lead: RationalLike = 1) -> Poly:
        p = cls([lead])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: Poly) -> Poly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Poly) -> Poly:
        return _coerce(other) - self

    def __mul__(self, other: Poly) -> Poly:
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: RationalLike) -> Poly:
        c = as_rational(c)
        return Poly._raw([c * a for a in self.coeffs])

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisorError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        inv_lc = 1 / other.lc
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv_lc
            quot[i - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, t: RationalLike) -> Fraction:
        t = as_rational(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def monic(self) -> Poly:
        if self.is_zero():
            raise ZeroDivisorError("the zero polynomial has no monic associate")
        return self.scale(1 / self.lc)

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(p) -> Poly:
    if isinstance(p, Poly):
        return p
    return Poly([p])


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ZeroDivisorError("gcd(0, 0) is undefined")
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def format_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
