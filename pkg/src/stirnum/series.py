"""Truncated power series over exact rationals.

A :class:`TruncatedEGF` of order ``N`` stores the ordinary coefficients of
``t**0 .. t**(N-1)``. Exponential-generating-function values are read off
with :func:`egf_coefficient`, which rescales by ``n!``. Every binary
operation truncates to the smaller operand order, so a result never claims
more precision than its inputs carry.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .exactnum import Polynomial, RationalLike, binomial


class SeriesError(ValueError):
    """A series identity cannot be formed at the stored truncation."""


class TruncatedEGF:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike]):
        self._coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)

    @classmethod
    def zeros(cls, order: int) -> TruncatedEGF:
        return cls([0] * order)

    @classmethod
    def one(cls, order: int) -> TruncatedEGF:
        return cls.from_polynomial(Polynomial.constant(1), order)

    @classmethod
    def variable(cls, order: int) -> TruncatedEGF:
        """The series ``t``."""
        return cls.from_polynomial(Polynomial.x(), order)

    @classmethod
    def from_polynomial(cls, p: Polynomial | Sequence[RationalLike], order: int) -> TruncatedEGF:
        cs = p.coeffs if isinstance(p, Polynomial) else tuple(p)
        return cls([cs[i] if i < len(cs) else 0 for i in range(order)])

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        return self._coeffs[i]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all stored ones vanish."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return i
        return None

    def truncate(self, order: int) -> TruncatedEGF:
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return TruncatedEGF(self._coeffs[:order])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedEGF):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedEGF({[str(c) for c in self._coeffs]})"

    def __add__(self, other: TruncatedEGF) -> TruncatedEGF:
        return series_add(self, other)

    def __sub__(self, other: TruncatedEGF) -> TruncatedEGF:
        return series_add(self, -other)

    def __neg__(self) -> TruncatedEGF:
        return TruncatedEGF(-c for c in self._coeffs)

    def __mul__(self, other: TruncatedEGF | RationalLike) -> TruncatedEGF:
        if isinstance(other, TruncatedEGF):
            return series_mul(self, other)
        c = Fraction(other)
        return TruncatedEGF(c * a for a in self._coeffs)

    __rmul__ = __mul__

    def __truediv__(self, other: TruncatedEGF) -> TruncatedEGF:
        return series_div(self, other)


def series_add(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    n = min(a.order, b.order)
    return TruncatedEGF(a[i] + b[i] for i in range(n))


def series_mul(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    n = min(a.order, b.order)
    out = [Fraction(0)] * n
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n - i):
            out[i + j] += ai * b[j]
    return TruncatedEGF(out)


def series_div(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    """Truncated quotient ``a / b``.

    Both operands are shifted down by the valuation of ``b`` first, so the
    result has order ``min(a.order, b.order) - val(b)``. This is how the
    removable singularities in ``t / ln(1 + t)`` and friends are handled.
    """
    n = min(a.order, b.order)
    vb = b.truncate(n).valuation()
    if vb is None:
        raise SeriesError("division by a series that vanishes to the stored order")
    va = a.truncate(n).valuation()
    if va is not None and va < vb:
        raise SeriesError(f"numerator valuation {va} is below denominator valuation {vb}")
    num = a.coeffs[vb:n]
    den = b.coeffs[vb:n]
    m = n - vb
    inv_lead = 1 / den[0]
    out: list[Fraction] = []
    for i in range(m):
        acc = num[i]
        for j in range(1, i + 1):
            acc -= den[j] * out[i - j]
        out.append(acc * inv_lead)
    return TruncatedEGF(out)


def exp_series(a: RationalLike, order: int) -> TruncatedEGF:
    """``exp(a t)``: coefficients ``a**n / n!``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    a = Fraction(a)
    out = [Fraction(1)]
    for n in range(1, order):
        out.append(out[-1] * a / n)
    return TruncatedEGF(out)


def log1p_series(order: int) -> TruncatedEGF:
    """``ln(1 + t)``: coefficients ``0, 1, -1/2, 1/3, ...``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return TruncatedEGF([0] + [Fraction((-1) ** (n + 1), n) for n in range(1, order)])


def binomial_series(r: int, order: int) -> TruncatedEGF:
    """``(1 + t)**r`` for a non-negative integer ``r``."""
    if r < 0:
        raise ValueError("binomial_series needs r >= 0")
    return TruncatedEGF(binomial(r, i) for i in range(order))


def _require_zero_constant(inner: TruncatedEGF) -> None:
    if inner.order and inner[0] != 0:
        raise SeriesError("inner series must have zero constant term")


def compose(outer: TruncatedEGF, inner: TruncatedEGF) -> TruncatedEGF:
    """``outer(inner(t))`` by Horner's rule on truncated series."""
    _require_zero_constant(inner)
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncatedEGF.zeros(n)
    for c in reversed(outer.coeffs[:n]):
        acc = series_mul(acc, inner)
        acc = TruncatedEGF((acc[0] + c,) + acc.coeffs[1:])
    return acc


def polylog_series(q: int, inner: TruncatedEGF) -> TruncatedEGF:
    """``Li_q(inner) = sum_{m >= 1} inner**m / m**q`` to the order of ``inner``.

    Terms with ``m >= order`` vanish because ``inner**m`` has valuation at
    least ``m``.
    """
    if q < 1:
        raise ValueError(f"polylogarithm order must be >= 1, got {q}")
    _require_zero_constant(inner)
    n = inner.order
    acc = TruncatedEGF.zeros(n)
    p = TruncatedEGF.one(n)
    for m in range(1, n):
        p = series_mul(p, inner)
        acc = series_add(acc, p * Fraction(1, m ** q))
    return acc


def egf_coefficient(s: TruncatedEGF, n: int) -> Fraction:
    """``n! * [t**n] s``."""
    if n < 0:
        raise ValueError("coefficient index must be non-negative")
    if n >= s.order:
        raise SeriesError(f"index {n} exceeds truncation order {s.order}")
    return factorial(n) * s[n]


def sample_points(count: int) -> list[Fraction]:
    """Deterministic points ``0, 1, -1, 2, -2, 3, ...``."""
    pts = [Fraction(0)]
    k = 1
    while len(pts) < count:
        pts.append(Fraction(k))
        if len(pts) < count:
            pts.append(Fraction(-k))
        k += 1
    return pts[:count]


def interpolate(points: Sequence[RationalLike], values: Sequence[RationalLike]) -> Polynomial:
    """Lagrange interpolation through distinct ``points``."""
    if len(points) != len(values):
        raise ValueError("points and values differ in length")
    xs = [Fraction(p) for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must be distinct")
    result = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, values)):
        basis = Polynomial.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        result = result + basis * (Fraction(yi) / denom)
    return result
