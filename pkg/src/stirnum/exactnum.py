"""Exact scalar and polynomial arithmetic.

Rationals are :class:`fractions.Fraction`, which is always kept normalized
(``gcd(|p|, q) == 1`` and ``q > 0``). Polynomials are dense, immutable and
canonical: trailing zero coefficients are never stored, so two polynomials
are equal exactly when their coefficient tuples are equal.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a normalized Fraction.

    Decimal and exponent notation are rejected; only exact forms are accepted.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(value: RationalLike) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@lru_cache(maxsize=None)
def _binomial(n: int, k: int) -> int:
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # exact at every step: result is C(n - k + i, i)
        result = result * (n - k + i) // i
    return result


def binomial(n: int, k: int) -> int:
    """Return C(n, k), or 0 when ``k < 0`` or ``k > n``."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return _binomial(n, k)


def power(base: RationalLike, exponent: int) -> RationalLike:
    """``base ** exponent`` with the combinatorial convention ``0 ** 0 == 1``."""
    if exponent == 0:
        return 1
    return base ** exponent


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> Polynomial:
        if n < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls([0] * n + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if i == 0:
                body = mag
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == "1" else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._coeffs), len(o._coeffs))
        return Polynomial(self.coeff(i) + o.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(o._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, a: RationalLike) -> Polynomial:
        """Return ``p(x + a)``."""
        a = Fraction(a)
        cs = self._coeffs
        apow = [Fraction(1)]
        for _ in range(len(cs)):
            apow.append(apow[-1] * a)
        return Polynomial(
            sum((binomial(j, i) * apow[j - i] * cs[j] for j in range(i, len(cs))), Fraction(0))
            for i in range(len(cs))
        )

    def reflect(self) -> Polynomial:
        """Return ``p(-x)``."""
        return Polynomial(c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs))

    def integrate(self, lo: RationalLike, hi: RationalLike) -> Fraction:
        """Exact definite integral over ``[lo, hi]``."""
        anti = Polynomial([0] + [c / (i + 1) for i, c in enumerate(self._coeffs)])
        return anti(hi) - anti(lo)

    def to_json(self) -> str:
        return json.dumps([format_rational(c) for c in self._coeffs])

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be an array")
        return cls(parse_rational(str(c)) for c in data)


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Evaluate ``p`` at ``x`` by Horner's rule."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def forward_difference(p: Polynomial) -> Polynomial:
    """One application of ``f(x) -> f(x + 1) - f(x)``."""
    cs = p.coeffs
    return Polynomial(
        sum((binomial(j, i) * cs[j] for j in range(i + 1, len(cs))), Fraction(0))
        for i in range(len(cs))
    )


def finite_difference(p: Polynomial, k: int) -> Polynomial:
    """Return the ``k``-fold forward difference of ``p``."""
    if k < 0:
        raise ValueError(f"difference order must be non-negative, got {k}")
    for _ in range(k):
        if p.is_zero():
            break
        p = forward_difference(p)
    return p


def finite_difference_expanded(p: Polynomial, k: int, x: RationalLike) -> Fraction:
    """Evaluate the ``k``-th difference at ``x`` from the binomial expansion
    ``sum_j C(k, j) (-1)**(k-j) p(x + j)``."""
    x = Fraction(x)
    return sum(
        (binomial(k, j) * (-1) ** (k - j) * poly_eval(p, x + j) for j in range(k + 1)),
        Fraction(0),
    )


def falling_factorial(n: int) -> Polynomial:
    """``x (x - 1) ... (x - n + 1)``; the constant 1 for ``n == 0``."""
    if n < 0:
        raise ValueError(f"falling factorial requires n >= 0, got {n}")
    result = Polynomial.constant(1)
    for i in range(n):
        result = result * Polynomial([-i, 1])
    return result


def binomial_power(shift: RationalLike, n: int) -> Polynomial:
    """``(x + shift)**n`` expanded by the binomial theorem."""
    shift = Fraction(shift)
    return Polynomial(binomial(n, i) * power(shift, n - i) for i in range(n + 1))

