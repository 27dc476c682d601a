"""Poly-Bernoulli numbers and polynomials for positive integer index q."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bernoulli import stirling_shift_polynomial
from .exactnum import Polynomial, RationalLike, binomial, power
from .series import (
    TruncatedEGF,
    egf_coefficient,
    exp_series,
    polylog_series,
    series_div,
    series_mul,
)
from .stirling import rstirling2, rstirling2_via_broder, stirling2


def _check(n: int, q: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")


def _weight(k: int, q: int) -> Fraction:
    return Fraction((-1) ** k * factorial(k), (k + 1) ** q)


def polybernoulli_number(n: int, q: int) -> Fraction:
    """B_n^(q) = (-1)**n sum_k (-1)**k k! S(n, k) / (k + 1)**q."""
    _check(n, q)
    total = sum((_weight(k, q) * stirling2(n, k) for k in range(n + 1)), Fraction(0))
    return (-1) ** n * total


def polybernoulli_polynomial(n: int, q: int) -> Polynomial:
    """B_n^(q)(x) from the Stirling form with the reflected binomial shift."""
    _check(n, q)
    result = Polynomial()
    for k in range(n + 1):
        result = result + stirling_shift_polynomial(n, k, sign=-1) * _weight(k, q)
    return result


def polybernoulli_bayad(n: int, q: int, x: RationalLike) -> Fraction:
    """B_n^(q)(x) = sum_k (k + 1)**(-q) sum_j C(k, j) (-1)**j (x - j)**n."""
    _check(n, q)
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        inner = sum(
            (binomial(k, j) * (-1) ** j * power(x - j, n) for j in range(k + 1)), Fraction(0)
        )
        total += inner / (k + 1) ** q
    return total


def polybernoulli_at_negative_integer(n: int, q: int, r: int, *, route: str = "rstirling") -> Fraction:
    """B_n^(q)(-r) for a non-negative integer r.

    ``route="rstirling"`` sums over S_r(n + r, k + r); ``route="stirling"``
    uses the equivalent braced sum ``sum_p C(n, p) S(p, k) r**(n - p)``.
    """
    _check(n, q)
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    if route == "rstirling":
        inner = lambda k: rstirling2(r, n + r, k + r)  # noqa: E731
    elif route == "stirling":
        inner = lambda k: rstirling2_via_broder(r, n, k)  # noqa: E731
    else:
        raise ValueError(f"unknown route {route!r}")
    total = sum((_weight(k, q) * inner(k) for k in range(n + 1)), Fraction(0))
    return (-1) ** n * total


@lru_cache(maxsize=256)
def polybernoulli_gf_series(q: int, x: Fraction, order: int) -> TruncatedEGF:
    """``Li_q(1 - e^{-t}) / (1 - e^{-t}) * e^{xt}``; result order is ``order - 1``."""
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")
    u = TruncatedEGF.one(order) - exp_series(-1, order)
    ratio = series_div(polylog_series(q, u), u)
    return series_mul(ratio, exp_series(x, order))


def polybernoulli_gf_oracle(n: int, q: int, x: RationalLike = 0, order: int | None = None) -> Fraction:
    """B_n^(q)(x) from the polylogarithm generating function.

    ``order`` defaults to ``n + 2``, the smallest that survives the division.
    """
    _check(n, q)
    if order is None:
        order = n + 2
    return egf_coefficient(polybernoulli_gf_series(q, Fraction(x), order), n)
