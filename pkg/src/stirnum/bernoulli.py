"""Bernoulli numbers and polynomials, computed along several independent routes.

``bernoulli_number`` uses the Stirling-sum form and is the production
route. The others (the double alternating sum, the binomial-convolution
definition of the polynomial, the difference-operator forms, the r-Stirling
form at integers and the generating function) are there to be checked
against it and against each other.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exactnum import (
    Polynomial,
    RationalLike,
    binomial,
    binomial_power,
    forward_difference,
    poly_eval,
    power,
)
from .series import TruncatedEGF, egf_coefficient, exp_series, series_div, series_mul
from .stirling import rstirling2, stirling2

__all__ = [
    "bernoulli_number",
    "bernoulli_number_double_sum",
    "bernoulli_polynomial",
    "bernoulli_polynomial_stirling",
    "bernoulli_nielsen",
    "bernoulli_todorov",
    "bernoulli_at_integer_rstirling",
    "bernoulli_gf_oracle",
    "alternating_shift_sum",
    "alternating_shift_polynomial",
    "bernoulli_gf_series",
    "stirling_shift_polynomial",
]


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def _weight(k: int) -> Fraction:
    return Fraction((-1) ** k * factorial(k), k + 1)


def bernoulli_number(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    _check_n(n)
    return sum((_weight(k) * stirling2(n, k) for k in range(n + 1)), Fraction(0))


def bernoulli_number_double_sum(n: int) -> Fraction:
    """B_n as ``sum_k 1/(k+1) sum_j C(k, j) (-1)**j j**n``; uses ``0**0 == 1``."""
    _check_n(n)
    total = Fraction(0)
    for k in range(n + 1):
        inner = sum(binomial(k, j) * (-1) ** j * power(j, n) for j in range(k + 1))
        total += Fraction(inner, k + 1)
    return total


def bernoulli_polynomial(n: int) -> Polynomial:
    """B_n(x) = sum_p C(n, p) B_p x**(n - p)."""
    _check_n(n)
    numbers = [bernoulli_number(p) for p in range(n + 1)]
    return Polynomial(binomial(n, i) * numbers[n - i] for i in range(n + 1))


def stirling_shift_polynomial(n: int, k: int, sign: int = 1) -> Polynomial:
    """``sum_p C(n, p) S(p, k) (sign)**p x**(n - p)`` as a polynomial in x."""
    return Polynomial(
        binomial(n, n - i) * stirling2(n - i, k) * sign ** (n - i) for i in range(n + 1)
    )


def bernoulli_polynomial_stirling(n: int) -> Polynomial:
    """B_n(x) assembled from the Stirling-sum form with the binomial shift in x."""
    _check_n(n)
    result = Polynomial()
    for k in range(n + 1):
        result = result + stirling_shift_polynomial(n, k) * _weight(k)
    return result


def alternating_shift_sum(n: int, k: int, x: RationalLike) -> Fraction:
    """``sum_j C(k, j) (-1)**j (x + j)**n`` at a rational point."""
    x = Fraction(x)
    return sum(
        (binomial(k, j) * (-1) ** j * power(x + j, n) for j in range(k + 1)), Fraction(0)
    )


def alternating_shift_polynomial(n: int, k: int) -> Polynomial:
    """``sum_j C(k, j) (-1)**j (x + j)**n`` as a polynomial in x."""
    result = Polynomial()
    for j in range(k + 1):
        result = result + binomial_power(j, n) * (binomial(k, j) * (-1) ** j)
    return result


def bernoulli_nielsen(n: int, x: RationalLike) -> Fraction:
    """B_n(x) from the double sum over ``(x + j)**n`` with exact rational powers."""
    _check_n(n)
    return sum(
        (alternating_shift_sum(n, k, x) / (k + 1) for k in range(n + 1)), Fraction(0)
    )


def bernoulli_todorov(n: int, x: RationalLike) -> Fraction:
    """B_n(x) as ``sum_k (-1)**k (Delta**k x**n)(x) / (k + 1)``."""
    _check_n(n)
    x = Fraction(x)
    return sum(
        (Fraction((-1) ** k, k + 1) * poly_eval(d, x) for k, d in enumerate(_monomial_differences(n))),
        Fraction(0),
    )


@lru_cache(maxsize=128)
def _monomial_differences(n: int) -> tuple[Polynomial, ...]:
    # Delta**k x**n for k = 0..n
    out = [Polynomial.monomial(n)]
    for _ in range(n):
        out.append(forward_difference(out[-1]))
    return tuple(out)


def bernoulli_at_integer_rstirling(n: int, r: int) -> Fraction:
    """B_n(r) for a non-negative integer r via r-Stirling numbers."""
    _check_n(n)
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    return sum((_weight(k) * rstirling2(r, n + r, k + r) for k in range(n + 1)), Fraction(0))


def bernoulli_gf_series(x: RationalLike, order: int) -> TruncatedEGF:
    """``t e^{xt} / (e^t - 1)`` truncated; the result has order ``order - 1``."""
    t = TruncatedEGF.variable(order)
    num = series_mul(t, exp_series(x, order))
    den = exp_series(1, order) - TruncatedEGF.one(order)
    return series_div(num, den)


def bernoulli_gf_oracle(n: int, x: RationalLike = 0, order: int | None = None) -> Fraction:
    """B_n(x) read off the generating function ``t e^{xt} / (e^t - 1)``.

    ``order`` defaults to ``n + 2``; the division drops one coefficient.
    """
    _check_n(n)
    if order is None:
        order = n + 2
    return egf_coefficient(bernoulli_gf_series(x, order), n)
