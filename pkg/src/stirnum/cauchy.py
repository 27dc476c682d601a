"""Cauchy numbers of the first kind, poly-Cauchy numbers, and Cauchy
polynomials at non-negative integer arguments."""
from __future__ import annotations

from fractions import Fraction

from .exactnum import falling_factorial
from .series import (
    TruncatedEGF,
    binomial_series,
    egf_coefficient,
    log1p_series,
    series_div,
    series_mul,
)
from .stirling import rstirling1_signed, stirling1_signed


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")


def cauchy_number(n: int) -> Fraction:
    """c_n = sum_k s(n, k) / (k + 1)."""
    _check_n(n)
    return sum((Fraction(stirling1_signed(n, k), k + 1) for k in range(n + 1)), Fraction(0))


def cauchy_number_integral(n: int) -> Fraction:
    """c_n as the integral of the falling factorial over [0, 1]."""
    _check_n(n)
    return falling_factorial(n).integrate(0, 1)


def cauchy_gf_oracle(n: int, order: int | None = None) -> Fraction:
    """c_n read off ``t / ln(1 + t)``; ``order`` defaults to ``n + 2``."""
    _check_n(n)
    if order is None:
        order = n + 2
    s = series_div(TruncatedEGF.variable(order), log1p_series(order))
    return egf_coefficient(s, n)


def poly_cauchy_number(n: int, q: int) -> Fraction:
    """c_n^(q) = sum_k s(n, k) / (k + 1)**q."""
    _check_n(n)
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")
    return sum(
        (Fraction(stirling1_signed(n, k), (k + 1) ** q) for k in range(n + 1)), Fraction(0)
    )


def cauchy_polynomial_at_integer(n: int, r: int) -> Fraction:
    """c_n(r) = sum_k s_r(n + r, k + r) / (k + 1)."""
    _check_n(n)
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    return sum(
        (Fraction(rstirling1_signed(r, n + r, k + r), k + 1) for k in range(n + 1)),
        Fraction(0),
    )


def cauchy_polynomial_gf_oracle(n: int, r: int, order: int | None = None) -> Fraction:
    """c_n(r) read off ``t / ((1 + t)**r ln(1 + t))``; ``order`` defaults to ``n + 2``."""
    _check_n(n)
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    if order is None:
        order = n + 2
    den = series_mul(binomial_series(r, order), log1p_series(order))
    s = series_div(TruncatedEGF.variable(order), den)
    return egf_coefficient(s, n)
