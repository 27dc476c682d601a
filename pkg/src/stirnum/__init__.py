"""Exact Bernoulli, poly-Bernoulli and Cauchy numbers with Stirling and
r-Stirling numbers of both kinds, each computed along several independent
routes that can be checked against one another."""
from .bernoulli import (
    bernoulli_at_integer_rstirling,
    bernoulli_gf_oracle,
    bernoulli_nielsen,
    bernoulli_number,
    bernoulli_polynomial,
    bernoulli_polynomial_stirling,
    bernoulli_todorov,
)
from .cauchy import (
    cauchy_gf_oracle,
    cauchy_number,
    cauchy_number_integral,
    cauchy_polynomial_at_integer,
    cauchy_polynomial_gf_oracle,
    poly_cauchy_number,
)
from .exactnum import (
    Polynomial,
    Rational,
    binomial,
    falling_factorial,
    finite_difference,
    format_rational,
    parse_rational,
    poly_eval,
)
from .polybernoulli import (
    polybernoulli_at_negative_integer,
    polybernoulli_bayad,
    polybernoulli_gf_oracle,
    polybernoulli_number,
    polybernoulli_polynomial,
)
from .series import SeriesError, TruncatedEGF
from .stirling import (
    brute_cycle_permutations,
    brute_partitions,
    rstirling1_signed,
    rstirling1_unsigned,
    rstirling2,
    rstirling2_via_broder,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
    stirling2_explicit,
)

__version__ = "0.1.0"

__all__ = [
    "SeriesError",
    "TruncatedEGF",
    "bernoulli_at_integer_rstirling",
    "bernoulli_gf_oracle",
    "bernoulli_nielsen",
    "bernoulli_number",
    "bernoulli_polynomial",
    "bernoulli_polynomial_stirling",
    "bernoulli_todorov",
    "cauchy_gf_oracle",
    "cauchy_number",
    "cauchy_number_integral",
    "cauchy_polynomial_at_integer",
    "cauchy_polynomial_gf_oracle",
    "poly_cauchy_number",
    "Polynomial",
    "Rational",
    "binomial",
    "falling_factorial",
    "finite_difference",
    "format_rational",
    "parse_rational",
    "poly_eval",
    "polybernoulli_at_negative_integer",
    "polybernoulli_bayad",
    "polybernoulli_gf_oracle",
    "polybernoulli_number",
    "polybernoulli_polynomial",
    "brute_cycle_permutations",
    "brute_partitions",
    "rstirling1_signed",
    "rstirling1_unsigned",
    "rstirling2",
    "rstirling2_via_broder",
    "stirling1_signed",
    "stirling1_unsigned",
    "stirling2",
    "stirling2_explicit",
]
