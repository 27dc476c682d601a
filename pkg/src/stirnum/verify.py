"""Identity checks: each pits two independently computed routes against each
other over a parameter range and reports the first disagreement."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator, Union

from . import bernoulli as bn
from . import cauchy as cy
from . import polybernoulli as pb
from . import stirling as st
from .exactnum import (
    Polynomial,
    falling_factorial,
    format_rational,
    forward_difference,
    poly_eval,
)
from .series import egf_coefficient, sample_points

Value = Union[int, Fraction, Polynomial]

BRUTE_PARTITION_MAX_N = 11
BRUTE_PERMUTATION_MAX_N = 8

BERNOULLI_POINTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-7, 3))
POLYBERNOULLI_POINTS = (
    Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(2),
)


@dataclass(frozen=True)
class Bounds:
    max_n: int = 20
    max_k: int | None = None
    max_q: int = 4
    max_r: int = 4
    order: int | None = None

    def k_range(self, n: int) -> range:
        top = n if self.max_k is None else min(n, self.max_k)
        return range(top + 1)

    @property
    def gf_order(self) -> int:
        return self.order if self.order is not None else self.max_n + 2

    def as_dict(self) -> dict[str, int | None]:
        return {
            "max_n": self.max_n,
            "max_k": self.max_k,
            "max_q": self.max_q,
            "max_r": self.max_r,
            "order": self.gf_order,
        }


@dataclass(frozen=True)
class Check:
    """One cell: route ``a`` and route ``b`` evaluated at ``params``."""

    route_a: str
    route_b: str
    params: dict
    a: Value
    b: Value


@dataclass
class VerifyReport:
    identity: str
    range: dict
    status: str = "pass"
    checked: int = 0
    counterexample: list[dict] | None = field(default=None)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "range": self.range,
            "status": self.status,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


def _param_repr(v: object) -> object:
    if isinstance(v, Fraction):
        return format_rational(v)
    return v


def _record(sequence: str, params: dict, value: Fraction | int) -> dict:
    return {
        "sequence": sequence,
        "params": {k: _param_repr(v) for k, v in params.items()},
        "value": format_rational(value),
    }


def _disagreement(check: Check) -> list[dict] | None:
    a, b = check.a, check.b
    if isinstance(a, Polynomial) or isinstance(b, Polynomial):
        pa = a if isinstance(a, Polynomial) else Polynomial.constant(a)
        pb_ = b if isinstance(b, Polynomial) else Polynomial.constant(b)
        if pa == pb_:
            return None
        for i in range(max(len(pa.coeffs), len(pb_.coeffs))):
            if pa.coeff(i) != pb_.coeff(i):
                params = dict(check.params, coeff=i)
                return [_record(check.route_a, params, pa.coeff(i)),
                        _record(check.route_b, params, pb_.coeff(i))]
    if a == b:
        return None
    return [_record(check.route_a, check.params, a), _record(check.route_b, check.params, b)]


# --- identity generators ----------------------------------------------------


def _eq1_double_sum(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        yield Check("bernoulli", "bernoulli-double-sum", {"n": n},
                    bn.bernoulli_number(n), bn.bernoulli_number_double_sum(n))


def _eq2_vs_egf(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        yield Check("bernoulli", "bernoulli-egf", {"n": n},
                    bn.bernoulli_number(n), bn.bernoulli_gf_oracle(n, 0, b.gf_order))


def _eq3_vs_definition(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        yield Check("bernoulli-poly-definition", "bernoulli-poly-stirling", {"n": n},
                    bn.bernoulli_polynomial(n), bn.bernoulli_polynomial_stirling(n))


def _eq4(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        poly = bn.bernoulli_polynomial(n)
        for r in range(b.max_r + 1):
            yield Check("bernoulli-rstirling", "bernoulli-poly-eval", {"n": n, "r": r},
                        bn.bernoulli_at_integer_rstirling(n, r), poly_eval(poly, r))


def _eq5_broder(b: Bounds) -> Iterator[Check]:
    for r in range(b.max_r + 1):
        for n in range(b.max_n + 1):
            for k in b.k_range(n):
                yield Check("rstirling2", "rstirling2-broder", {"r": r, "n": n + r, "k": k + r},
                            st.rstirling2(r, n + r, k + r), st.rstirling2_via_broder(r, n, k))


def _eq6_nielsen(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        poly = bn.bernoulli_polynomial(n)
        for x in BERNOULLI_POINTS:
            nielsen = bn.bernoulli_nielsen(n, x)
            params = {"n": n, "x": x}
            yield Check("bernoulli-nielsen", "bernoulli-poly-eval", params, nielsen, poly_eval(poly, x))
            yield Check("bernoulli-nielsen", "bernoulli-todorov", params, nielsen, bn.bernoulli_todorov(n, x))


def _bernoulli_egf_poly(b: Bounds) -> Iterator[Check]:
    for x in sample_points(5):
        series = bn.bernoulli_gf_series(x, b.gf_order)
        for n in range(b.max_n + 1):
            yield Check("bernoulli-nielsen", "bernoulli-egf", {"n": n, "x": x},
                        bn.bernoulli_nielsen(n, x), egf_coefficient(series, n))


def _bernoulli_difference(b: Bounds) -> Iterator[Check]:
    for n in range(1, b.max_n + 1):
        yield Check("delta-bernoulli-poly", "n-x^(n-1)", {"n": n},
                    forward_difference(bn.bernoulli_polynomial(n)), Polynomial.monomial(n - 1, n))


def _lemma2_first(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        for k in b.k_range(n):
            yield Check("alternating-shift-sum", "stirling-shift-sum", {"n": n, "k": k},
                        bn.alternating_shift_polynomial(n, k),
                        bn.stirling_shift_polynomial(n, k) * ((-1) ** k * factorial(k)))


def _lemma2_second(b: Bounds) -> Iterator[Check]:
    for r in range(b.max_r + 1):
        for n in range(b.max_n + 1):
            for k in b.k_range(n):
                yield Check("alternating-shift-sum", "rstirling2", {"r": r, "n": n, "k": k},
                            st.rstirling2_sum_form(r, n, k),
                            (-1) ** k * factorial(k) * st.rstirling2(r, n + r, k + r))


def _stirling2_explicit(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        for k in b.k_range(n):
            yield Check("stirling2", "stirling2-explicit", {"n": n, "k": k},
                        st.stirling2(n, k), st.stirling2_explicit(n, k))


def _stirling2_brute(b: Bounds) -> Iterator[Check]:
    for n in range(min(b.max_n, BRUTE_PARTITION_MAX_N) + 1):
        for k in range(n + 1):
            yield Check("stirling2", "brute-partitions", {"n": n, "k": k},
                        st.stirling2(n, k), st.brute_partitions(n, k, 0))
        yield Check("stirling2-row-sum", "brute-bell", {"n": n},
                    sum(st.stirling2(n, k) for k in range(n + 1)), st.brute_bell(n))


def _rstirling2_brute(b: Bounds) -> Iterator[Check]:
    for r in range(b.max_r + 1):
        for n in range(min(b.max_n, BRUTE_PARTITION_MAX_N) + 1):
            for k in range(n + 1):
                yield Check("rstirling2", "brute-partitions", {"r": r, "n": n, "k": k},
                            st.rstirling2(r, n, k), st.brute_partitions(n, k, r))


def _stirling1_falling(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        ff = falling_factorial(n)
        for k in range(n + 1):
            yield Check("stirling1", "falling-factorial", {"n": n, "k": k},
                        st.stirling1_signed(n, k), ff.coeff(k))


def _rstirling1_brute(b: Bounds) -> Iterator[Check]:
    for r in range(b.max_r + 1):
        for n in range(min(b.max_n, BRUTE_PERMUTATION_MAX_N) + 1):
            for k in range(n + 1):
                yield Check("rstirling1-unsigned", "brute-cycles", {"r": r, "n": n, "k": k},
                            st.rstirling1_unsigned(r, n, k), st.brute_cycle_permutations(n, k, r))


def _qs(b: Bounds) -> range:
    return range(1, b.max_q + 1)


def _eq7_vs_prop4(b: Bounds) -> Iterator[Check]:
    for q in _qs(b):
        for n in range(b.max_n + 1):
            yield Check("polybernoulli", "polybernoulli-poly-constant", {"n": n, "q": q},
                        pb.polybernoulli_number(n, q), pb.polybernoulli_polynomial(n, q).coeff(0))


def _prop4_vs_bayad(b: Bounds) -> Iterator[Check]:
    for q in _qs(b):
        for n in range(b.max_n + 1):
            poly = pb.polybernoulli_polynomial(n, q)
            for x in POLYBERNOULLI_POINTS:
                yield Check("polybernoulli-poly-eval", "polybernoulli-bayad", {"n": n, "q": q, "x": x},
                            poly_eval(poly, x), pb.polybernoulli_bayad(n, q, x))


def _polybernoulli_gf(b: Bounds) -> Iterator[Check]:
    for q in _qs(b):
        for x in POLYBERNOULLI_POINTS:
            for n in range(b.max_n + 1):
                yield Check("polybernoulli-bayad", "polybernoulli-egf", {"n": n, "q": q, "x": x},
                            pb.polybernoulli_bayad(n, q, x), pb.polybernoulli_gf_oracle(n, q, x, b.gf_order))


def _cor5(b: Bounds) -> Iterator[Check]:
    for q in _qs(b):
        for n in range(b.max_n + 1):
            poly = pb.polybernoulli_polynomial(n, q)
            for r in range(b.max_r + 1):
                params = {"n": n, "q": q, "r": r}
                rform = pb.polybernoulli_at_negative_integer(n, q, r, route="rstirling")
                yield Check("polybernoulli-rstirling", "polybernoulli-stirling-braces", params,
                            rform, pb.polybernoulli_at_negative_integer(n, q, r, route="stirling"))
                yield Check("polybernoulli-rstirling", "polybernoulli-poly-eval", params,
                            rform, poly_eval(poly, -r))


def _polybernoulli_q1(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        yield Check("polybernoulli-poly-q1", "reflected-bernoulli-poly", {"n": n},
                    pb.polybernoulli_polynomial(n, 1), bn.bernoulli_polynomial(n).reflect() * (-1) ** n)


def _cauchy_integral(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        yield Check("cauchy", "cauchy-integral", {"n": n},
                    cy.cauchy_number(n), cy.cauchy_number_integral(n))


def _cauchy_egf(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        yield Check("cauchy", "cauchy-egf", {"n": n},
                    cy.cauchy_number(n), cy.cauchy_gf_oracle(n, b.gf_order))


def _polycauchy_q1(b: Bounds) -> Iterator[Check]:
    for n in range(b.max_n + 1):
        yield Check("polycauchy", "cauchy", {"n": n, "q": 1},
                    cy.poly_cauchy_number(n, 1), cy.cauchy_number(n))


def _komatsu_mezo(b: Bounds) -> Iterator[Check]:
    for r in range(b.max_r + 1):
        for n in range(b.max_n + 1):
            yield Check("cauchypoly-rstirling", "cauchypoly-egf", {"n": n, "r": r},
                        cy.cauchy_polynomial_at_integer(n, r),
                        cy.cauchy_polynomial_gf_oracle(n, r, b.gf_order))


IDENTITIES: dict[str, Callable[[Bounds], Iterator[Check]]] = {
    "eq1-double-sum": _eq1_double_sum,
    "eq2-vs-egf": _eq2_vs_egf,
    "eq3-vs-definition": _eq3_vs_definition,
    "eq4": _eq4,
    "eq5-broder": _eq5_broder,
    "eq6-nielsen": _eq6_nielsen,
    "bernoulli-egf": _bernoulli_egf_poly,
    "bernoulli-difference": _bernoulli_difference,
    "lemma2-first": _lemma2_first,
    "lemma2-second": _lemma2_second,
    "stirling2-explicit": _stirling2_explicit,
    "stirling2-brute": _stirling2_brute,
    "rstirling2-brute": _rstirling2_brute,
    "stirling1-falling": _stirling1_falling,
    "rstirling1-brute": _rstirling1_brute,
    "eq7-vs-prop4": _eq7_vs_prop4,
    "prop4-vs-bayad": _prop4_vs_bayad,
    "polybernoulli-gf": _polybernoulli_gf,
    "cor5": _cor5,
    "polybernoulli-q1": _polybernoulli_q1,
    "cauchy-integral": _cauchy_integral,
    "cauchy-egf": _cauchy_egf,
    "polycauchy-q1": _polycauchy_q1,
    "komatsu-mezo": _komatsu_mezo,
}


def run_identity(identity: str, bounds: Bounds | None = None) -> VerifyReport:
    """Run one identity over ``bounds``; stops at the first counterexample."""
    if identity not in IDENTITIES:
        raise KeyError(identity)
    bounds = bounds or Bounds()
    report = VerifyReport(identity=identity, range=bounds.as_dict())
    for check in IDENTITIES[identity](bounds):
        report.checked += 1
        bad = _disagreement(check)
        if bad is not None:
            report.status = "fail"
            report.counterexample = bad
            break
    return report


def run_all(identities: list[str] | None = None, bounds: Bounds | None = None) -> list[VerifyReport]:
    ids = list(IDENTITIES) if not identities or identities == ["all"] else identities
    return [run_identity(i, bounds) for i in ids]
