from fractions import Fraction as F

import pytest

from stirnum import bernoulli as bn
from stirnum.exactnum import Polynomial, binomial_power, finite_difference, poly_eval
from stirnum.series import sample_points

# reference values from an independent symbolic package
KNOWN_B = [1, F(-1, 2), F(1, 6), 0, F(-1, 30), 0, F(1, 42), 0, F(-1, 30), 0, F(5, 66), 0, F(-691, 2730)]
B30 = F(8615841276005, 14322)
B40 = F(-261082718496449122051, 13530)

POINTS = [F(0), F(1), F(-1), F(1, 2), F(-7, 3)]


def test_first_numbers():
    assert [bn.bernoulli_number(n) for n in range(4)] == [1, F(-1, 2), F(1, 6), 0]
    assert [bn.bernoulli_number(n) for n in range(13)] == KNOWN_B
    assert bn.bernoulli_number(30) == B30
    assert bn.bernoulli_number(40) == B40


@pytest.mark.parametrize("n", range(31))
def test_double_sum_matches_stirling_form(n):
    assert bn.bernoulli_number_double_sum(n) == bn.bernoulli_number(n)


def test_odd_numbers_vanish():
    for n in range(3, 40, 2):
        assert bn.bernoulli_number(n) == 0


def test_polynomial_examples():
    assert bn.bernoulli_polynomial(0) == Polynomial([1])
    assert bn.bernoulli_polynomial(1) == Polynomial([F(-1, 2), 1])
    assert bn.bernoulli_polynomial(2) == Polynomial([F(1, 6), -1, 1])
    assert bn.bernoulli_polynomial(5) == Polynomial([0, F(-1, 6), 0, F(5, 3), F(-5, 2), 1])
    for n in range(15):
        p = bn.bernoulli_polynomial(n)
        assert p.degree == n and p.coeff(n) == 1
        assert p.coeff(0) == bn.bernoulli_number(n)


@pytest.mark.parametrize("n", range(41))
def test_stirling_form_equals_definition(n):
    assert bn.bernoulli_polynomial_stirling(n) == bn.bernoulli_polynomial(n)


def test_stirling_form_examples():
    assert bn.bernoulli_polynomial_stirling(0) == Polynomial([1])
    assert bn.bernoulli_polynomial_stirling(2) == Polynomial([F(1, 6), -1, 1])


def test_nielsen_examples():
    assert bn.bernoulli_nielsen(2, F(1, 2)) == F(-1, 12)
    for n in range(12):
        assert bn.bernoulli_nielsen(n, 0) == bn.bernoulli_number(n)
    for x in sample_points(3):
        assert bn.bernoulli_nielsen(1, x) == x - F(1, 2)


def test_todorov_examples():
    assert bn.bernoulli_todorov(2, 0) == F(1, 6)
    # B_3(1) = B_3 = 0
    assert bn.bernoulli_todorov(3, 1) == 0
    assert bn.bernoulli_todorov(3, 2) == 3
    for n in range(12):
        assert bn.bernoulli_todorov(n, 0) == bn.bernoulli_number(n)


@pytest.mark.parametrize("n", range(31))
def test_three_routes_agree_at_points(n):
    p = bn.bernoulli_polynomial(n)
    for x in POINTS:
        v = poly_eval(p, x)
        assert bn.bernoulli_nielsen(n, x) == v
        assert bn.bernoulli_todorov(n, x) == v


def test_differences_beyond_n_vanish():
    for n in range(10):
        assert finite_difference(Polynomial.monomial(n), n + 1).is_zero()
        assert finite_difference(Polynomial.monomial(n), n + 3).is_zero()


def test_rstirling_examples():
    assert bn.bernoulli_at_integer_rstirling(2, 1) == F(1, 6)
    assert bn.bernoulli_at_integer_rstirling(3, 2) == 3
    for n in range(10):
        assert bn.bernoulli_at_integer_rstirling(n, 0) == bn.bernoulli_number(n)
    with pytest.raises(ValueError):
        bn.bernoulli_at_integer_rstirling(2, -1)


@pytest.mark.parametrize("n", range(26))
def test_rstirling_route(n):
    p = bn.bernoulli_polynomial(n)
    for r in range(7):
        assert bn.bernoulli_at_integer_rstirling(n, r) == poly_eval(p, r)


@pytest.mark.parametrize("n", range(16))
def test_lemma2_first_equation_as_polynomials(n):
    for k in range(n + 1):
        lhs = Polynomial()
        for j in range(k + 1):
            lhs = lhs + binomial_power(j, n) * (bn.binomial(k, j) * (-1) ** j)
        rhs = bn.stirling_shift_polynomial(n, k) * ((-1) ** k * bn.factorial(k))
        assert lhs == rhs
        assert bn.alternating_shift_polynomial(n, k) == rhs
        assert poly_eval(lhs, F(2, 7)) == bn.alternating_shift_sum(n, k, F(2, 7))


@pytest.mark.parametrize("n", range(21))
def test_generating_function_oracle(n):
    for x in sample_points(5):
        assert bn.bernoulli_gf_oracle(n, x) == bn.bernoulli_nielsen(n, x)


def test_gf_oracle_large_index():
    assert bn.bernoulli_gf_oracle(40) == B40


@pytest.mark.parametrize("n", range(1, 31))
def test_difference_of_polynomial(n):
    assert finite_difference(bn.bernoulli_polynomial(n), 1) == Polynomial.monomial(n - 1, n)


def test_negative_n_rejected():
    for fn in (bn.bernoulli_number, bn.bernoulli_polynomial, bn.bernoulli_polynomial_stirling):
        with pytest.raises(ValueError):
            fn(-1)
