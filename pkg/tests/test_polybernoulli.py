from fractions import Fraction as F

import pytest

from stirnum import polybernoulli as pb
from stirnum.bernoulli import bernoulli_nielsen, bernoulli_number, bernoulli_polynomial
from stirnum.exactnum import Polynomial, poly_eval
from stirnum.series import SeriesError

# From an independent symbolic series expansion of Li_q(1-e^-t)/(1-e^-t).
KNOWN = {
    2: [1, F(1, 4), F(-1, 36), F(-1, 24), F(7, 450), F(1, 40), F(-38, 2205), F(-5, 168)],
    3: [1, F(1, 8), F(-11, 216), F(-1, 288), F(1243, 54000), F(-49, 7200), F(-75613, 3704400), F(599, 35280)],
}
XS = [F(0), F(1), F(-1), F(1, 2), F(-1, 2), F(2)]


def test_number_examples():
    assert pb.polybernoulli_number(1, 2) == F(1, 4)
    for q in range(1, 6):
        assert pb.polybernoulli_number(0, q) == 1
    for n in range(20):
        assert pb.polybernoulli_number(n, 1) == (-1) ** n * bernoulli_number(n)


def test_b2_q2_golden():
    # Eq. (7)-style hand sum: k=1 gives -1/4, k=2 gives 2/9
    assert -F(1, 4) + F(2, 9) == F(-1, 36)
    assert pb.polybernoulli_number(2, 2) == F(-1, 36)
    assert pb.polybernoulli_bayad(2, 2, 0) == F(-1, 36)


@pytest.mark.parametrize("q", [2, 3])
def test_against_symbolic_values(q):
    assert [pb.polybernoulli_number(n, q) for n in range(8)] == KNOWN[q]


def test_polynomial_known():
    # symbolic expansion: B_3^(2)(x) = x^3 + 3x^2/4 - x/12 - 1/24
    assert pb.polybernoulli_polynomial(3, 2) == Polynomial([F(-1, 24), F(-1, 12), F(3, 4), 1])
    assert pb.polybernoulli_bayad(3, 2, F(1, 2)) == F(11, 48)
    assert pb.polybernoulli_at_negative_integer(3, 2, 2) == F(-39, 8)


@pytest.mark.parametrize("n", range(26))
def test_q1_reflection(n):
    assert pb.polybernoulli_polynomial(n, 1) == bernoulli_polynomial(n).reflect() * (-1) ** n


@pytest.mark.parametrize("n", range(31))
def test_constant_term_is_number(n):
    for q in range(1, 6):
        assert pb.polybernoulli_polynomial(n, q).coeff(0) == pb.polybernoulli_number(n, q)


def test_bayad_examples():
    for q in range(1, 5):
        for x in XS:
            assert pb.polybernoulli_bayad(0, q, x) == 1
    for n in range(10):
        for x in XS:
            assert (-1) ** n * pb.polybernoulli_bayad(n, 1, -x) == bernoulli_nielsen(n, x)


@pytest.mark.parametrize("n", range(16))
@pytest.mark.parametrize("q", [1, 2, 3, 4])
def test_four_routes(n, q):
    poly = pb.polybernoulli_polynomial(n, q)
    for x in XS:
        v = poly_eval(poly, x)
        assert pb.polybernoulli_bayad(n, q, x) == v
        assert pb.polybernoulli_gf_oracle(n, q, x) == v
    for r in range(5):
        a = pb.polybernoulli_at_negative_integer(n, q, r, route="rstirling")
        b = pb.polybernoulli_at_negative_integer(n, q, r, route="stirling")
        assert a == b == poly_eval(poly, -r)


def test_negative_integer_examples():
    for n in range(10):
        for q in range(1, 4):
            assert pb.polybernoulli_at_negative_integer(n, q, 0) == pb.polybernoulli_number(n, q)
        for r in range(5):
            assert pb.polybernoulli_at_negative_integer(n, 1, r) == (-1) ** n * poly_eval(bernoulli_polynomial(n), r)
    assert pb.polybernoulli_at_negative_integer(2, 2, 1) == poly_eval(pb.polybernoulli_polynomial(2, 2), -1)
    with pytest.raises(ValueError):
        pb.polybernoulli_at_negative_integer(2, 2, 1, route="other")


def test_gf_oracle_examples():
    for n in range(12):
        assert pb.polybernoulli_gf_oracle(n, 1, 0) == (-1) ** n * bernoulli_number(n)
    for q in range(1, 4):
        assert pb.polybernoulli_gf_oracle(0, q, F(3, 7)) == 1
    with pytest.raises(SeriesError):
        pb.polybernoulli_gf_oracle(5, 2, 0, order=6)


def test_q_below_one_rejected():
    for fn in (pb.polybernoulli_number, pb.polybernoulli_polynomial):
        with pytest.raises(ValueError):
            fn(3, 0)
    with pytest.raises(ValueError):
        pb.polybernoulli_bayad(3, -1, 0)
    with pytest.raises(ValueError):
        pb.polybernoulli_at_negative_integer(3, 0, 1)
    with pytest.raises(ValueError):
        pb.polybernoulli_gf_oracle(3, 0, 0)
