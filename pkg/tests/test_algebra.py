from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfun.algebra import (
    GaussianRational,
    I,
    Monomial,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    poly_arith,
    ratfn_arith,
    series_expand,
    substitute,
)
from qfun.errors import DenominatorVanishes, NotExpandable

from strategies import expandable, gaussians, nonzero_polynomials, polynomials

x1, x2, x3 = (Polynomial.var(i) for i in range(3))


# -- GaussianRational -----------------------------------------------------------


def test_gaussian_parts_are_reduced():
    g = GaussianRational(Fraction(4, -6), Fraction(0, 5))
    assert g.re == Fraction(-2, 3) and g.re.denominator == 3
    assert g.im == 0
    assert GaussianRational(0, 0) == 0
    assert not GaussianRational(0, 0)


def test_gaussian_norm_example():
    assert (1 + I) * (1 - I) == 2
    assert poly_arith(Polynomial.constant(1 + I), Polynomial.constant(1 - I), "mul") == Polynomial.constant(2)


@given(gaussians, gaussians)
def test_gaussian_division_inverts_multiplication(a, b):
    if b:
        assert (a * b) / b == a


# -- Monomial and Polynomial ----------------------------------------------------


def test_monomial_drops_zero_exponents():
    m = Monomial({0: 2, 3: 0, 1: 1})
    assert m.exponents == {0: 2, 1: 1}
    assert m.total_degree == 3
    assert m.as_tuple(4) == (2, 1, 0, 0)


def test_binomial_square():
    p = poly_arith(x1 + x2, x1 + x2, "mul")
    assert p == x1 ** 2 + 2 * x1 * x2 + x2 ** 2
    assert str(p) == "x1^2 + 2*x1*x2 + x2^2"


def test_zero_is_absorbing():
    assert poly_arith(x1 + 3 * x2, Polynomial.constant(0), "mul").is_zero()


def test_no_zero_terms_are_stored():
    p = (x1 + x2) - x2
    assert len(p) == 1
    assert all(c for _, c in p.terms())


def test_unknown_operation_is_rejected():
    with pytest.raises(ValueError):
        poly_arith(x1, x2, "pow")


@settings(max_examples=200)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polynomials(), polynomials())
def test_substitute_is_a_homomorphism(p, q):
    assignment = {0: x2 + 1, 1: 2 * x3, 2: Polynomial.constant(Fraction(1, 3))}
    assert substitute(p * q, assignment) == substitute(p, assignment) * substitute(q, assignment)
    assert substitute(p + q, assignment) == substitute(p, assignment) + substitute(q, assignment)


def test_substitute_examples():
    assert substitute(x1 ** 2 + x2, {1: 0}) == x1 ** 2
    assert substitute(x1, {0: x1}) == x1
    with pytest.raises(DenominatorVanishes):
        substitute(RationalFunction(1, x1 + x2), {0: -x2})


def test_exact_div_and_divides():
    p = (x1 + x2) * (x1 - 2 * x3)
    assert p.exact_div(x1 + x2) == x1 - 2 * x3
    assert (x1 + x2).divides(p)
    assert not (x1 + 1).divides(p)


# -- RationalFunction -----------------------------------------------------------


def test_ratfn_examples():
    a = RationalFunction(x2 - x1, x2 + x1)
    b = RationalFunction(x1 - x2, x1 + x2)
    assert ratfn_arith(a, b, "add") == 0
    f = RationalFunction(x1 + 3, x2 - x1)
    assert ratfn_arith(f, f, "div") == 1
    assert f * f.inverse() == 1
    r = RationalFunction(2 * x1, 2 * x2)
    assert r.num == x1 and r.den == x2


def test_ratfn_zero_division():
    with pytest.raises(ZeroDivisionError):
        ratfn_arith(RationalFunction(x1), RationalFunction(0), "div")
    with pytest.raises(ZeroDivisionError):
        RationalFunction(x1, 0)


def test_ratfn_denominator_is_monic():
    r = RationalFunction(x1, 3 * x2 + 6 * x1)
    _, lead = r.den.leading()
    assert lead == 1


@settings(max_examples=100)
@given(polynomials(3), nonzero_polynomials(), polynomials(3), nonzero_polynomials())
def test_ratfn_equality_matches_cross_multiplication(n1, d1, n2, d2):
    a, b = RationalFunction(n1, d1), RationalFunction(n2, d2)
    assert (a == b) == (n1 * d2 == n2 * d1)
    assert RationalFunction(n1 * d2, d1 * d2) == a


@given(polynomials(3), nonzero_polynomials(), polynomials(3), nonzero_polynomials())
def test_ratfn_field_operations(n1, d1, n2, d2):
    a, b = RationalFunction(n1, d1), RationalFunction(n2, d2)
    assert (a + b) - b == a
    assert (a * b) == RationalFunction(n1 * n2, d1 * d2)
    if b:
        assert (a / b) * b == a


# -- TruncatedSeries ------------------------------------------------------------


def test_series_generating_function_of_a_row():
    z = Polynomial.var(1)
    s = series_expand(RationalFunction(1 + x1 * z, 1 - x1 * z), 3, graded=[1])
    assert s.poly == 1 + 2 * x1 * z + 2 * x1 ** 2 * z ** 2 + 2 * x1 ** 3 * z ** 3


def test_series_geometric():
    assert series_expand(RationalFunction(1, 1 - x1 * x2), 2).poly == 1 + x1 * x2


@pytest.mark.parametrize("d", [0, 1, 4])
def test_series_not_expandable(d):
    with pytest.raises(NotExpandable):
        series_expand(RationalFunction(x1 - x2, x1 + x2), d)


def test_series_truncates_to_smaller_bound():
    a = TruncatedSeries(1 + x1 + x1 ** 3, 3)
    b = TruncatedSeries(1 + x2, 1)
    c = a * b
    assert c.bound == 1
    assert c.poly == 1 + x1 + x2
    assert all(m.total_degree <= c.bound for m, _ in c.poly.terms())


@settings(max_examples=40)
@given(expandable(), expandable(), st.integers(0, 4))
def test_series_is_multiplicative(f, g, d):
    assert series_expand(f * g, d) == series_expand(f, d) * series_expand(g, d)


@given(expandable(), st.integers(0, 4))
def test_series_inverts_denominator(f, d):
    s = series_expand(f, d)
    assert (s * TruncatedSeries(f.den, d)).poly == f.num.truncate(d)
