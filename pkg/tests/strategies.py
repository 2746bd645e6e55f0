"""Hypothesis strategies for ring elements and matrices."""

from fractions import Fraction

from hypothesis import strategies as st

from qfun.algebra import GaussianRational, Polynomial, RationalFunction
from qfun.pfaffian import RectMatrix, SkewMatrix

NVARS = 3

small_ints = st.integers(-6, 6)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
gaussians = st.builds(GaussianRational, rationals, rationals)

exponents = st.tuples(*[st.integers(0, 3)] * NVARS)


@st.composite
def polynomials(draw, max_terms=4, coeffs=gaussians):
    terms = draw(st.lists(st.tuples(exponents, coeffs), max_size=max_terms))
    out = Polynomial.constant(0)
    for exp, c in terms:
        out = out + Polynomial({exp: c})
    return out


@st.composite
def nonzero_polynomials(draw, max_terms=3):
    p = draw(polynomials(max_terms, rationals))
    return p if p else Polynomial.constant(draw(st.integers(1, 5)))


@st.composite
def expandable(draw):
    """Rational functions whose denominator has a nonzero constant term."""
    num = draw(polynomials(3, small_ints))
    den = draw(polynomials(2, small_ints)) + draw(st.integers(1, 4))
    if not den.constant_term():
        den = den + 1
    return RationalFunction(num, den)


@st.composite
def skew_matrices(draw, sizes=(0, 2, 4), entries=small_ints):
    n = draw(st.sampled_from(sizes))
    vals = draw(st.lists(entries, min_size=n * n, max_size=n * n))
    return SkewMatrix(n, lambda i, j: vals[i * n + j])


@st.composite
def square_matrices(draw, n, entries=small_ints):
    vals = draw(st.lists(entries, min_size=n * n, max_size=n * n))
    return RectMatrix.from_function(n, n, lambda i, j: vals[i * n + j])
