"""Identities among Schur Q-functions, each returning an IdentityReport."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from ..algebra.gaussian import GaussianRational, I
from ..algebra.polynomial import Polynomial
from ..algebra.ratfunc import RationalFunction
from ..algebra.series import TruncatedSeries, series_expand
from ..errors import InexactDivision
from ..identities import IdentityReport, report
from ..pfaffian.core import METHODS
from .generating import q_pair, q_row_series, schur_def_Q
from .nimmo import nimmo_P, nimmo_pfaffian, nimmo_Q, schur_D
from .partitions import StrictPartition, index_set, strict_partitions

__all__ = [
    "bijection_check",
    "cauchy_truncated",
    "gen_fn_pair_check",
    "gen_fn_row_check",
    "littlewood_coeff_check",
    "littlewood_coeffs",
    "littlewood_split",
    "littlewood_truncated",
    "nimmo_polynomiality",
    "pair_convention_checks",
    "schur3_check",
    "stability_check",
]


def _product_series(factors: Iterable[RationalFunction], d: int) -> TruncatedSeries:
    out = TruncatedSeries(1, d)
    for f in factors:
        out = out * series_expand(f, d)
    return out


def nimmo_polynomiality(lam: Iterable[int], n: int, method: str) -> IdentityReport:
    """``D(x) Q_λ(x)`` (with ``Q_λ`` from elimination) against the block Pfaffian computed by ``method``.

    A remainder in the division by ``D(x)`` makes the report fail.
    """
    lam = StrictPartition(lam)
    if method not in METHODS:
        raise ValueError(f"unknown Pfaffian method {method!r}")
    params = dict(partition=tuple(lam), n=n, method=method)
    try:
        q = nimmo_Q(lam, n).value
    except InexactDivision:
        return IdentityReport("nimmo-polynomiality", None, None, False, params)
    if len(lam) > n:
        return report("nimmo-polynomiality", q, Polynomial.constant(0), **params)
    return report("nimmo-polynomiality", schur_D(range(n)) * q, nimmo_pfaffian(lam, n, "Q", method), **params)


def schur3_check(lam: Iterable[int], n: int) -> IdentityReport:
    """Schur's Pfaffian of two-row functions against Nimmo's quotient."""
    lam = StrictPartition(lam)
    return report("schur3", schur_def_Q(lam, n).value, nimmo_Q(lam, n).value, partition=tuple(lam), n=n)


def gen_fn_row_check(r_max: int, n: int) -> list[IdentityReport]:
    """z-coefficients of ``prod (1+x_i z)/(1-x_i z)`` against ``Q_(r)`` from Nimmo's formula."""
    rows = q_row_series(r_max, n)
    out = [report("gen-fn-1", rows[0].value, Polynomial.constant(1), r=0, n=n, convention="Q(0)=1")]
    for r in range(1, r_max + 1):
        out.append(report("gen-fn-1", rows[r].value, nimmo_Q((r,), n).value, r=r, n=n))
    return out


def gen_fn_pair_check(total: int, n: int) -> list[IdentityReport]:
    """Coefficients of the two-variable generating function against ``Q_(r,s)``, ``r > s > 0``."""
    out = []
    for r in range(2, total + 1):
        for s in range(1, min(r, total - r + 1)):
            out.append(report("gen-fn-2", q_pair(r, s, n).value, nimmo_Q((r, s), n).value, r=r, s=s, n=n))
    return out


def pair_convention_checks(r_max: int, n: int) -> list[IdentityReport]:
    """``Q_(0,0) = 0``, ``Q_(r,0) = -Q_(0,r) = Q_(r)`` and ``Q_(r,s) = -Q_(s,r)`` for ``r, s <= r_max``."""
    rows = q_row_series(r_max, n)
    out = [report("gen-fn-2", q_pair(0, 0, n).value, Polynomial.constant(0), convention="Q(0,0)=0", n=n)]
    for r in range(1, r_max + 1):
        out.append(report("gen-fn-2", q_pair(r, 0, n).value, rows[r].value, convention="Q(r,0)=Q(r)", r=r, n=n))
        out.append(report("gen-fn-2", q_pair(0, r, n).value, -rows[r].value, convention="Q(0,r)=-Q(r)", r=r, n=n))
    for r in range(r_max + 1):
        for s in range(r):
            out.append(report("gen-fn-2", q_pair(r, s, n).value, -q_pair(s, r, n).value,
                              convention="antisymmetry", r=r, s=s, n=n))
    return out


def stability_check(lam: Iterable[int], n: int) -> IdentityReport:
    """``Q_λ(x_1, ..., x_n, 0)`` against ``Q_λ(x_1, ..., x_n)``."""
    lam = StrictPartition(lam)
    lhs = nimmo_Q(lam, n + 1).value.substitute({n: 0})
    return report("stability", lhs, nimmo_Q(lam, n).value, partition=tuple(lam), n=n)


def bijection_check(max_weight: int, n: int) -> IdentityReport:
    """Number of distinct index sets of the right parity against the number of strict partitions.

    Equal exactly when ``λ -> index_set(λ, n)`` is injective and every image
    has cardinality congruent to ``n`` mod 2.
    """
    parts = strict_partitions(max_weight)
    images = {index_set(lam, n) for lam in parts}
    good = sum(1 for s in images if (len(s) - n) % 2 == 0)
    return report("bijection", good, len(parts), max_weight=max_weight, n=n)


def cauchy_truncated(n: int, d: int) -> IdentityReport:
    """``Σ P_λ(x) Q_λ(y)`` against ``prod_{i,j} (1 + x_i y_j)/(1 - x_i y_j)`` through total degree ``d``.

    Each summand is homogeneous of degree ``2|λ|``, so only ``|λ| <= d/2`` contribute.
    """
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    x, y = tuple(range(n)), tuple(range(n, 2 * n))
    lhs = Polynomial.constant(0)
    for lam in strict_partitions(d // 2):
        lhs = lhs + nimmo_P(lam, x).value * nimmo_Q(lam, y).value
    factors = []
    for i in x:
        for j in y:
            t = Polynomial.var(i) * Polynomial.var(j)
            factors.append(RationalFunction(1 + t, 1 - t))
    rhs = _product_series(factors, d).poly
    return report("cauchy", lhs.truncate(d), rhs, n=n, d=d)


def _littlewood_product(n: int, d: int) -> TruncatedSeries:
    """Series of ``prod_{i<j} (1 + x_i x_j)/(1 - x_i x_j)``."""
    factors = []
    for i, j in combinations(range(n), 2):
        t = Polynomial.var(i) * Polynomial.var(j)
        factors.append(RationalFunction(1 + t, 1 - t))
    return _product_series(factors, d)


def littlewood_truncated(n: int, d: int) -> IdentityReport:
    """``Σ (1+i)^{l(λ)} P_λ(x)`` against ``prod (1 + i x_i)/(1 - x_i) prod_{i<j} (1 + x_i x_j)/(1 - x_i x_j)``."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    alpha = 1 + I
    lhs = Polynomial.constant(0)
    for lam in strict_partitions(d):
        lhs = lhs + alpha ** len(lam) * nimmo_P(lam, n).value
    linear = [RationalFunction(1 + I * Polynomial.var(i), 1 - Polynomial.var(i)) for i in range(n)]
    rhs = (_product_series(linear, d) * _littlewood_product(n, d)).poly
    return report("littlewood", lhs, rhs, n=n, d=d)


def littlewood_coeffs(l: int) -> tuple[GaussianRational, GaussianRational]:
    """``(a_l, b_l)`` from the table indexed by ``l mod 4``.

    >>> littlewood_coeffs(3)
    (GaussianRational(-2, 0), GaussianRational(2, 0))
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    k, r = divmod(l, 4)
    s = (-1) ** k
    if r == 0:
        a, b = s * 4 ** k, 0
    elif r == 1:
        a, b = s * 4 ** k, s * 4 ** k
    elif r == 2:
        a, b = 0, s * 2 * 4 ** k
    else:
        a, b = -s * 2 * 4 ** k, s * 2 * 4 ** k
    return GaussianRational(a), GaussianRational(b)


def _elementary(n: int) -> list[Polynomial]:
    es = [Polynomial.constant(1)]
    for k in range(1, n + 1):
        e = Polynomial.constant(0)
        for c in combinations(range(n), k):
            m = Polynomial.constant(1)
            for i in c:
                m = m * Polynomial.var(i)
            e = e + m
        es.append(e)
    return es


def littlewood_split(n: int, d: int) -> list[IdentityReport]:
    """Real and imaginary parts: ``Σ a_l P_λ`` and ``Σ b_l P_λ`` against their closed forms in ``e_k``."""
    e = _elementary(n)
    even = sum(((-1) ** (k // 2) * e[k] for k in range(0, n + 1, 2)), Polynomial.constant(0))
    odd = sum(((-1) ** (k // 2) * e[k] for k in range(1, n + 1, 2)), Polynomial.constant(0))
    den = sum(((-1) ** k * e[k] for k in range(n + 1)), Polynomial.constant(0))
    base = _littlewood_product(n, d)
    re_lhs = Polynomial.constant(0)
    im_lhs = Polynomial.constant(0)
    for lam in strict_partitions(d):
        a, b = littlewood_coeffs(len(lam))
        p = nimmo_P(lam, n).value
        re_lhs = re_lhs + a * p
        im_lhs = im_lhs + b * p
    re_rhs = (series_expand(RationalFunction(even, den), d) * base).poly
    im_rhs = (series_expand(RationalFunction(odd, den), d) * base).poly
    return [
        report("littlewood", re_lhs, re_rhs, n=n, d=d, part="real"),
        report("littlewood", im_lhs, im_rhs, n=n, d=d, part="imaginary"),
    ]


def littlewood_coeff_check(l: int) -> IdentityReport:
    """``a_l + b_l i`` against ``(1+i)**l``."""
    a, b = littlewood_coeffs(l)
    return report("littlewood-coeffs", a + b * I, (1 + I) ** l, l=l)
