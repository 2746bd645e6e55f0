"""Skew Q-functions: the Pfaffian formula, the interpolating identity and an expansion oracle."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from ..algebra.polynomial import Polynomial
from ..algebra.ratfunc import RationalFunction
from ..identities import IdentityReport, report
from ..pfaffian.core import pfaffian
from ..pfaffian.matrices import RectMatrix, SkewMatrix
from .generating import q_row, schur_S
from .nimmo import QExpr, _alphabet, nimmo_Q, schur_A, schur_D
from .partitions import StrictPartition, strict_partitions

__all__ = [
    "M_matrix",
    "N_matrix",
    "ns_Q",
    "pjn_check",
    "skew_Q_pjn",
    "skew_by_projection",
    "skew_candidates",
    "skew_expansion_check",
    "skew_support_guard",
]


def M_matrix(alpha: Sequence[int], beta: Sequence[int], n: int | Sequence[int]) -> RectMatrix:
    """``M_{α/β}(x) = (Q_(α_i - β_{m+1-j})(x))`` with ``Q_(k) = 0`` for ``k < 0``."""
    alphabet = _alphabet(n)
    m = len(beta)
    return RectMatrix.from_function(
        len(alpha), m, lambda i, j: q_row(alpha[i] - beta[m - 1 - j], alphabet)
    )


def _as_poly(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, RationalFunction):
        return v.to_polynomial()
    return Polynomial.constant(v)


def skew_Q_pjn(lam: Iterable[int], mu: Iterable[int], n: int | Sequence[int]) -> QExpr:
    """``Q_{λ/μ}(x) = Pf [[S_λ, M_{λ/μ}], [-M^T, O]]``, with ``μ⁰`` when the lengths differ in parity."""
    lam, mu = StrictPartition(lam), StrictPartition(mu)
    alphabet = _alphabet(n)
    beta = mu.padded(len(lam))
    S = schur_S(tuple(lam), alphabet)
    M = M_matrix(tuple(lam), beta, alphabet)
    value = pfaffian(SkewMatrix.from_blocks([[S, M], [None, len(beta)]]))
    return QExpr(_as_poly(value), f"Q({','.join(map(str, lam))}/{','.join(map(str, mu))})", len(alphabet))


def N_matrix(alpha: Sequence[int], x: Sequence[int], y: Sequence[int]) -> RectMatrix:
    """``N_α(x|y) = (Q_(α_i)(x, y_j))``."""
    return RectMatrix.from_function(
        len(alpha), len(y), lambda i, j: q_row(alpha[i], tuple(x) + (y[j],))
    )


def _split(n: int | Sequence[int], k: int | Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    x = _alphabet(n)
    if isinstance(k, int):
        start = max(x, default=-1) + 1
        return x, tuple(range(start, start + k))
    return x, tuple(k)


def ns_Q(lam: Iterable[int], n: int | Sequence[int], k: int | Sequence[int]) -> IdentityReport:
    """``(1/D(y)) Pf [[S_λ(x), N_λ(x|y)], [-N^T, A(y)]]`` against ``Q_λ(x, y)``.

    ``λ⁰`` replaces ``λ`` when ``l + k`` is odd.  The y variables follow the
    x variables in the global alphabet unless given explicitly.
    """
    lam = StrictPartition(lam)
    x, y = _split(n, k)
    if not x and not y:
        raise ValueError("at least one variable is required")
    alpha = lam.padded(len(y))
    X = SkewMatrix.from_blocks([[schur_S(alpha, x), N_matrix(alpha, x, y)], [None, schur_A(y)]])
    pf = pfaffian(X)
    lhs = pf if not y else (pf if isinstance(pf, RationalFunction) else RationalFunction(pf)) / schur_D(y)
    rhs = nimmo_Q(lam, x + y).value
    return report("ns", lhs, rhs, partition=tuple(lam), n=len(x), k=len(y))


def skew_by_projection(lam: Iterable[int], n: int | Sequence[int],
                       k: int | Sequence[int] | None = None) -> dict[StrictPartition, Polynomial]:
    """Read ``Q_{λ/μ}(x)`` off ``Q_λ(x, y)`` by peeling off ``Q_μ(y)`` terms.

    ``Q_λ(x, y)`` is viewed as a polynomial in y with coefficients in x.  Its
    lex-leading y-monomial ``y^ν`` has strictly decreasing exponents; dividing
    that coefficient by the coefficient of ``y^ν`` in ``Q_ν(y)`` (computed, not
    assumed) gives ``Q_{λ/ν}(x)``, and ``Q_{λ/ν}(x) Q_ν(y)`` is subtracted.
    Only ``μ`` with ``l(μ) <= k`` can be recovered, so ``k`` defaults to
    ``l(λ)``.
    """
    lam = StrictPartition(lam)
    x, y = _split(n, max(len(lam), 1) if k is None else k)
    return dict(_projection(lam, x, y))


@lru_cache(maxsize=512)
def _projection(lam: StrictPartition, x: tuple[int, ...], y: tuple[int, ...]):
    ypos = {v: j for j, v in enumerate(y)}
    rem = nimmo_Q(lam, x + y).value
    out: dict[StrictPartition, Polynomial] = {}
    while rem:
        def yexp(m):
            e = [0] * len(y)
            for v, p in enumerate(m):
                if p and v in ypos:
                    e[ypos[v]] = p
            return tuple(e)

        lead = max(yexp(m) for m in rem.raw_terms())
        nu = StrictPartition(p for p in lead if p)  # raises unless strictly decreasing
        if any(lead[len(nu):]):
            raise ArithmeticError(f"leading y-exponent {lead} is not a partition")
        pick = {v: lead[j] for j, v in enumerate(y)}
        q_nu = nimmo_Q(nu, y).value
        c = q_nu.coefficient_of(pick)
        if not c.is_constant() or not c:
            raise ArithmeticError(f"Q{nu}(y) does not have y^{lead} as a leading term")
        coeff = rem.coefficient_of(pick) * (1 / c.constant_term())
        out[nu] = coeff
        rem = rem - coeff * q_nu
    return tuple(out.items())


def skew_candidates(lam: StrictPartition, margin: int = 0) -> list[StrictPartition]:
    """Strict ``μ`` with ``μ_1 <= λ_1`` and ``|μ| <= |λ|``; with ``margin`` > 0, those outside that
    range but of weight at most ``|λ| + margin``."""
    lam = StrictPartition(lam)
    top = lam[0] if lam else 0
    inside = [mu for mu in strict_partitions(lam.weight) if (mu[0] if mu else 0) <= top]
    if not margin:
        return inside
    return [mu for mu in strict_partitions(lam.weight + margin) if mu not in inside]


def skew_expansion_check(lam: Iterable[int], n: int | Sequence[int],
                         k: int | Sequence[int]) -> IdentityReport:
    """``Q_λ(x, y)`` against ``Σ_μ Q_{λ/μ}(x) Q_μ(y)`` over ``μ_1 <= λ_1``, ``|μ| <= |λ|``."""
    lam = StrictPartition(lam)
    x, y = _split(n, k)
    lhs = nimmo_Q(lam, x + y).value
    rhs = Polynomial.constant(0)
    for mu in skew_candidates(lam):
        q = nimmo_Q(mu, y).value
        if q:
            s = skew_Q_pjn(lam, mu, x).value
            if s:
                rhs = rhs + s * q
    return report("skew-expansion", lhs, rhs, partition=tuple(lam), n=len(x), k=len(y))


def skew_support_guard(lam: Iterable[int], n: int | Sequence[int], margin: int = 2) -> IdentityReport:
    """Count the ``μ`` outside the summation range with ``Q_{λ/μ}(x) != 0``; the count must be 0."""
    lam = StrictPartition(lam)
    x = _alphabet(n)
    outside = skew_candidates(lam, margin)
    nonzero = sum(1 for mu in outside if skew_Q_pjn(lam, mu, x))
    return report("skew-support", nonzero, 0, partition=tuple(lam), n=len(x), checked=len(outside))


def pjn_check(lam: Iterable[int], mu: Iterable[int], n: int | Sequence[int]) -> IdentityReport:
    """The Pfaffian formula for ``Q_{λ/μ}(x)`` against the coefficient read off ``Q_λ(x, y)``."""
    lam, mu = StrictPartition(lam), StrictPartition(mu)
    x = _alphabet(n)
    oracle = skew_by_projection(lam, x)
    return report("pjn", skew_Q_pjn(lam, mu, x).value, oracle.get(mu, Polynomial.constant(0)),
                  partition=tuple(lam), mu=tuple(mu), n=len(x))
