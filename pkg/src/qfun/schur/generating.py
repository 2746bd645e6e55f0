"""One- and two-row Q-functions read off their generating functions, and Schur's Pfaffian."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from ..algebra.polynomial import Polynomial
from ..algebra.ratfunc import RationalFunction
from ..algebra.series import TruncatedSeries, series_expand
from ..pfaffian.core import pfaffian
from ..pfaffian.matrices import SkewMatrix
from .nimmo import QExpr, _alphabet, _label
from .partitions import StrictPartition

__all__ = [
    "q_pair",
    "q_pair_table",
    "q_row",
    "q_row_series",
    "schur_def_Q",
    "schur_S",
]


def _spare(alphabet: tuple[int, ...], count: int) -> list[int]:
    """``count`` variable indices not used by ``alphabet``."""
    start = max(alphabet, default=-1) + 1
    return list(range(start, start + count))


def _F(alphabet: tuple[int, ...], z: int) -> RationalFunction:
    """``prod_i (1 + x_i z)/(1 - x_i z)``."""
    Z = Polynomial.var(z)
    num, den = Polynomial.constant(1), Polynomial.constant(1)
    for i in alphabet:
        xz = Polynomial.var(i) * Z
        num = num * (1 + xz)
        den = den * (1 - xz)
    return RationalFunction(num, den)


@lru_cache(maxsize=256)
def _row_table(alphabet: tuple[int, ...], r_max: int) -> tuple[Polynomial, ...]:
    (z,) = _spare(alphabet, 1)
    s = series_expand(_F(alphabet, z), r_max, graded=[z])
    return tuple(s.coefficient_of({z: r}) for r in range(r_max + 1))


def q_row_series(r_max: int, n: int | Sequence[int]) -> list[QExpr]:
    """``[Q_(0), ..., Q_(r_max)]`` as the z-coefficients of ``prod (1 + x_i z)/(1 - x_i z)``.

    >>> [q.to_str() for q in q_row_series(2, 1)]
    ['1', '2*x1', '2*x1^2']
    """
    if r_max < 0:
        raise ValueError("r_max must be nonnegative")
    alphabet = _alphabet(n)
    return [QExpr(p, _label("Q", (r,)), len(alphabet)) for r, p in enumerate(_row_table(alphabet, r_max))]


def q_row(r: int, n: int | Sequence[int]) -> Polynomial:
    """``Q_(r)`` from the generating function; 0 for negative ``r``."""
    if r < 0:
        return Polynomial.constant(0)
    return _row_table(_alphabet(n), r)[r]


@lru_cache(maxsize=256)
def _pair_table(alphabet: tuple[int, ...], total: int) -> dict[tuple[int, int], Polynomial]:
    # G(z, w) = (z-w)/(z+w) (F_z F_w - 1) is not expandable at the origin, but
    # R = (z+w) G = (z-w)(F_z F_w - 1) is, and G_{a,b} = R_{a+1,b} - G_{a+1,b-1}.
    z, w = _spare(alphabet, 2)
    bound = total + 1
    Fz = series_expand(_F(alphabet, z), bound, graded=[z]).poly
    Fw = Fz.rename({z: w})
    g = [z, w]
    prod = TruncatedSeries(Fz, bound, g) * TruncatedSeries(Fw, bound, g) - 1
    R = ((Polynomial.var(z) - Polynomial.var(w)) * prod.poly).truncate(bound, g)
    G: dict[tuple[int, int], Polynomial] = {}
    for a in range(total + 1):
        G[a, 0] = R.coefficient_of({z: a + 1, w: 0})
    for b in range(1, total + 1):
        for a in range(total + 1 - b):
            G[a, b] = R.coefficient_of({z: a + 1, w: b}) - G[a + 1, b - 1]
    return G


def q_pair_table(total: int, n: int | Sequence[int]) -> dict[tuple[int, int], Polynomial]:
    """All coefficients ``Q_(r,s)`` of ``z^r w^s`` with ``r + s <= total``."""
    return dict(_pair_table(_alphabet(n), total))


def q_pair(r: int, s: int, n: int | Sequence[int]) -> QExpr:
    """Coefficient of ``z^r w^s`` in ``(z-w)/(z+w) (F_z F_w - 1)``, ``F_z = prod (1+x_i z)/(1-x_i z)``.

    Nothing is imposed: the conventions for ``Q_(r,0)``, ``Q_(0,r)`` and the
    antisymmetry are properties of the generating function.
    """
    if r < 0 or s < 0:
        raise ValueError("r and s must be nonnegative")
    alphabet = _alphabet(n)
    return QExpr(_pair_table(alphabet, r + s)[r, s], _label("Q", (r, s)), len(alphabet))


def schur_S(alpha: Sequence[int], n: int | Sequence[int]) -> SkewMatrix:
    """``S_α(x) = (Q_(α_i, α_j)(x))``."""
    alphabet = _alphabet(n)
    alpha = tuple(alpha)
    total = 2 * max(alpha, default=0)
    table = _pair_table(alphabet, total)
    return SkewMatrix(len(alpha), lambda i, j: table[alpha[i], alpha[j]])


def schur_def_Q(lam: Iterable[int], n: int | Sequence[int]) -> QExpr:
    """``Pf S_λ(x)`` for even ``l(λ)`` and ``Pf S_{λ⁰}(x)`` for odd ``l(λ)``."""
    lam = StrictPartition(lam)
    alphabet = _alphabet(n)
    value = pfaffian(schur_S(lam.padded(0), alphabet))
    if not isinstance(value, Polynomial):
        value = Polynomial.constant(value)
    return QExpr(value, _label("Q", lam), len(alphabet))
