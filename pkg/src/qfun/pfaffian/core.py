"""Pfaffians, determinants and the combinatorics of perfect matchings.

Three independent Pfaffian algorithms are provided and are expected to
agree exactly on every input:

``definition``
    signed sum over all perfect matchings of ``[2m]``;
``expansion``
    recursive expansion along a row, with sub-Pfaffians memoised by index set;
``elimination``
    fraction-free skew elimination.  After ``k`` pivot steps the working
    entries are the sub-Pfaffians ``Pf X(S + {i, j})`` with ``S`` the first
    ``2k`` (pivoted) indices, and each step divides exactly by the previous
    pivot ``Pf X(S)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

from ..algebra.gaussian import GaussianRational
from ..algebra.polynomial import Polynomial
from ..algebra.ratfunc import RationalFunction
from ..errors import InexactDivision, NotInvertiblePivot, ShapeMismatch
from .matrices import IndexSet, PerfectMatching, RectMatrix, SkewMatrix

__all__ = [
    "METHODS",
    "congruence",
    "det",
    "matching_sign",
    "minor_det",
    "perfect_matchings",
    "pfaffian",
    "subpfaffian",
]

METHODS = ("definition", "expansion", "elimination")


# -- matchings ---------------------------------------------------------------


def _inversions(word: Sequence[int]) -> int:
    return sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])


def matching_sign(p: PerfectMatching | Iterable[Sequence[int]]) -> int:
    """``(-1)**inv(i1, j1, ..., im, jm)`` for the blocks ``{ik, jk}``, ``ik < jk``.

    The value does not depend on the order in which blocks are listed.

    >>> matching_sign(PerfectMatching(((1, 3), (2, 4))))
    -1
    """
    pairs = p.pairs if isinstance(p, PerfectMatching) else p
    word = [x for pair in pairs for x in sorted(pair)]
    return -1 if _inversions(word) % 2 else 1


def _matchings(items: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _matchings(remaining):
            yield [(first, partner)] + tail


def perfect_matchings(n: int) -> Iterator[PerfectMatching]:
    """All perfect matchings of ``[n]``, pairing the smallest unmatched index first."""
    if n % 2:
        return
    for pairs in _matchings(tuple(range(1, n + 1))):
        yield PerfectMatching(tuple(pairs))


# -- summation helper ----------------------------------------------------------


class _ProductSum:
    """Accumulate ``sum sign * prod(factors)`` over a ring that may be a fraction field.

    Products of rational functions are formed unreduced and grouped by
    denominator, so the gcd work happens once per distinct denominator rather
    than once per term.
    """

    __slots__ = ("ring", "groups")

    def __init__(self) -> None:
        self.ring = 0
        self.groups: dict[Polynomial, object] = {}

    def add(self, sign: int, factors: Sequence) -> None:
        if any(isinstance(f, RationalFunction) for f in factors):
            num, den = 1, 1
            for f in factors:
                if isinstance(f, RationalFunction):
                    num = f.num * num
                    den = f.den * den
                else:
                    num = f * num
            if sign < 0:
                num = -num
            den = den if isinstance(den, Polynomial) else Polynomial.constant(den)
            self.groups[den] = self.groups.get(den, 0) + num
        else:
            prod = factors[0]
            for f in factors[1:]:
                prod = prod * f
            self.ring = self.ring + prod if sign > 0 else self.ring - prod

    def result(self):
        if not self.groups:
            return self.ring
        total = RationalFunction(self.ring)
        for den, num in self.groups.items():
            if num:
                total = total + RationalFunction(num, den)
        return total


# -- Pfaffian algorithms -------------------------------------------------------


def _pf_definition(X: SkewMatrix):
    acc = _ProductSum()
    for pairs in _matchings(tuple(range(X.size))):
        factors = []
        for i, j in pairs:
            e = X.upper(i, j)
            if not e:
                break
            factors.append(e)
        else:
            acc.add(matching_sign(pairs), factors)
    return acc.result()


def _pf_expansion(X: SkewMatrix, row: int):
    n = X.size
    memo: dict[int, object] = {0: 1}

    def sub(mask: int):
        """Pf of the principal submatrix on ``mask``, expanded along its first index."""
        v = memo.get(mask)
        if v is not None:
            return v
        idx = [i for i in range(n) if mask >> i & 1]
        first = idx[0]
        acc = _ProductSum()
        for t in range(1, len(idx)):
            e = X.upper(first, idx[t])
            if e:
                rest = sub(mask & ~(1 << first) & ~(1 << idx[t]))
                if rest:
                    acc.add(1 if t % 2 else -1, [e, rest])
        v = acc.result()
        memo[mask] = v
        return v

    full = (1 << n) - 1
    k = row - 1
    if k == 0:
        return sub(full)
    # expansion along the k-th row/column (1-based k)
    acc = _ProductSum()
    for i in range(n):
        if i == k:
            continue
        e = X[k, i] if i > k else X[i, k]
        if not e:
            continue
        rest = sub(full & ~(1 << i) & ~(1 << k))
        if not rest:
            continue
        # (-1)^{k+i-1} with 1-based indices is (-1)^{k+i+1} with 0-based ones
        acc.add(1 if (k + i) % 2 else -1, [e, rest])
    return acc.result()


def _exquo(v, d):
    """Exact quotient of ring elements; raises when the ring has no such division."""
    if type(d) is int and d == 1:
        return v
    if isinstance(v, RationalFunction) or isinstance(d, RationalFunction):
        return v / d
    if isinstance(v, Polynomial) or isinstance(d, Polynomial):
        vp = v if isinstance(v, Polynomial) else Polynomial.constant(v)
        return vp.exact_div(d)
    if type(v) is int and type(d) is int:
        q, r = divmod(v, d)
        if r:
            raise InexactDivision(f"{d} does not divide {v}")
        return q
    if isinstance(v, (int, Fraction, GaussianRational)) and isinstance(d, (int, Fraction, GaussianRational)):
        return v / d
    raise NotInvertiblePivot(f"cannot divide {type(v).__name__} by {type(d).__name__}")


def _pf_elimination(X: SkewMatrix):
    n = X.size
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = X.upper(i, j)
            a[i][j] = e
            a[j][i] = -e
    sign = 1
    prev = 1
    for p in range(0, n, 2):
        row = a[p]
        q = next((j for j in range(p + 1, n) if row[j]), None)
        if q is None:
            return 0
        if q != p + 1:
            s = p + 1
            a[s], a[q] = a[q], a[s]
            for r in a:
                r[s], r[q] = r[q], r[s]
            sign = -sign
            row = a[p]
        piv = row[p + 1]
        if p + 2 == n:
            return piv if sign > 0 else -piv
        rq = a[p + 1]
        for i in range(p + 2, n):
            ai = a[i]
            for j in range(i + 1, n):
                v = piv * ai[j] if ai[j] else 0
                if row[i] and rq[j]:
                    v = v - row[i] * rq[j]
                if row[j] and rq[i]:
                    v = v + row[j] * rq[i]
                if v:
                    v = _exquo(v, prev)
                ai[j] = v
                a[j][i] = -v
        prev = piv
    return 1  # n == 0


def pfaffian(X: SkewMatrix, method: str = "elimination", row: int = 1):
    """Pfaffian of a skew-symmetric matrix.

    Parameters
    ----------
    X : SkewMatrix
        Entries from any exact commutative ring supported by the package.
    method : {"elimination", "definition", "expansion"}
        Algorithm; all three give identical results.
    row : int
        1-based row/column used by ``expansion``.

    Returns
    -------
    The Pfaffian, in the ring of the entries.  ``Pf`` of the empty matrix is 1
    and odd sizes give 0.
    """
    if not isinstance(X, SkewMatrix):
        X = SkewMatrix.from_rows(X)
    n = X.size
    if n % 2:
        return 0
    if n == 0:
        return 1
    if method == "definition":
        return _pf_definition(X)
    if method == "expansion":
        if not 1 <= row <= n:
            raise ShapeMismatch(f"row {row} outside 1..{n}")
        return _pf_expansion(X, row)
    if method == "elimination":
        try:
            return _pf_elimination(X)
        except NotInvertiblePivot:
            return _pf_expansion(X, 1)
    raise ValueError(f"unknown Pfaffian method {method!r}")


def subpfaffian(X: SkewMatrix, I: Iterable[int], method: str = "elimination"):
    """``Pf X(I)`` for a 1-based index set ``I``; ``Pf X(empty) = 1``."""
    I = tuple(I)
    if any(not 1 <= i <= X.size for i in I):
        raise ShapeMismatch(f"{I} outside 1..{X.size}")
    return pfaffian(X.principal(I), method)


# -- determinants --------------------------------------------------------------


def det(M: RectMatrix):
    """Determinant by cofactor expansion along the first row, memoised on column sets.

    Division-free, so it works over any commutative ring and serves as an
    oracle independent of the Pfaffian code.
    """
    if isinstance(M, SkewMatrix):
        M = M.as_rect()
    n = M.rows
    if M.cols != n:
        raise ShapeMismatch(f"determinant of a {M.shape} matrix")
    if n == 0:
        return 1
    memo: dict[int, object] = {}

    def rec(r: int, mask: int):
        if r == n:
            return 1
        v = memo.get(mask)
        if v is not None:
            return v
        acc = _ProductSum()
        pos = 0
        for c in range(n):
            if mask >> c & 1:
                e = M[r, c]
                if e:
                    sub = rec(r + 1, mask & ~(1 << c))
                    if sub:
                        acc.add(1 if pos % 2 == 0 else -1, [e, sub])
                pos += 1
        v = acc.result()
        memo[mask] = v
        return v

    return rec(0, (1 << n) - 1)


def minor_det(M: RectMatrix, I: Iterable[int], J: Iterable[int]):
    """``det M(I; J)`` for 1-based index sets of equal size; the empty minor is 1."""
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise ShapeMismatch(f"|I| = {len(I)} but |J| = {len(J)}")
    if any(not 1 <= i <= M.rows for i in I) or any(not 1 <= j <= M.cols for j in J):
        raise ShapeMismatch("index set outside the matrix")
    return det(M.select(I, J))


def congruence(X: SkewMatrix, U: RectMatrix) -> SkewMatrix:
    """``U^T X U``, which is again skew-symmetric."""
    n = X.size
    if U.shape != (n, n):
        raise ShapeMismatch(f"U has shape {U.shape}, expected {(n, n)}")
    XU = X.as_rect() @ U

    def entry(i, j):
        acc = 0
        for a in range(n):
            u = U[a, i]
            if u:
                v = XU[a, j]
                if v:
                    acc = acc + u * v
        return acc

    return SkewMatrix(n, entry)


def binom2(k: int) -> int:
    """``C(k, 2)`` (0 for k < 2); the exponent of most signs in this package."""
    return comb(k, 2) if k >= 2 else 0
