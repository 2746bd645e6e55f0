"""Pfaffian identities as executable (left side, right side) pairs.

Every checker returns an :class:`IdentityReport`.  Both sides are computed
independently: the left side by summing sub-Pfaffians and minors over index
sets, the right side as one block Pfaffian, so ``equal`` is a real test and
not a tautology.  With fresh variables as entries (see :class:`EntrySource`)
an equality is a polynomial identity and therefore holds for every
specialization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra.gaussian import is_scalar
from .algebra.polynomial import Polynomial
from .algebra.ratfunc import RationalFunction
from .errors import AlgorithmMismatch, ParityViolation, ShapeMismatch, ZeroPivot
from .pfaffian.core import binom2, minor_det, pfaffian
from .pfaffian.matrices import IndexSet, RectMatrix, SkewMatrix, subsets

__all__ = [
    "EntrySource",
    "IdentityReport",
    "cauchy_binet_pf",
    "cbiw_sum",
    "epsilon_sign",
    "iw2_sum",
    "cauchy_binet_det",
    "laplace_block_diagonal",
    "laplace_expand",
    "laplace_terms",
    "laplace_zero_block",
    "minor_summation_det",
    "minor_summation_pf",
    "report",
    "schur_pfaffian",
    "sylvester_check",
    "sylvester_quotients",
]

# sizes at or below this are re-computed by the matching-sum definition
CROSS_CHECK_SIZE = 6


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity instance."""

    name: str
    lhs: object
    rhs: object
    equal: bool
    parameters: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.equal


def report(name: str, lhs, rhs, **parameters) -> IdentityReport:
    """Build a report; ``equal`` is exact equality of the two sides."""
    return IdentityReport(name, lhs, rhs, bool(lhs == rhs), parameters)


class EntrySource:
    """Supplies independent matrix entries.

    In ``"symbolic"`` mode every call returns a fresh variable; in
    ``"specialized"`` mode a seeded random rational with numerator and
    denominator of absolute value at most 99.
    """

    def __init__(self, mode: str = "symbolic", seed: int = 0, first_var: int = 0) -> None:
        if mode not in ("symbolic", "specialized"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self.next_var = first_var
        self._rng = random.Random(seed)

    def entry(self):
        if self.mode == "symbolic":
            v = Polynomial.var(self.next_var)
            self.next_var += 1
            return v
        num = self._rng.randint(-99, 99)
        return Fraction(num, self._rng.randint(1, 99))

    def skew(self, n: int) -> SkewMatrix:
        return SkewMatrix(n, lambda i, j: self.entry())

    def rect(self, m: int, n: int) -> RectMatrix:
        return RectMatrix.from_function(m, n, lambda i, j: self.entry())


def _pf(X: SkewMatrix):
    """Pfaffian by elimination, re-checked by the definition on small sizes."""
    v = pfaffian(X, "elimination")
    if X.size <= CROSS_CHECK_SIZE and pfaffian(X, "definition") != v:
        raise AlgorithmMismatch(f"elimination and definition disagree on a {X.size}x{X.size} matrix")
    return v


def _bordered(A: SkewMatrix, S: RectMatrix) -> SkewMatrix:
    """``[[A, S], [-S^T, O]]``."""
    return SkewMatrix.from_blocks([[A, S], [None, S.cols]])


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


# -- Laplace-type expansion ----------------------------------------------------


def epsilon_sign(I: Iterable[int], J: Iterable[int], m: int, n: int) -> int:
    """``(-1)**(Σ(I) + Σ(J) + C(m,2) + C(n,2) + C(k,2))`` with ``k = m - |I| = n - |J|``.

    >>> epsilon_sign([], [], 2, 2)
    -1
    """
    I, J = IndexSet(I), IndexSet(J)
    if len(I) % 2 or len(J) % 2:
        raise ParityViolation(f"|I| = {len(I)} and |J| = {len(J)} must be even")
    k = m - len(I)
    if k < 0 or n - len(J) != k:
        raise ParityViolation(f"m - |I| = {k} but n - |J| = {n - len(J)}")
    return _sign(I.sigma + J.sigma + binom2(m) + binom2(n) + binom2(k))


def laplace_terms(Z: SkewMatrix, Zp: SkewMatrix, W: RectMatrix):
    """Yield ``(I, J, term)`` for every summand of the Laplace-type expansion."""
    m, n = Z.size, Zp.size
    if W.shape != (m, n):
        raise ShapeMismatch(f"W has shape {W.shape}, expected {(m, n)}")
    if (m + n) % 2:
        raise ParityViolation(f"m + n = {m + n} is odd")
    pz = {I: _pf(Z.principal(I)) for I in subsets(m, parity=0)}
    pzp = {J: _pf(Zp.principal(J)) for J in subsets(n, parity=0)}
    for I, a in pz.items():
        for J, b in pzp.items():
            k = m - len(I)
            if n - len(J) != k:
                continue
            term = 0
            if a and b:
                d = minor_det(W, I.complement(), J.complement())
                if d:
                    term = epsilon_sign(I, J, m, n) * a * b * d
            yield I, J, term


def laplace_expand(Z: SkewMatrix, Zp: SkewMatrix, W: RectMatrix) -> IdentityReport:
    """``Pf [[Z, W], [-W^T, Z']]`` against its expansion over pairs of sub-Pfaffians."""
    rhs = 0
    for _, _, term in laplace_terms(Z, Zp, W):
        rhs = rhs + term
    lhs = _pf(SkewMatrix.from_blocks([[Z, W], [None, Zp]]))
    return report("laplace", lhs, rhs, m=Z.size, n=Zp.size)


def laplace_zero_block(Z: SkewMatrix, W: RectMatrix) -> IdentityReport:
    """``Pf [[Z, W], [-W^T, O]]`` against its closed form.

    The closed form is ``(-1)**C(m,2) det W`` when ``m = n``, 0 when
    ``m < n``, and a sum over ``(m-n)``-subsets ``I ⊆ [m]`` when ``m > n``.
    """
    m, n = Z.size, W.cols
    if W.rows != m:
        raise ShapeMismatch(f"W has {W.rows} rows, expected {m}")
    lhs = _pf(_bordered(Z, W))
    if m == n:
        rhs = _sign(binom2(m)) * minor_det(W, range(1, m + 1), range(1, n + 1))
        branch = "m=n"
    elif m < n:
        rhs, branch = 0, "m<n"
    else:
        rhs, branch = 0, "m>n"
        for I in subsets(m, size=m - n):
            a = _pf(Z.principal(I))
            if a:
                rhs = rhs + _sign(I.sigma + binom2(m)) * a * minor_det(W, I.complement(), range(1, n + 1))
    return report("laplace", lhs, rhs, m=m, n=n, branch=branch)


def laplace_block_diagonal(Z: SkewMatrix, Zp: SkewMatrix) -> IdentityReport:
    """``Pf [[Z, O], [O, Z']]`` against ``Pf Z * Pf Z'`` (even sizes) or 0."""
    m, n = Z.size, Zp.size
    lhs = _pf(SkewMatrix.from_blocks([[Z, None], [None, Zp]]))
    rhs = _pf(Z) * _pf(Zp) if m % 2 == 0 and n % 2 == 0 else 0
    return report("laplace", lhs, rhs, m=m, n=n, branch="block-diagonal")


# -- Cauchy-Binet / Ishikawa-Wakayama family -----------------------------------


def cbiw_sum(Z: SkewMatrix, Zp: SkewMatrix, m: int, n: int, l: int) -> IdentityReport:
    """``Pf [[Z, E], [-E^T, Z']]`` with ``E = E^{(m+l, n+l)}_l`` against the sum over ``K ⊆ [l]``."""
    if (m - n) % 2:
        raise ParityViolation(f"m = {m} and n = {n} differ in parity")
    if Z.size != m + l or Zp.size != n + l:
        raise ShapeMismatch(f"expected sizes {m + l} and {n + l}, got {Z.size} and {Zp.size}")
    E = RectMatrix.corner_identity(m, n, l)
    lhs = _pf(SkewMatrix.from_blocks([[Z, E], [None, Zp]]))
    rhs = 0
    for K in subsets(l, parity=m % 2):
        a = _pf(Z.principal(list(range(1, m + 1)) + [m + k for k in K]))
        if not a:
            continue
        b = _pf(Zp.principal(list(range(1, n + 1)) + [n + k for k in K]))
        if b:
            rhs = rhs + _sign(binom2(l - len(K))) * a * b
    return report("cbiw", lhs, rhs, m=m, n=n, l=l)


def cauchy_binet_pf(A: SkewMatrix, B: SkewMatrix, S: RectMatrix, T: RectMatrix,
                    variant: str = "CB1") -> IdentityReport:
    """Pfaffian analogue of Cauchy-Binet.

    ``variant="CB1"`` weights the sum by ``(-1)**C(|K|,2)`` and compares with
    ``Pf [[A, S T^T], [-T S^T, B]]``; ``"CB2"`` drops the weight and compares
    with ``(-1)**C(n,2) Pf [[A, S T^T], [-T S^T, -B]]``.
    """
    m, n, l = A.size, B.size, S.cols
    if S.rows != m or T.shape != (n, l):
        raise ShapeMismatch(f"S is {S.shape} and T is {T.shape} for m={m}, n={n}")
    if (m - n) % 2:
        raise ParityViolation(f"m = {m} and n = {n} differ in parity")
    if variant not in ("CB1", "CB2"):
        raise ValueError(f"unknown variant {variant!r}")
    lhs = 0
    for K in subsets(l, parity=m % 2):
        a = _pf(_bordered(A, S.select(None, K)))
        if not a:
            continue
        b = _pf(_bordered(B, T.select(None, K)))
        if b:
            s = _sign(binom2(len(K))) if variant == "CB1" else 1
            lhs = lhs + s * a * b
    STt = S @ T.T
    if variant == "CB1":
        rhs = _pf(SkewMatrix.from_blocks([[A, STt], [None, B]]))
    else:
        rhs = _sign(binom2(n)) * _pf(SkewMatrix.from_blocks([[A, STt], [None, -B]]))
    name = "cauchy-binet-1" if variant == "CB1" else "cauchy-binet-2"
    return report(name, lhs, rhs, m=m, n=n, l=l)


def cauchy_binet_det(S: RectMatrix, T: RectMatrix) -> IdentityReport:
    """``Σ_K det S(:,K) det T(:,K)`` over ``m``-subsets ``K ⊆ [l]`` against ``det(S T^T)``."""
    m, l = S.shape
    if T.shape != (m, l):
        raise ShapeMismatch(f"S is {S.shape} but T is {T.shape}")
    rows = range(1, m + 1)
    lhs = 0
    for K in subsets(l, size=m):
        a = minor_det(S, rows, K)
        if a:
            lhs = lhs + a * minor_det(T, rows, K)
    rhs = minor_det(S @ T.T, rows, rows)
    return report("cauchy-binet-det", lhs, rhs, m=m, l=l)


def minor_summation_det(B: SkewMatrix, S: RectMatrix) -> IdentityReport:
    """``Σ_K Pf B(K) det S(:,K)`` over ``m``-subsets ``K ⊆ [l]`` against ``Pf(S B S^T)``."""
    m, l = S.shape
    if B.size != l:
        raise ShapeMismatch(f"B is {B.size}x{B.size}, expected {l}x{l}")
    rows = range(1, m + 1)
    lhs = 0
    for K in subsets(l, size=m):
        b = _pf(B.principal(K))
        if b:
            lhs = lhs + b * minor_det(S, rows, K)
    SBSt = S @ B.as_rect() @ S.T
    rhs = _pf(SkewMatrix(m, lambda i, j: SBSt[i, j]))
    return report("minor-summation-det", lhs, rhs, m=m, l=l)


def minor_summation_pf(A: SkewMatrix, B: SkewMatrix, S: RectMatrix) -> IdentityReport:
    """``Σ_K Pf B(K) Pf [[A, S(:,K)], [-S(:,K)^T, O]]`` against ``Pf(A - S B S^T)``."""
    m, l = A.size, B.size
    if S.shape != (m, l):
        raise ShapeMismatch(f"S has shape {S.shape}, expected {(m, l)}")
    if m % 2:
        raise ParityViolation(f"m = {m} is odd")
    lhs = 0
    for K in subsets(l, parity=0):
        b = _pf(B.principal(K))
        if b:
            a = _pf(_bordered(A, S.select(None, K)))
            if a:
                lhs = lhs + a * b
    SBSt = S @ B.as_rect() @ S.T
    rhs = _pf(SkewMatrix(m, lambda i, j: A[i, j] - SBSt[i, j]))
    return report("minor-summation", lhs, rhs, m=m, l=l)


def iw2_sum(A: SkewMatrix, B: SkewMatrix, T: RectMatrix) -> IdentityReport:
    """``Σ (-1)**C(l-|I|,2) det T(I;J) Pf A(I) Pf B(J)`` against ``Pf [[A, E], [-E, T B T^T]]``."""
    l = A.size
    if B.size != l or T.shape != (l, l):
        raise ShapeMismatch("A, B and T must all be l x l")
    pa = {I: _pf(A.principal(I)) for I in subsets(l, parity=0)}
    pb = {J: _pf(B.principal(J)) for J in subsets(l, parity=0)}
    lhs = 0
    for I, a in pa.items():
        if not a:
            continue
        for J, b in pb.items():
            if len(J) != len(I) or not b:
                continue
            d = minor_det(T, I, J)
            if d:
                lhs = lhs + _sign(binom2(l - len(I))) * d * a * b
    TBTt = T @ B.as_rect() @ T.T
    C = SkewMatrix(l, lambda i, j: TBTt[i, j])
    rhs = _pf(SkewMatrix.from_blocks([[A, RectMatrix.identity(l)], [None, C]]))
    return report("iw2", lhs, rhs, l=l)


# -- Sylvester ------------------------------------------------------------------


def _as_ratfn(v) -> RationalFunction:
    return v if isinstance(v, RationalFunction) else RationalFunction(v)


def _quotient(a, b):
    if is_scalar(a) and is_scalar(b):
        return (Fraction(a) if isinstance(a, int) else a) / b
    return _as_ratfn(a) / b


def sylvester_quotients(X: SkewMatrix, n: int, variant: str = "pivot-first"):
    """The pivot ``Pf X([n])`` (or ``Pf X([l+1, l+n])``) and the ``l x l`` matrix of quotients."""
    size = X.size
    l = size - n
    if n < 0 or l < 0 or n % 2 or l % 2:
        raise ParityViolation(f"n = {n} and l = {l} must be nonnegative and even")
    if variant == "pivot-first":
        core = list(range(1, n + 1))
        outer = [n + i for i in range(1, l + 1)]
    elif variant == "pivot-last":
        core = list(range(l + 1, l + n + 1))
        outer = list(range(1, l + 1))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    pivot = _pf(X.principal(core))
    if not pivot:
        raise ZeroPivot("the pivot sub-Pfaffian vanishes identically")
    Q = SkewMatrix(l, lambda i, j: _quotient(_pf(X.principal(core + [outer[i], outer[j]])), pivot))
    return pivot, Q


def sylvester_check(X: SkewMatrix, n: int, variant: str = "pivot-first") -> IdentityReport:
    """Pfaffian of the quotient matrix against ``Pf X / pivot``."""
    pivot, Q = sylvester_quotients(X, n, variant)
    lhs = _pf(Q)
    rhs = _quotient(_pf(X), pivot)
    return report("sylvester", lhs, rhs, n=n, l=X.size - n, variant=variant)


# -- Schur Pfaffian --------------------------------------------------------------


def _ring_element(v):
    return Polynomial.var(v) if isinstance(v, int) else v


def schur_pfaffian(x: Sequence) -> IdentityReport:
    """``Pf((x_j - x_i)/(x_j + x_i))`` against ``Π_{i<j} (x_j - x_i)/(x_j + x_i)``.

    Items of ``x`` are ring elements, or ints naming variables by index.
    """
    xs = [_ring_element(v) for v in x]
    if len(xs) % 2:
        raise ParityViolation(f"{len(xs)} variables; an even number is required")
    A = SkewMatrix(len(xs), lambda i, j: _as_ratfn(xs[j] - xs[i]) / (xs[j] + xs[i]))
    rhs = RationalFunction(1)
    for j in range(len(xs)):
        for i in range(j):
            rhs = rhs * (_as_ratfn(xs[j] - xs[i]) / (xs[j] + xs[i]))
    return report("schur-pfaffian", _pf(A), rhs, n=len(xs))

