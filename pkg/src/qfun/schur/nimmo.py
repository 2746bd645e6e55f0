"""Schur P- and Q-functions through Nimmo's Pfaffian quotient."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from ..algebra.polynomial import Polynomial
from ..algebra.ratfunc import RationalFunction
from ..pfaffian.core import pfaffian
from ..pfaffian.matrices import RectMatrix, SkewMatrix
from .partitions import StrictPartition

__all__ = [
    "QExpr",
    "VariableMap",
    "build_nimmo_matrices",
    "chi",
    "nimmo_P",
    "nimmo_Q",
    "nimmo_pfaffian",
    "schur_A",
    "schur_D",
]


def chi(r: int) -> int:
    """2 for positive ``r``, 1 for ``r = 0``."""
    if r < 0:
        raise ValueError("chi is defined on nonnegative integers")
    return 2 if r > 0 else 1


@dataclass(frozen=True)
class VariableMap:
    """Slots of the x, y, z and w alphabets inside the single global alphabet.

    x occupies ``0..n-1`` and y the next ``k`` indices; z and w, when
    requested, follow.
    """

    n: int
    k: int = 0
    z: bool = False
    w: bool = False

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 0:
            raise ValueError("alphabet sizes must be nonnegative")

    @property
    def x_range(self) -> range:
        return range(0, self.n)

    @property
    def y_range(self) -> range:
        return range(self.n, self.n + self.k)

    @property
    def z_index(self) -> int | None:
        return self.n + self.k if self.z else None

    @property
    def w_index(self) -> int | None:
        if not self.w:
            return None
        return self.n + self.k + (1 if self.z else 0)

    @property
    def size(self) -> int:
        return self.n + self.k + self.z + self.w

    def x(self, i: int) -> Polynomial:
        return Polynomial.var(self.x_range[i])

    def y(self, j: int) -> Polynomial:
        return Polynomial.var(self.y_range[j])

    def name(self, index: int) -> str:
        if index in self.x_range:
            return f"x{index + 1}"
        if index in self.y_range:
            return f"y{index - self.n + 1}"
        if index == self.z_index:
            return "z"
        if index == self.w_index:
            return "w"
        return f"t{index + 1}"


@dataclass(frozen=True, eq=False)
class QExpr:
    """A P-, Q- or skew Q-function evaluated in finitely many variables.

    ``value`` is a polynomial over the global alphabet; ``label`` records what
    it is, e.g. ``"Q(2,1)"``, and ``nvars`` the number of variables in play.
    """

    value: Polynomial
    label: str = ""
    nvars: int = 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QExpr):
            return self.value == other.value
        return self.value == other

    def __hash__(self) -> int:
        return hash(self.value)

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_symmetric(self, variables: Iterable[int] | None = None) -> bool:
        """Invariance under every adjacent transposition of ``variables``."""
        vs = list(range(self.nvars) if variables is None else variables)
        for a, b in zip(vs, vs[1:]):
            if self.value.rename({a: b, b: a}) != self.value:
                return False
        return True

    def to_str(self, names=None) -> str:
        return self.value.to_str(names)

    def __str__(self) -> str:
        return self.value.to_str()

    def __repr__(self) -> str:
        return f"QExpr({self.label}: {self.value.to_str()})"


def _vars(alphabet: Sequence[int]) -> list[Polynomial]:
    return [Polynomial.var(i) for i in alphabet]


def schur_A(alphabet: Sequence[int]) -> SkewMatrix:
    """``A(x) = ((x_j - x_i)/(x_j + x_i))`` on the given variable indices."""
    xs = _vars(alphabet)
    return SkewMatrix(len(xs), lambda i, j: RationalFunction(xs[j] - xs[i], xs[j] + xs[i]))


def schur_D(alphabet: Sequence[int]) -> RationalFunction:
    """``D(x) = prod_{i<j} (x_j - x_i)/(x_j + x_i)``."""
    xs = _vars(alphabet)
    num, den = Polynomial.constant(1), Polynomial.constant(1)
    for j in range(len(xs)):
        for i in range(j):
            num = num * (xs[j] - xs[i])
            den = den * (xs[j] + xs[i])
    return RationalFunction(num, den)


def _alphabet(n: int | Sequence[int]) -> tuple[int, ...]:
    if isinstance(n, int):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        return tuple(range(n))
    return tuple(n)


def build_nimmo_matrices(lam: Iterable[int], n: int | Sequence[int]):
    """``(A, V, W, alpha)`` for Nimmo's formula in ``n`` variables.

    ``alpha`` is ``lam`` with a 0 appended when ``n + l`` is odd; ``V`` has
    entries ``x_i**alpha_j`` and ``W`` entries ``chi(alpha_j) * x_i**alpha_j``.
    ``n`` may also be an explicit tuple of variable indices.
    """
    lam = StrictPartition(lam)
    alphabet = _alphabet(n)
    alpha = lam.padded(len(alphabet))
    xs = _vars(alphabet)
    V = RectMatrix.from_function(len(xs), len(alpha), lambda i, j: xs[i] ** alpha[j])
    W = RectMatrix.from_function(len(xs), len(alpha), lambda i, j: chi(alpha[j]) * xs[i] ** alpha[j])
    return schur_A(alphabet), V, W, alpha


def nimmo_pfaffian(lam: Iterable[int], n: int | Sequence[int], kind: str = "Q",
                   method: str = "elimination"):
    """The block Pfaffian ``Pf [[A(x), W], [-W^T, O]]`` (``V`` for ``kind="P"``) before division by ``D(x)``."""
    A, V, W, alpha = build_nimmo_matrices(lam, n)
    M = W if kind == "Q" else V
    return pfaffian(SkewMatrix.from_blocks([[A, M], [None, len(alpha)]]), method)


@lru_cache(maxsize=4096)
def _nimmo(lam: tuple[int, ...], alphabet: tuple[int, ...], kind: str, method: str) -> Polynomial:
    if len(lam) > len(alphabet):
        return Polynomial.constant(0)
    if not alphabet:
        return Polynomial.constant(1)
    pf = nimmo_pfaffian(lam, alphabet, kind, method)
    if not pf:
        return Polynomial.constant(0)
    pf = pf if isinstance(pf, RationalFunction) else RationalFunction(pf)
    quotient = pf / schur_D(alphabet)
    # to_polynomial divides exactly and raises InexactDivision otherwise
    return quotient.to_polynomial()


def _label(kind: str, lam: Sequence[int]) -> str:
    return kind + "(" + ",".join(map(str, lam)) + ")"


def nimmo_Q(lam: Iterable[int], n: int | Sequence[int], method: str = "elimination") -> QExpr:
    """``Q_λ(x_1, ..., x_n) = Pf [[A(x), W_α], [-W_α^T, O]] / D(x)``.

    Zero when ``l(λ) > n``; ``Q_∅ = 1``.

    >>> nimmo_Q([1], 2).to_str()
    '2*x1 + 2*x2'
    """
    lam = StrictPartition(lam)
    alphabet = _alphabet(n)
    return QExpr(_nimmo(tuple(lam), alphabet, "Q", method), _label("Q", lam), len(alphabet))


def nimmo_P(lam: Iterable[int], n: int | Sequence[int], method: str = "elimination") -> QExpr:
    """``P_λ(x)``: Nimmo's quotient with the unweighted matrix ``V_α``."""
    lam = StrictPartition(lam)
    alphabet = _alphabet(n)
    return QExpr(_nimmo(tuple(lam), alphabet, "P", method), _label("P", lam), len(alphabet))
