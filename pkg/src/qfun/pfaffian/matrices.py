"""Matrix containers and index-set combinatorics.

Entries may be any exact ring element: int, Fraction, GaussianRational,
Polynomial or RationalFunction.  Index sets follow the usual mathematical
convention and are 1-based; ``__getitem__`` on matrices is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from ..errors import NotSkewSymmetric, ShapeMismatch

__all__ = [
    "IndexSet",
    "PerfectMatching",
    "RectMatrix",
    "SkewMatrix",
    "subsets",
]


class IndexSet(Sequence[int]):
    """A strictly increasing set of integers, optionally inside a ground set ``[n]``.

    With ``ground=None`` the ambient set is the nonnegative integers (used for
    the index sets attached to strict partitions, which may contain 0).
    """

    __slots__ = ("_elems", "ground")

    def __init__(self, elements: Iterable[int] = (), ground: int | None = None) -> None:
        elems = tuple(sorted(elements))
        if len(set(elems)) != len(elems):
            raise ValueError(f"repeated element in {elems}")
        lo = 0 if ground is None else 1
        if elems and (elems[0] < lo or (ground is not None and elems[-1] > ground)):
            raise ValueError(f"{elems} not within the ground set")
        self._elems = elems
        self.ground = ground

    @classmethod
    def full(cls, n: int) -> IndexSet:
        """``[n] = {1, ..., n}``."""
        return cls(range(1, n + 1), n)

    @classmethod
    def interval(cls, a: int, b: int, ground: int | None = None) -> IndexSet:
        """``[a, b] = {a, ..., b}`` (empty if ``b < a``)."""
        return cls(range(a, b + 1), ground)

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elems

    @property
    def sigma(self) -> int:
        """Sum of the elements."""
        return sum(self._elems)

    def complement(self) -> IndexSet:
        if self.ground is None:
            raise ValueError("complement needs a finite ground set")
        s = set(self._elems)
        return IndexSet((i for i in range(1, self.ground + 1) if i not in s), self.ground)

    def shift(self, k: int, ground: int | None = None) -> IndexSet:
        """``k + I``."""
        return IndexSet((i + k for i in self._elems), ground)

    def union(self, other: Iterable[int], ground: int | None = None) -> IndexSet:
        g = self.ground if ground is None else ground
        return IndexSet(set(self._elems) | set(other), g)

    def zero_based(self) -> tuple[int, ...]:
        return tuple(i - 1 for i in self._elems)

    def __getitem__(self, i):
        return self._elems[i]

    def __len__(self) -> int:
        return len(self._elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elems)

    def __contains__(self, x) -> bool:
        return x in self._elems

    def __eq__(self, other) -> bool:
        if isinstance(other, IndexSet):
            return self._elems == other._elems
        if isinstance(other, (tuple, list)):
            return self._elems == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elems)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self._elems)) + "}"


def subsets(n: int, *, size: int | None = None, parity: int | None = None,
            offset: int = 1) -> list[IndexSet]:
    """Subsets of ``{offset, ..., offset+n-1}`` in lexicographic order of their element lists.

    ``size`` fixes the cardinality; ``parity`` keeps cardinalities congruent
    to it mod 2.
    """
    ground = n if offset == 1 else None
    sizes = [size] if size is not None else range(n + 1)
    out = []
    for k in sizes:
        if k < 0 or k > n or (parity is not None and (k - parity) % 2):
            continue
        out.extend(combinations(range(offset, offset + n), k))
    out.sort()
    return [IndexSet(c, ground) for c in out]


@dataclass(frozen=True)
class PerfectMatching:
    """A partition of ``{1, ..., 2m}`` into 2-element blocks ``(i, j)``, ``i < j``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        flat = sorted(x for p in pairs for x in p)
        if any(len(p) != 2 for p in pairs) or flat != list(range(1, len(flat) + 1)):
            raise ValueError(f"{self.pairs} is not a perfect matching of [2m]")
        object.__setattr__(self, "pairs", pairs)

    @property
    def size(self) -> int:
        return 2 * len(self.pairs)


class RectMatrix:
    """Dense ``rows x cols`` matrix, stored row-major as nested tuples."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None) -> None:
        e = tuple(tuple(r) for r in entries)
        if cols is None:
            cols = len(e[0]) if e else 0
        if any(len(r) != cols for r in e):
            raise ShapeMismatch("ragged rows")
        self.rows = len(e)
        self.cols = cols
        self._e = e

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], object]) -> RectMatrix:
        """Entry ``(i, j)`` is ``f(i, j)``; indices are 0-based."""
        return cls([[f(i, j) for j in range(cols)] for i in range(rows)], cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RectMatrix:
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> RectMatrix:
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @classmethod
    def corner_identity(cls, m: int, n: int, l: int) -> RectMatrix:
        """``E^{(m+l, n+l)}_l``: zero except an ``l x l`` identity in the lower right corner."""
        return cls.from_function(
            m + l, n + l, lambda i, j: int(i >= m and j >= n and i - m == j - n)
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def to_rows(self) -> list[list]:
        return [list(r) for r in self._e]

    def transpose(self) -> RectMatrix:
        return RectMatrix([[r[j] for r in self._e] for j in range(self.cols)], self.rows)

    T = property(transpose)

    def select(self, rows: Iterable[int] | None = None, cols: Iterable[int] | None = None) -> RectMatrix:
        """``X(I; J)`` with 1-based ``I``, ``J`` (None keeps everything)."""
        ri = range(self.rows) if rows is None else [i - 1 for i in rows]
        ci = list(range(self.cols)) if cols is None else [j - 1 for j in cols]
        return RectMatrix([[self._e[i][j] for j in ci] for i in ri], len(ci))

    def __neg__(self) -> RectMatrix:
        return RectMatrix([[-x for x in r] for r in self._e], self.cols)

    def __add__(self, other: RectMatrix) -> RectMatrix:
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        return RectMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._e, other._e)], self.cols
        )

    def __sub__(self, other: RectMatrix) -> RectMatrix:
        return self + (-other)

    def __matmul__(self, other: RectMatrix) -> RectMatrix:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if not other.rows:
            return RectMatrix.zeros(self.rows, other.cols)
        cols = list(zip(*other._e))
        out = []
        for r in self._e:
            row = []
            for c in range(other.cols):
                acc = 0
                for a, b in zip(r, cols[c]):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RectMatrix(out, other.cols)

    def scale(self, c) -> RectMatrix:
        return RectMatrix([[c * x for x in r] for r in self._e], self.cols)

    def map(self, f: Callable) -> RectMatrix:
        return RectMatrix([[f(x) for x in r] for r in self._e], self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RectMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self._e, other._e) for a, b in zip(r, s)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"RectMatrix({self.rows}x{self.cols})"


class SkewMatrix:
    """Skew-symmetric ``n x n`` matrix storing only the strict upper triangle.

    ``X[i, j]`` for ``i > j`` reads as ``-X[j, i]`` and the diagonal is 0, so
    skewness holds by construction.
    """

    __slots__ = ("size", "_u")

    def __init__(self, size: int, upper: Callable[[int, int], object] | None = None) -> None:
        if size < 0:
            raise ShapeMismatch("negative size")
        self.size = size
        if upper is None:
            self._u = tuple(tuple(0 for _ in range(i + 1, size)) for i in range(size))
        else:
            self._u = tuple(tuple(upper(i, j) for j in range(i + 1, size)) for i in range(size))

    @classmethod
    def _from_upper(cls, u: Sequence[Sequence]) -> SkewMatrix:
        X = object.__new__(cls)
        X.size = len(u)
        X._u = tuple(tuple(r) for r in u)
        return X

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> SkewMatrix:
        """Build from a full square array, checking skew-symmetry exactly."""
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ShapeMismatch("array is not square")
        for i in range(n):
            if rows[i][i]:
                raise NotSkewSymmetric(f"nonzero diagonal entry at ({i}, {i})")
            for j in range(i + 1, n):
                if rows[j][i] != -rows[i][j]:
                    raise NotSkewSymmetric(f"entries ({i}, {j}) and ({j}, {i}) are not negatives")
        return cls._from_upper([[rows[i][j] for j in range(i + 1, n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int) -> SkewMatrix:
        return cls(n)

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence]) -> SkewMatrix:
        """Assemble ``[[Z_1, W_12, ...], [., Z_2, ...], ...]`` from its upper block triangle.

        Diagonal blocks are SkewMatrix instances (or an int ``k`` for a ``k x k``
        zero block); blocks above the diagonal are RectMatrix or None for zero.
        Blocks below the diagonal are ignored: they are implied by skewness.
        """
        diag = [SkewMatrix(b) if isinstance(b, int) else b for b in (blocks[i][i] for i in range(len(blocks)))]
        sizes = [d.size for d in diag]
        n = sum(sizes)
        owner = []
        for k, s in enumerate(sizes):
            owner.extend((k, t) for t in range(s))
        for a in range(len(blocks)):
            for b in range(a + 1, len(blocks)):
                W = blocks[a][b]
                if W is not None and W.shape != (sizes[a], sizes[b]):
                    raise ShapeMismatch(f"block ({a}, {b}) has shape {W.shape}, expected {(sizes[a], sizes[b])}")

        def entry(i, j):
            (a, s), (b, t) = owner[i], owner[j]
            if a == b:
                return diag[a][s, t]
            W = blocks[a][b]
            return 0 if W is None else W[s, t]

        return cls(n, entry)

    def __getitem__(self, ij):
        i, j = ij
        if i < j:
            return self._u[i][j - i - 1]
        if i > j:
            return -self._u[j][i - j - 1]
        return 0

    def upper(self, i: int, j: int):
        """Entry ``(i, j)`` for ``i < j`` without the sign branch."""
        return self._u[i][j - i - 1]

    def principal(self, I: Iterable[int]) -> SkewMatrix:
        """``X(I)`` for a 1-based index set ``I`` (taken in increasing order)."""
        idx = sorted(i - 1 for i in I)
        return SkewMatrix(len(idx), lambda a, b: self[idx[a], idx[b]])

    def permuted(self, order: Sequence[int]) -> SkewMatrix:
        """Rows/columns reordered: new index ``a`` is old index ``order[a]`` (0-based)."""
        if sorted(order) != list(range(self.size)):
            raise ValueError("order must be a permutation")
        return SkewMatrix(self.size, lambda a, b: self[order[a], order[b]])

    def to_rows(self) -> list[list]:
        return [[self[i, j] for j in range(self.size)] for i in range(self.size)]

    def as_rect(self) -> RectMatrix:
        return RectMatrix(self.to_rows(), self.size)

    def __neg__(self) -> SkewMatrix:
        return SkewMatrix._from_upper([[-x for x in r] for r in self._u])

    def __add__(self, other: SkewMatrix) -> SkewMatrix:
        if self.size != other.size:
            raise ShapeMismatch("sizes differ")
        return SkewMatrix._from_upper([[a + b for a, b in zip(r, s)] for r, s in zip(self._u, other._u)])

    def __sub__(self, other: SkewMatrix) -> SkewMatrix:
        return self + (-other)

    def scale(self, c) -> SkewMatrix:
        return SkewMatrix._from_upper([[c * x for x in r] for r in self._u])

    def map(self, f: Callable) -> SkewMatrix:
        return SkewMatrix._from_upper([[f(x) for x in r] for r in self._u])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self.size == other.size and all(
            a == b for r, s in zip(self._u, other._u) for a, b in zip(r, s)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"SkewMatrix({self.size}x{self.size})"
