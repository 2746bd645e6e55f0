"""Truncated multivariate power series and expansion of rational functions."""

from __future__ import annotations

from typing import Iterable

from ..errors import NotExpandable
from .gaussian import is_scalar
from .polynomial import Polynomial
from .ratfunc import RationalFunction

__all__ = ["TruncatedSeries", "series_expand"]


def _grading(graded: Iterable[int] | None) -> frozenset[int] | None:
    return None if graded is None else frozenset(graded)


class TruncatedSeries:
    """A power series known exactly up to degree ``bound``.

    The degree is the total degree in the ``graded`` variables (all variables
    when ``graded`` is None); the remaining variables act as coefficients.
    Binary operations truncate to the smaller of the two bounds.
    """

    __slots__ = ("poly", "bound", "graded")

    def __init__(self, poly, bound: int, graded: Iterable[int] | None = None) -> None:
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        if is_scalar(poly):
            poly = Polynomial.constant(poly)
        gv = _grading(graded)
        object.__setattr__(self, "graded", gv)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "poly", poly.truncate(bound, gv))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def _coerce(self, other) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            if other.graded != self.graded:
                raise ValueError("series graded by different variable sets")
            return other
        if isinstance(other, Polynomial) or is_scalar(other):
            return TruncatedSeries(other, self.bound, self.graded)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncatedSeries(self.poly + o.poly, min(self.bound, o.bound), self.graded)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-self.poly, self.bound, self.graded)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        bound = min(self.bound, o.bound)
        # multiply component-wise so nothing above the bound is ever formed
        a = self.poly.components(self.graded)
        b = o.poly.components(self.graded)
        out = Polynomial.constant(0)
        for da, pa in a.items():
            for db, pb in b.items():
                if da + db <= bound:
                    out = out + pa * pb
        return TruncatedSeries(out, bound, self.graded)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        result = TruncatedSeries(1, self.bound, self.graded)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, TruncatedSeries) else other
        if o is None:
            return NotImplemented
        bound = min(self.bound, o.bound)
        return self.poly.truncate(bound, self.graded) == o.poly.truncate(bound, self.graded)

    __hash__ = None

    def coefficient_of(self, partial: dict[int, int]) -> Polynomial:
        return self.poly.coefficient_of(partial)

    def __repr__(self) -> str:
        g = "all" if self.graded is None else sorted(self.graded)
        return f"TruncatedSeries({self.poly.to_str()!r}, bound={self.bound}, graded={g})"


def series_expand(f, d: int, graded: Iterable[int] | None = None) -> TruncatedSeries:
    """Power series of ``f`` about the origin, exact through degree ``d``.

    ``f`` may be a polynomial or a rational function whose denominator has a
    nonzero constant part in the graded variables.  Raises
    :class:`NotExpandable` otherwise, e.g. for ``(z - w)/(z + w)``.

    >>> from qfun.algebra import Polynomial
    >>> x, z = Polynomial.var(0), Polynomial.var(1)
    >>> s = series_expand((1 + x*z) / (1 - x*z), 3, graded=[1])
    >>> str(s.poly)
    '2*x1^3*x2^3 + 2*x1^2*x2^2 + 2*x1*x2 + 1'
    """
    gv = _grading(graded)
    if isinstance(f, Polynomial) or is_scalar(f):
        return TruncatedSeries(f, d, gv)
    if not isinstance(f, RationalFunction):
        raise TypeError(f"cannot expand {type(f).__name__}")
    num = f.num.components(gv)
    den = f.den.components(gv)
    c0 = den.get(0)
    if c0 is None or not c0.is_constant():
        raise NotExpandable("denominator does not have an invertible constant term")
    inv = 1 / c0.constant_term()
    # S_k = (N_k - sum_{j>=1} D_j S_{k-j}) / D_0
    coeffs: list[Polynomial] = []
    zero = Polynomial.constant(0)
    for k in range(d + 1):
        acc = num.get(k, zero)
        for j in range(1, k + 1):
            dj = den.get(j)
            if dj is not None and coeffs[k - j]:
                acc = acc - dj * coeffs[k - j]
        coeffs.append(acc * inv)
    total = zero
    for c in coeffs:
        total = total + c
    return TruncatedSeries(total, d, gv)
