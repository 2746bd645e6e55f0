"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["GaussianRational", "I", "is_scalar", "canon", "as_gaussian"]


class GaussianRational:
    """An element ``re + im*i`` of Q(i).

    Both parts are :class:`fractions.Fraction`, so they are always reduced and
    carry a positive denominator.  Instances are immutable and hashable; a
    value with zero imaginary part hashes (and compares) like the real number.

    >>> (GaussianRational(1, 1) * GaussianRational(1, -1))
    GaussianRational(2, 0)
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: object = 0, im: object = 0) -> None:
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            re, im = re._re, re._im
        object.__setattr__(self, "_re", Fraction(re))
        object.__setattr__(self, "_im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def is_real(self) -> bool:
        return self._im == 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, o._re, o._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o._re / n, -o._im / n)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> GaussianRational:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / self**-k
        result, base = GaussianRational(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> GaussianRational:
        return self

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    def __repr__(self) -> str:
        return f"GaussianRational({self._re}, {self._im})"

    def __str__(self) -> str:
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{_fmt_im(self._im)}"
        sign = "-" if self._im < 0 else "+"
        return f"({self._re}{sign}{_fmt_im(abs(self._im))})"


def _fmt_im(v: Fraction) -> str:
    if v == 1:
        return "I"
    if v == -1:
        return "-I"
    return f"{v}*I"


def _coerce(x) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return GaussianRational(x)
    return None


I = GaussianRational(0, 1)


def is_scalar(x) -> bool:
    """True for the coefficient types Polynomial accepts: int, Fraction, GaussianRational."""
    return isinstance(x, (int, Fraction, GaussianRational)) and not isinstance(x, bool)


def canon(c):
    """Demote a coefficient to the cheapest exact type with the same value.

    Real Gaussian rationals become Fractions and integral Fractions become
    ints; polynomial internals rely on this to keep the common case fast.
    """
    if type(c) is int:
        return c
    if isinstance(c, GaussianRational):
        if c.im:
            return c
        c = c.re
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, Rational):
        return canon(Fraction(c))
    raise TypeError(f"not an exact scalar: {c!r}")


def as_gaussian(c) -> GaussianRational:
    return c if isinstance(c, GaussianRational) else GaussianRational(c)
