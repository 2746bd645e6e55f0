"""Quotients of polynomials, kept reduced where a gcd is available."""

from __future__ import annotations

from typing import Mapping

from ..errors import DenominatorVanishes, InexactDivision
from .gaussian import canon, is_scalar
from .polynomial import Polynomial, poly_gcd

__all__ = ["RationalFunction"]

_ONE = Polynomial.constant(1)


def _gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    # A failed gcd only costs reduction, never correctness.
    try:
        return poly_gcd(a, b)
    except Exception:  # pragma: no cover - defensive
        return _ONE


class RationalFunction:
    """``num / den`` with ``den`` nonzero.

    On construction the common gcd is cancelled and the denominator is scaled
    so that its leading coefficient (graded reverse-lex) is 1.  Equality is
    decided by cross-multiplication, so it stays correct even for operands
    that were built without reduction.

    Arithmetic follows Henrici's scheme: only the gcds that can actually be
    nontrivial are computed.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, *, normalize: bool = True) -> None:
        n = _poly(num)
        d = _poly(den)
        if n is None or d is None:
            raise TypeError("numerator and denominator must be polynomials or scalars")
        if not d:
            raise ZeroDivisionError("zero denominator")
        if normalize:
            n, d = _reduce(n, d)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _make(cls, num: Polynomial, den: Polynomial) -> RationalFunction:
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    # -- inspection ---------------------------------------------------------

    def is_polynomial(self) -> bool:
        return self.den.is_constant() or self.den.divides(self.num)

    def to_polynomial(self) -> Polynomial:
        """The polynomial equal to this quotient; :class:`InexactDivision` otherwise."""
        if self.den.is_constant():
            return self.num / self.den.constant_term()
        return self.num.exact_div(self.den)

    def is_real(self) -> bool:
        return self.num.is_real() and self.den.is_real()

    @property
    def nvars(self) -> int:
        return max(self.num.nvars, self.den.nvars)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _ratfn(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a:
            return o
        if not c:
            return self
        if b == d:
            n = a + c
            if not n:
                return _ZERO
            if b.is_constant():
                return RationalFunction._make(n, b)
            g = _gcd(n, b)
            if g.is_constant():
                return RationalFunction._make(n, b)
            return RationalFunction._make(n.exact_div(g), b.exact_div(g))._monic()
        if b.is_constant() and d.is_constant():
            return RationalFunction._make(a * d + c * b, b * d)._monic()
        g = _gcd(b, d)
        if g.is_constant():
            return RationalFunction._make(a * d + c * b, b * d)._monic()
        b1, d1 = b.exact_div(g), d.exact_div(g)
        n = a * d1 + c * b1
        if not n:
            return _ZERO
        g2 = _gcd(n, g)
        if not g2.is_constant():
            n = n.exact_div(g2)
            g = g.exact_div(g2)
        return RationalFunction._make(n, b1 * d1 * g)._monic()

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction._make(-self.num, self.den)

    def __pos__(self) -> RationalFunction:
        return self

    def __sub__(self, other):
        o = _ratfn(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _ratfn(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _ratfn(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a or not c:
            return _ZERO
        g1 = _ONE if (a.is_constant() or d.is_constant()) else _gcd(a, d)
        g2 = _ONE if (c.is_constant() or b.is_constant()) else _gcd(c, b)
        if not g1.is_constant():
            a, d = a.exact_div(g1), d.exact_div(g1)
        if not g2.is_constant():
            c, b = c.exact_div(g2), b.exact_div(g2)
        return RationalFunction._make(a * c, b * d)._monic()

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction._make(self.den, self.num)._monic()

    def __truediv__(self, other):
        o = _ratfn(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _ratfn(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> RationalFunction:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        # gcd(num, den) = 1 already, so powers stay reduced
        return RationalFunction._make(self.num**k, self.den**k)

    def _monic(self) -> RationalFunction:
        if not self.num:
            return _ZERO
        _, lc = self.den.leading()
        if lc == 1:
            return self
        return RationalFunction._make(self.num / lc, self.den / lc)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _ratfn(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return self.num == o.num
        return self.num * o.den == o.num * self.den

    def __hash__(self) -> int:
        # only exact for reduced representatives, which is all we construct
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- transformations ----------------------------------------------------

    def substitute(self, assignment: Mapping[int, object]) -> RationalFunction:
        den = self.den.substitute(assignment)
        if not den:
            raise DenominatorVanishes("denominator vanishes under the substitution")
        return RationalFunction(self.num.substitute(assignment), den)

    def rename(self, mapping: Mapping[int, int]) -> RationalFunction:
        return RationalFunction._make(self.num.rename(mapping), self.den.rename(mapping))

    def shift(self, offset: int) -> RationalFunction:
        return RationalFunction._make(self.num.shift(offset), self.den.shift(offset))

    def to_str(self, names=None) -> str:
        if self.den == 1:
            return self.num.to_str(names)
        return f"({self.num.to_str(names)})/({self.den.to_str(names)})"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_str()!r})"


def _poly(x) -> Polynomial | None:
    if isinstance(x, Polynomial):
        return x
    if is_scalar(x):
        return Polynomial.constant(x)
    return None


def _ratfn(x) -> RationalFunction | None:
    if isinstance(x, RationalFunction):
        return x
    p = _poly(x)
    if p is None:
        return None
    return RationalFunction._make(p, _ONE)


def _reduce(n: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    if not n:
        return n, _ONE
    if not d.is_constant() and not n.is_constant():
        g = _gcd(n, d)
        if not g.is_constant():
            try:
                n, d = n.exact_div(g), d.exact_div(g)
            except InexactDivision:  # pragma: no cover - gcd always divides
                pass
    _, lc = d.leading()
    if lc != 1:
        lc = canon(lc)
        n, d = n / lc, d / lc
    return n, d


_ZERO = RationalFunction._make(Polynomial.constant(0), _ONE)
