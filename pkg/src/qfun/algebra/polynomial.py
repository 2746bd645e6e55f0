"""Sparse multivariate polynomials over Q(i).

Variables live in a single indexed alphabet ``0, 1, 2, ...``.  A monomial is
stored as its exponent tuple with trailing zeros trimmed, so ``x0*x2**3`` is
``(1, 0, 3)`` and the constant monomial is ``()``.  Coefficients are kept in
the cheapest exact type (int, Fraction, or GaussianRational with nonzero
imaginary part); the public accessors always hand out GaussianRational.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from operator import add
from typing import Callable, Iterable, Mapping, Sequence

from ..errors import InexactDivision
from .gaussian import GaussianRational, as_gaussian, canon, is_scalar

__all__ = ["Monomial", "Polynomial", "poly_gcd", "grevlex_key"]

Exp = tuple  # trimmed exponent tuple


def _trim(e: Sequence[int]) -> Exp:
    n = len(e)
    while n and not e[n - 1]:
        n -= 1
    return tuple(e[:n])


def _mono_mul(a: Exp, b: Exp) -> Exp:
    la, lb = len(a), len(b)
    if la == lb:
        return tuple(map(add, a, b))
    if la < lb:
        return tuple(map(add, a, b[:la])) + b[la:]
    return tuple(map(add, a[:lb], b)) + a[lb:]


def _mono_div(a: Exp, b: Exp) -> Exp | None:
    """Return a/b if b divides a, else None."""
    if len(b) > len(a):
        return None
    out = list(a)
    for i, e in enumerate(b):
        d = out[i] - e
        if d < 0:
            return None
        out[i] = d
    return _trim(out)


def grevlex_key(exp: Exp, nvars: int) -> tuple:
    """Sort key realising graded reverse-lex order (larger key = larger monomial)."""
    padded = exp + (0,) * (nvars - len(exp))
    return (sum(exp), tuple(-e for e in reversed(padded)))


def _div_coeff(c, d):
    if type(c) is int and type(d) is int:
        q, r = divmod(c, d)
        if not r:
            return q
        return Fraction(c, d)
    return canon(c / d)


class Monomial:
    """A power product ``prod x_i**e_i``; exponents are positive, absent means 0."""

    __slots__ = ("_exp",)

    def __init__(self, exponents: Mapping[int, int] | Sequence[int] = ()) -> None:
        if isinstance(exponents, Mapping):
            n = max((i + 1 for i, e in exponents.items() if e), default=0)
            e = [0] * n
            for i, k in exponents.items():
                if k < 0 or i < 0:
                    raise ValueError("negative exponent or index")
                if k:
                    e[i] = k
            exp = _trim(e)
        else:
            if any(k < 0 for k in exponents):
                raise ValueError("negative exponent")
            exp = _trim(tuple(int(k) for k in exponents))
        object.__setattr__(self, "_exp", exp)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def _raw(cls, exp: Exp) -> Monomial:
        m = object.__new__(cls)
        object.__setattr__(m, "_exp", exp)
        return m

    @property
    def exponents(self) -> dict[int, int]:
        return {i: e for i, e in enumerate(self._exp) if e}

    @property
    def total_degree(self) -> int:
        return sum(self._exp)

    def as_tuple(self, nvars: int | None = None) -> tuple[int, ...]:
        if nvars is None:
            return self._exp
        if nvars < len(self._exp):
            raise ValueError("monomial uses more variables than requested")
        return self._exp + (0,) * (nvars - len(self._exp))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial._raw(_mono_mul(self._exp, other._exp))

    def __eq__(self, other) -> bool:
        if isinstance(other, Monomial):
            return self._exp == other._exp
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._exp)

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"


def _default_name(i: int) -> str:
    return f"x{i + 1}"


def _fmt_coeff(c) -> tuple[str, bool]:
    """Return (text, negative) for printing a coefficient in front of a monomial."""
    if isinstance(c, GaussianRational):
        return str(c), False
    if c < 0:
        return str(-c), True
    return str(c), False


class Polynomial:
    """Immutable sparse polynomial.

    Construct from a mapping ``{exponents: coefficient}`` where the keys are
    :class:`Monomial`, exponent sequences, or ``{var: exp}`` dicts, or use the
    :meth:`var` and :meth:`constant` helpers::

        >>> x1, x2 = Polynomial.var(0), Polynomial.var(1)
        >>> str((x1 + x2) ** 2)
        'x1^2 + 2*x1*x2 + x2^2'
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None) -> None:
        t: dict = {}
        if terms is None:
            pass
        elif is_scalar(terms):
            c = canon(terms)
            if c:
                t[()] = c
        elif isinstance(terms, Polynomial):
            t = dict(terms._t)
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                if isinstance(key, Monomial):
                    exp = key._exp
                else:
                    exp = Monomial(key)._exp
                c = canon(c)
                v = t.get(exp, 0) + c
                if v:
                    t[exp] = canon(v)
                else:
                    t.pop(exp, None)
        object.__setattr__(self, "_t", t)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _make(cls, t: dict) -> Polynomial:
        p = object.__new__(cls)
        object.__setattr__(p, "_t", t)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def var(cls, index: int, power: int = 1) -> Polynomial:
        if index < 0 or power < 0:
            raise ValueError("variable index and power must be nonnegative")
        if power == 0:
            return cls._make({(): 1})
        return cls._make({(0,) * index + (power,): 1})

    @classmethod
    def constant(cls, c) -> Polynomial:
        c = canon(c)
        return cls._make({(): c} if c else {})

    # -- inspection ---------------------------------------------------------

    @property
    def nvars(self) -> int:
        """One more than the largest variable index that occurs (0 for constants)."""
        return max(map(len, self._t), default=0)

    def variables(self) -> set[int]:
        out: set[int] = set()
        for m in self._t:
            out.update(i for i, e in enumerate(m) if e)
        return out

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and () in self._t)

    def constant_term(self) -> GaussianRational:
        return as_gaussian(self._t.get((), 0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max(map(sum, self._t), default=-1)

    def is_real(self) -> bool:
        return not any(isinstance(c, GaussianRational) for c in self._t.values())

    def coeff(self, monomial) -> GaussianRational:
        exp = monomial._exp if isinstance(monomial, Monomial) else Monomial(monomial)._exp
        return as_gaussian(self._t.get(exp, 0))

    def terms(self) -> list[tuple[Monomial, GaussianRational]]:
        """Terms in descending graded reverse-lex order."""
        n = self.nvars
        keys = sorted(self._t, key=lambda e: grevlex_key(e, n), reverse=True)
        return [(Monomial._raw(e), as_gaussian(self._t[e])) for e in keys]

    def raw_terms(self) -> dict:
        """Copy of the internal ``{exponent tuple: coefficient}`` map."""
        return dict(self._t)

    def leading(self) -> tuple[Exp, object]:
        """Leading (exponent tuple, coefficient) under graded reverse-lex."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        n = self.nvars
        e = max(self._t, key=lambda m: grevlex_key(m, n))
        return e, self._t[e]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        if len(o._t) > len(self._t):
            big, small = o._t, self._t
        else:
            big, small = self._t, o._t
        t = dict(big)
        for m, c in small.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v = v + c
                if v:
                    t[m] = canon(v) if isinstance(v, GaussianRational) else v
                else:
                    del t[m]
        return Polynomial._make(t)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._make({m: -c for m, c in self._t.items()})

    def __pos__(self) -> Polynomial:
        return self

    def __sub__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if is_scalar(other):
            c = canon(other)
            if not c:
                return Polynomial._make({})
            if c == 1:
                return self
            gauss = isinstance(c, GaussianRational)
            t = {}
            for m, v in self._t.items():
                w = v * c
                if gauss or isinstance(w, GaussianRational):
                    w = canon(w)
                if w:
                    t[m] = w
            return Polynomial._make(t)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return Polynomial._make({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((mb, cb),) = b.items()
            if mb == () and cb == 1:
                return Polynomial._make(dict(a))
        t: dict = {}
        get = t.get
        gauss = False
        for mb, cb in b.items():
            lb = len(mb)
            for ma, ca in a.items():
                la = len(ma)
                if la == lb:
                    m = tuple(map(add, ma, mb))
                elif la < lb:
                    m = tuple(map(add, ma, mb[:la])) + mb[la:]
                else:
                    m = tuple(map(add, ma[:lb], mb)) + ma[lb:]
                t[m] = get(m, 0) + ca * cb
        out = {}
        for m, c in t.items():
            if isinstance(c, GaussianRational):
                c = canon(c)
            if c:
                out[m] = c
        return Polynomial._make(out)

    def __rmul__(self, other):
        if is_scalar(other):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial._make({(): 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if is_scalar(other):
            c = canon(other)
            if not c:
                raise ZeroDivisionError("polynomial division by zero")
            return Polynomial._make({m: _div_coeff(v, c) for m, v in self._t.items()})
        if isinstance(other, Polynomial):
            from .ratfunc import RationalFunction

            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_scalar(other):
            from .ratfunc import RationalFunction

            return RationalFunction(Polynomial.constant(other), self)
        return NotImplemented

    def exact_div(self, other) -> Polynomial:
        """Quotient ``self / other`` when it is a polynomial.

        Raises :class:`InexactDivision` if ``other`` does not divide ``self``.
        """
        d = _as_poly(other)
        if d is None:
            raise TypeError(f"cannot divide a polynomial by {type(other).__name__}")
        if not d._t:
            raise ZeroDivisionError("polynomial division by zero")
        if d.is_constant():
            return self / d._t[()]
        if not self._t:
            return self
        if d == self:
            return Polynomial._make({(): 1})
        n = max(self.nvars, d.nvars)
        pad = (0,) * n

        def key(m):
            return tuple(-e for e in m + pad[len(m):])

        lm = max(d._t)  # lex order coincides with tuple order on trimmed exponents
        lc = d._t[lm]
        rest = [(m, c) for m, c in d._t.items() if m != lm]
        rem = dict(self._t)
        heap = [(key(m), m) for m in rem]
        heapq.heapify(heap)
        q: dict = {}
        while rem:
            _, m = heapq.heappop(heap)
            c = rem.pop(m, None)
            if c is None:
                continue
            qm = _mono_div(m, lm)
            if qm is None:
                raise InexactDivision("divisor does not divide dividend")
            qc = _div_coeff(c, lc)
            q[qm] = qc
            for dm, dc in rest:
                tm = _mono_mul(qm, dm)
                old = rem.get(tm)
                v = (0 if old is None else old) - qc * dc
                if isinstance(v, GaussianRational):
                    v = canon(v)
                if v:
                    if old is None:
                        heapq.heappush(heap, (key(tm), tm))
                    rem[tm] = v
                elif old is not None:
                    del rem[tm]
        return Polynomial._make(q)

    def divides(self, other: Polynomial) -> bool:
        try:
            _as_poly(other).exact_div(self)
        except InexactDivision:
            return False
        return True

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._t.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self._t)

    # -- transformations ----------------------------------------------------

    def map_coeffs(self, f: Callable) -> Polynomial:
        t = {}
        for m, c in self._t.items():
            v = canon(f(as_gaussian(c)))
            if v:
                t[m] = v
        return Polynomial._make(t)

    def real_part(self) -> Polynomial:
        return self.map_coeffs(lambda c: c.re)

    def imag_part(self) -> Polynomial:
        return self.map_coeffs(lambda c: c.im)

    def conjugate(self) -> Polynomial:
        return self.map_coeffs(lambda c: c.conjugate())

    def rename(self, mapping: Mapping[int, int]) -> Polynomial:
        """Simultaneously send variable ``i`` to variable ``mapping[i]``."""
        t: dict = {}
        for m, c in self._t.items():
            e: dict[int, int] = {}
            for i, k in enumerate(m):
                if k:
                    j = mapping.get(i, i)
                    e[j] = e.get(j, 0) + k
            exp = Monomial(e)._exp
            v = t.get(exp, 0) + c
            if v:
                t[exp] = canon(v)
            else:
                t.pop(exp, None)
        return Polynomial._make(t)

    def shift(self, offset: int) -> Polynomial:
        """Rename every variable ``i`` to ``i + offset`` (``offset >= 0``)."""
        if offset < 0:
            raise ValueError("offset must be nonnegative")
        if offset == 0:
            return self
        pre = (0,) * offset
        return Polynomial._make({(pre + m if m else m): c for m, c in self._t.items()})

    def substitute(self, assignment: Mapping[int, object]) -> Polynomial:
        """Image under the ring map ``x_i -> assignment[i]`` (others fixed).

        Images may be polynomials or scalars; substitution is simultaneous.
        """
        imgs = {i: _as_poly(v) for i, v in assignment.items()}
        if any(v is None for v in imgs.values()):
            raise TypeError("substitution images must be polynomials or scalars")
        if not imgs or not self._t:
            return self
        idx = sorted(imgs)
        # group terms by the exponents of the substituted variables
        groups: dict[tuple, dict] = {}
        for m, c in self._t.items():
            sig = tuple(m[i] if i < len(m) else 0 for i in idx)
            kept = list(m)
            for i in idx:
                if i < len(kept):
                    kept[i] = 0
            g = groups.setdefault(sig, {})
            g[_trim(kept)] = c
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, k: int) -> Polynomial:
            p = powers.get((i, k))
            if p is None:
                p = imgs[i] ** k
                powers[(i, k)] = p
            return p

        result = Polynomial._make({})
        for sig, g in groups.items():
            factor = Polynomial._make({(): 1})
            for i, k in zip(idx, sig):
                if k:
                    factor = factor * power(i, k)
                    if not factor:
                        break
            if factor:
                result = result + Polynomial._make(g) * factor
        return result

    def evaluate(self, values: Mapping[int, object]):
        """Substitute scalars for variables; returns a GaussianRational if nothing is left."""
        p = self.substitute(values)
        if p.is_constant():
            return p.constant_term()
        return p

    def graded_degree_of(self, exp: Exp, graded: frozenset[int] | None) -> int:
        if graded is None:
            return sum(exp)
        return sum(exp[i] for i in graded if i < len(exp))

    def components(self, graded: Iterable[int] | None = None) -> dict[int, Polynomial]:
        """Split into homogeneous pieces by degree in the ``graded`` variables (all if None)."""
        gv = None if graded is None else frozenset(graded)
        out: dict[int, dict] = {}
        for m, c in self._t.items():
            out.setdefault(self.graded_degree_of(m, gv), {})[m] = c
        return {d: Polynomial._make(t) for d, t in sorted(out.items())}

    def truncate(self, bound: int, graded: Iterable[int] | None = None) -> Polynomial:
        gv = None if graded is None else frozenset(graded)
        return Polynomial._make(
            {m: c for m, c in self._t.items() if self.graded_degree_of(m, gv) <= bound}
        )

    def coefficient_of(self, partial: Mapping[int, int]) -> Polynomial:
        """Coefficient of ``prod x_i**partial[i]`` viewing the other variables as scalars."""
        t: dict = {}
        for m, c in self._t.items():
            ok = True
            for i, k in partial.items():
                if (m[i] if i < len(m) else 0) != k:
                    ok = False
                    break
            if ok:
                kept = list(m)
                for i in partial:
                    if i < len(kept):
                        kept[i] = 0
                t[_trim(kept)] = c
        return Polynomial._make(t)

    # -- text ---------------------------------------------------------------

    def to_str(self, names: Callable[[int], str] | Sequence[str] | None = None) -> str:
        if names is None:
            name = _default_name
        elif callable(names):
            name = names
        else:
            seq = list(names)
            name = seq.__getitem__
        if not self._t:
            return "0"
        parts = []
        for mono, gc in self.terms():
            c = canon(gc)
            mon = "*".join(
                name(i) if e == 1 else f"{name(i)}^{e}" for i, e in sorted(mono.exponents.items())
            )
            text, neg = _fmt_coeff(c)
            if mon:
                if text == "1":
                    body = mon
                else:
                    body = f"{text}*{mon}"
            else:
                body = text
            parts.append(("-" if neg else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_str()!r})"


def _as_poly(x) -> Polynomial | None:
    if isinstance(x, Polynomial):
        return x
    if is_scalar(x):
        return Polynomial.constant(x)
    return None


# -- gcd ---------------------------------------------------------------------


@lru_cache(maxsize=64)
def _sympy_ring(nvars: int, gaussian: bool):
    from sympy.polys.domains import QQ, QQ_I
    from sympy.polys.rings import ring

    names = ",".join(f"v{i}" for i in range(nvars))
    R, *_ = ring(names, QQ_I if gaussian else QQ)
    return R


def _to_sympy(p: Polynomial, R, nvars: int, gaussian: bool):
    from sympy.polys.domains import QQ, QQ_I

    pad = (0,) * nvars
    d = {}
    for m, c in p._t.items():
        if gaussian:
            g = as_gaussian(c)
            v = QQ_I(QQ(g.re.numerator, g.re.denominator), QQ(g.im.numerator, g.im.denominator))
        else:
            f = Fraction(c)
            v = QQ(f.numerator, f.denominator)
        d[m + pad[len(m):]] = v
    return R.from_dict(d)


def _from_sympy(g, gaussian: bool) -> Polynomial:
    t = {}
    for m, c in g.items():
        if gaussian:
            v = GaussianRational(
                Fraction(int(c.x.numerator), int(c.x.denominator)),
                Fraction(int(c.y.numerator), int(c.y.denominator)),
            )
        else:
            v = Fraction(int(c.numerator), int(c.denominator))
        v = canon(v)
        if v:
            t[_trim(m)] = v
    return Polynomial._make(t)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor, normalised to leading coefficient 1.

    Delegates to sympy's sparse multivariate gcd.  ``gcd(0, 0)`` is 0.
    """
    if not a._t:
        return _monic(b)
    if not b._t:
        return _monic(a)
    if a.is_constant() or b.is_constant():
        return Polynomial._make({(): 1})
    if a == b:
        return _monic(a)
    gaussian = not (a.is_real() and b.is_real())
    n = max(a.nvars, b.nvars)
    R = _sympy_ring(n, gaussian)
    g = _to_sympy(a, R, n, gaussian).gcd(_to_sympy(b, R, n, gaussian))
    return _monic(_from_sympy(g, gaussian))


def _monic(p: Polynomial) -> Polynomial:
    if not p._t:
        return p
    _, lc = p.leading()
    return p if lc == 1 else p / lc
