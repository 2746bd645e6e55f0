"""Exact coefficient, polynomial, rational-function and power-series arithmetic."""

from __future__ import annotations

from .gaussian import GaussianRational, I
from .polynomial import Monomial, Polynomial, grevlex_key, poly_gcd
from .ratfunc import RationalFunction
from .series import TruncatedSeries, series_expand

__all__ = [
    "GaussianRational",
    "I",
    "Monomial",
    "Polynomial",
    "RationalFunction",
    "TruncatedSeries",
    "grevlex_key",
    "poly_gcd",
    "poly_arith",
    "ratfn_arith",
    "series_expand",
    "substitute",
]

_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
}


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """``a op b`` for ``op`` in add/sub/mul."""
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown polynomial operation {op!r}") from None


def ratfn_arith(a, b, op: str) -> RationalFunction:
    """``a op b`` in the field of rational functions; ``op`` in add/sub/mul/div."""
    a = a if isinstance(a, RationalFunction) else RationalFunction(a)
    if op == "div":
        return a / b
    try:
        return _OPS[op](a, b)
    except KeyError:
        raise ValueError(f"unknown rational-function operation {op!r}") from None


def substitute(p, assignment):
    """Apply the ring homomorphism ``x_i -> assignment[i]`` to a polynomial or rational function."""
    return p.substitute(assignment)
