"""Skew-symmetric matrices, Pfaffians, minors and index-set combinatorics."""

from .core import (
    METHODS,
    binom2,
    congruence,
    det,
    matching_sign,
    minor_det,
    perfect_matchings,
    pfaffian,
    subpfaffian,
)
from .matrices import IndexSet, PerfectMatching, RectMatrix, SkewMatrix, subsets

__all__ = [
    "METHODS",
    "IndexSet",
    "PerfectMatching",
    "RectMatrix",
    "SkewMatrix",
    "binom2",
    "congruence",
    "det",
    "matching_sign",
    "minor_det",
    "perfect_matchings",
    "pfaffian",
    "subpfaffian",
    "subsets",
]
