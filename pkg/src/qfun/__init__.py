"""Exact Pfaffians over polynomial rings and the Schur Q-functions built from them."""

from .algebra import GaussianRational, I, Polynomial, RationalFunction, TruncatedSeries, series_expand
from .identities import IdentityReport
from .pfaffian import IndexSet, RectMatrix, SkewMatrix, pfaffian
from .schur import StrictPartition, nimmo_P, nimmo_Q, strict_partitions

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "I",
    "IdentityReport",
    "IndexSet",
    "Polynomial",
    "RationalFunction",
    "RectMatrix",
    "SkewMatrix",
    "StrictPartition",
    "TruncatedSeries",
    "nimmo_P",
    "nimmo_Q",
    "pfaffian",
    "series_expand",
    "strict_partitions",
]
