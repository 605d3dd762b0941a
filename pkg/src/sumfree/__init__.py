"""Exact enumeration and verification tools for sum-free subsets of [1..n]."""

__version__ = "0.1.0"

from .errors import ResourceLimitError  # noqa: E402
from .groundset import (  # noqa: E402
    GroundInterval,
    IntSet,
    SchurTriple,
    is_maximal_sum_free,
    is_sum_free,
    schur_triple_count,
    schur_triples,
)

__all__ = [
    "GroundInterval",
    "IntSet",
    "ResourceLimitError",
    "SchurTriple",
    "is_maximal_sum_free",
    "is_sum_free",
    "schur_triple_count",
    "schur_triples",
]
