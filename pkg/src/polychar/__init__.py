"""Exact characters, weight polytopes and polytope expansions of simple Lie algebras."""

from .charmult import MultMap, dim, weight_system
from .expansion import a_inverse, a_matrix, brion_multiset, partition_f
from .polytope import brion_numeric, count_closed_form, points
from .rootsys import AlgebraId, CartanData, build, parse_algebra, parse_weight

__all__ = [
    "AlgebraId",
    "CartanData",
    "MultMap",
    "a_inverse",
    "a_matrix",
    "brion_multiset",
    "brion_numeric",
    "build",
    "count_closed_form",
    "dim",
    "parse_algebra",
    "parse_weight",
    "partition_f",
    "points",
    "weight_system",
]
