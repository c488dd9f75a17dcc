"""Graph family generators."""

from .families import (
    clique_with_pendant,
    cliques_mixed,
    crown,
    disjoint_cliques,
    edgeless,
    pendant_triangles,
)
from .registry import build_family, expected_size, make_spec, parse_family, parse_params

__all__ = [
    "edgeless",
    "disjoint_cliques",
    "cliques_mixed",
    "crown",
    "pendant_triangles",
    "clique_with_pendant",
    "build_family",
    "expected_size",
    "make_spec",
    "parse_family",
    "parse_params",
]
