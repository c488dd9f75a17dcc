"""Graph representation, invariants and file formats."""

from .core import connected_components, degree_stats, is_connected
from .formats import (
    DimacsCodec,
    Graph6Codec,
    GraphCodec,
    emit_dimacs,
    emit_graph6,
    get_codec,
    parse_dimacs,
    parse_graph6,
)

__all__ = [
    "degree_stats",
    "connected_components",
    "is_connected",
    "GraphCodec",
    "Graph6Codec",
    "DimacsCodec",
    "get_codec",
    "parse_graph6",
    "emit_graph6",
    "parse_dimacs",
    "emit_dimacs",
]
