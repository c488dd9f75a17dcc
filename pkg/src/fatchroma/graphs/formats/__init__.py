"""Graph file formats."""

from .base import GraphCodec
from .dimacs import DimacsCodec, emit_dimacs, parse_dimacs
from .graph6 import Graph6Codec, emit_graph6, parse_graph6

CODECS: dict[str, type[GraphCodec]] = {
    Graph6Codec.name: Graph6Codec,
    DimacsCodec.name: DimacsCodec,
}


def get_codec(name: str) -> GraphCodec:
    """Instantiate the codec registered under ``name``.

    Raises:
        ValueError: If no such format exists
    """
    try:
        return CODECS[name]()
    except KeyError:
        raise ValueError(f"Unknown graph format {name!r}; expected one of {', '.join(CODECS)}") from None


__all__ = [
    "GraphCodec",
    "Graph6Codec",
    "DimacsCodec",
    "CODECS",
    "get_codec",
    "parse_graph6",
    "emit_graph6",
    "parse_dimacs",
    "emit_dimacs",
]
