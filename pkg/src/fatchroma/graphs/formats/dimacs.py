"""DIMACS col (``p edge``) codec."""

import logging

from ...errors import GraphFormatError
from ...models import Graph
from .base import GraphCodec

logger = logging.getLogger(__name__)

COMMENT = "c generated by fatchroma"


def _to_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", line=lineno) from None


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS col graph, shifting 1-based endpoints down to 0-based.

    Duplicate edge lines collapse to one edge.

    Args:
        text: File contents

    Returns:
        Graph: Decoded graph

    Raises:
        GraphFormatError: Missing or repeated problem line, malformed line,
            endpoint out of range, or a self-loop
    """
    n = None
    declared_m = 0
    edges: set[tuple[int, int]] = set()
    edge_lines = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag = fields[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("second problem line", line=lineno)
            if len(fields) != 4 or fields[1] not in ("edge", "col"):
                raise GraphFormatError(f"malformed problem line {raw.strip()!r}", line=lineno)
            n = _to_int(fields[2], lineno)
            declared_m = _to_int(fields[3], lineno)
            if n < 0 or declared_m < 0:
                raise GraphFormatError("negative size in problem line", line=lineno)
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", line=lineno)
            if len(fields) != 3:
                raise GraphFormatError(f"malformed edge line {raw.strip()!r}", line=lineno)
            u, v = _to_int(fields[1], lineno), _to_int(fields[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint out of range 1..{n} in edge {u} {v}", line=lineno)
            if u == v:
                raise GraphFormatError(f"self-loop e {u} {u}", line=lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in edges:
                logger.warning(f"Duplicate edge {u} {v} at line {lineno} collapsed")
            edges.add(key)
            edge_lines += 1
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", line=lineno)

    if n is None:
        raise GraphFormatError("missing problem line 'p edge n m'")
    if edge_lines != declared_m:
        logger.warning(f"Problem line declares {declared_m} edges, found {edge_lines} edge lines")
    return Graph.from_edges(n, sorted(edges))


def emit_dimacs(g: Graph) -> str:
    """Encode a graph in DIMACS col format with 1-based endpoints."""
    lines = [COMMENT, f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


class DimacsCodec(GraphCodec):
    """DIMACS col: one graph per file."""

    name = "dimacs"

    def parse(self, text: str) -> Graph:
        return parse_dimacs(text)

    def emit(self, g: Graph) -> str:
        return emit_dimacs(g)
