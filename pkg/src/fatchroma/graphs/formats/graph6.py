"""graph6 codec (bit-exact, including the extended size headers)."""

import logging

from ...errors import GraphFormatError
from ...models import Graph
from .base import GraphCodec

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
_BIAS = 63
_MAX_BYTE = 126
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047
_LONG_LIMIT = 68719476735


def _six_bit_groups(value: int, groups: int) -> list[int]:
    return [(value >> (6 * shift)) & 0x3F for shift in range(groups - 1, -1, -1)]


def _encode_size(n: int) -> list[int]:
    if n <= _SHORT_LIMIT:
        return [n]
    if n <= _MEDIUM_LIMIT:
        return [_MAX_BYTE - _BIAS] + _six_bit_groups(n, 3)
    if n <= _LONG_LIMIT:
        return [_MAX_BYTE - _BIAS, _MAX_BYTE - _BIAS] + _six_bit_groups(n, 6)
    raise ValueError(f"graph6 cannot encode n={n}")


def _decode_size(raw: bytes, base: int) -> tuple[int, int]:
    """Return (n, position of the first adjacency byte)."""
    if raw[0] != _MAX_BYTE:
        return raw[0] - _BIAS, 1
    if len(raw) >= 2 and raw[1] == _MAX_BYTE:
        width, start, lower = 6, 2, _MEDIUM_LIMIT + 1
    else:
        width, start, lower = 3, 1, _SHORT_LIMIT + 1
    if len(raw) < start + width:
        raise GraphFormatError("truncated size header", offset=base + len(raw))
    n = 0
    for byte in raw[start:start + width]:
        n = (n << 6) | (byte - _BIAS)
    if n < lower:
        raise GraphFormatError(f"non-canonical size header for n={n}", offset=base)
    return n, start + width


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line.

    An optional ``>>graph6<<`` header and trailing whitespace are accepted.

    Args:
        text: graph6 string

    Returns:
        Graph: Decoded graph

    Raises:
        GraphFormatError: Malformed header, out-of-range byte, truncated data,
            nonzero padding or trailing garbage, with the byte offset
    """
    line = text.rstrip()
    base = len(HEADER) if line.startswith(HEADER) else 0
    data = line[base:]

    for i, char in enumerate(data):
        if not _BIAS <= ord(char) <= _MAX_BYTE:
            raise GraphFormatError(f"character {char!r} outside graph6 range", offset=base + i)
    if not data:
        raise GraphFormatError("empty graph6 string", offset=base)
    raw = data.encode("ascii")

    n, pos = _decode_size(raw, base)
    total_bits = n * (n - 1) // 2
    needed = (total_bits + 5) // 6
    body = raw[pos:pos + needed]
    if len(body) < needed:
        raise GraphFormatError(
            f"truncated adjacency data: n={n} needs {needed} bytes, found {len(body)}",
            offset=base + len(raw),
        )
    if len(raw) > pos + needed:
        raise GraphFormatError("trailing data after adjacency bits", offset=base + pos + needed)

    padding = needed * 6 - total_bits
    if padding and (body[-1] - _BIAS) & ((1 << padding) - 1):
        raise GraphFormatError("nonzero padding bits", offset=base + pos + needed - 1)

    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if ((body[bit // 6] - _BIAS) >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    values = _encode_size(g.n)
    bits = [1 if i in g.adj[j] else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for start in range(0, len(bits), 6):
        chunk = 0
        for b in bits[start:start + 6]:
            chunk = (chunk << 1) | b
        values.append(chunk)
    return "".join(chr(value + _BIAS) for value in values)


class Graph6Codec(GraphCodec):
    """graph6: one graph per line."""

    name = "graph6"

    def parse(self, text: str) -> Graph:
        return parse_graph6(text)

    def emit(self, g: Graph) -> str:
        return emit_graph6(g) + "\n"

    def parse_many(self, text: str) -> list[Graph]:
        graphs = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                graphs.append(parse_graph6(line))
            except GraphFormatError as e:
                raise GraphFormatError(f"line {lineno}: {e}") from e
        logger.debug(f"Parsed {len(graphs)} graph6 lines")
        return graphs
