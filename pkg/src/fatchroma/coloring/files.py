"""Coloring files: one ``vertex label`` pair per line."""

from ..errors import GraphFormatError, PartitionError
from ..models import FatWitness, Partition


def parse_coloring(text: str, n: int) -> Partition:
    """Read a coloring file into color classes.

    Labels are arbitrary strings (the rest of the line after the vertex). Blank
    lines and lines starting with ``#`` are ignored.

    Args:
        text: File contents
        n: Vertex count of the graph being colored

    Returns:
        Partition: Canonical color classes

    Raises:
        GraphFormatError: Malformed line, vertex out of range, or a vertex listed twice
        PartitionError: If some vertex has no color
    """
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(maxsplit=1)
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'vertex label', got {line!r}", line=lineno)
        try:
            v = int(parts[0])
        except ValueError:
            raise GraphFormatError(f"vertex must be an integer, got {parts[0]!r}", line=lineno) from None
        if not 0 <= v < n:
            raise GraphFormatError(f"vertex {v} outside [0, {n})", line=lineno)
        if v in labels:
            raise GraphFormatError(f"vertex {v} colored twice", line=lineno)
        labels[v] = parts[1].strip()

    missing = [v for v in range(n) if v not in labels]
    if missing:
        raise PartitionError(f"coloring leaves vertices {missing} uncolored")
    return Partition.from_labels([labels[v] for v in range(n)]).canonical()


def format_coloring(witness: FatWitness) -> str:
    """Inverse of parse_coloring: vertex and block index per line."""
    color = {}
    for i, block in enumerate(witness.blocks):
        for v in block:
            color[v] = i
    return "".join(f"{v} {color[v]}\n" for v in sorted(color))
