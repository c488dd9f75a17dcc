"""Deterministic constructors for the graph families used in the FAT constructions.

Vertex labelings are fixed so that witnesses are reproducible:

- disjoint_cliques: clique i occupies [i*size, (i+1)*size)
- cliques_mixed: L1-1 cliques of order L1 in that layout, then the L2-clique
- crown: x_i = i-1 and y_i = n+i-1
- pendant_triangles: w_i = i for i < n, then (u, v) pairs at n + 2*(i*h + j) and
  the next label, where h = (n-1)/2
- clique_with_pendant: K_n on 0..n-1, pendant vertex n attached to 0
"""

from itertools import combinations

from ..models import Graph


def _clique_edges(vertices: range) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def edgeless(n: int) -> Graph:
    """n isolated vertices."""
    _require(n >= 1, f"edgeless graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [])


def disjoint_cliques(count: int, size: int) -> Graph:
    """Union of ``count`` vertex-disjoint cliques of order ``size``."""
    _require(count >= 1 and size >= 1, f"disjoint_cliques needs count, size >= 1, got ({count}, {size})")
    edges = []
    for i in range(count):
        edges.extend(_clique_edges(range(i * size, (i + 1) * size)))
    return Graph.from_edges(count * size, edges)


def cliques_mixed(l1: int, l2: int) -> Graph:
    """L1-1 cliques of order L1 followed by one clique of order L2.

    Raises:
        ValueError: Unless 1 < l1 < l2. With l1 = 1 the construction would be a
            lone clique, but every disconnected graph has FAT chromatic number at
            least its component count, so the target value 1 is unreachable that way.
    """
    _require(
        l1 > 1,
        f"cliques_mixed needs L1 > 1, got {l1}: a FAT chromatic number of 1 cannot come "
        "from a disconnected graph, since the component coloring already gives one class per component",
    )
    _require(l2 > l1, f"cliques_mixed needs L2 > L1, got L1={l1}, L2={l2}")
    edges = []
    for i in range(l1 - 1):
        edges.extend(_clique_edges(range(i * l1, (i + 1) * l1)))
    offset = (l1 - 1) * l1
    edges.extend(_clique_edges(range(offset, offset + l2)))
    return Graph.from_edges(offset + l2, edges)


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching: x_i y_j for i != j."""
    _require(n >= 2, f"crown needs n >= 2, got {n}")
    edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
    return Graph.from_edges(2 * n, edges)


def pendant_triangles(n: int) -> Graph:
    """K_n on w_1..w_n with (n-1)/2 pendant triangles w_i u v attached to every w_i."""
    _require(n >= 3 and n % 2 == 1, f"pendant_triangles needs odd n >= 3, got {n}")
    half = (n - 1) // 2
    edges = _clique_edges(range(n))
    for i in range(n):
        for j in range(half):
            u = n + 2 * (i * half + j)
            v = u + 1
            edges.extend([(i, u), (i, v), (u, v)])
    return Graph.from_edges(n * n, edges)


def clique_with_pendant(n: int) -> Graph:
    """K_n plus one vertex adjacent only to vertex 0."""
    _require(n >= 3, f"clique_with_pendant needs n >= 3, got {n}")
    return Graph.from_edges(n + 1, _clique_edges(range(n)) + [(0, n)])
