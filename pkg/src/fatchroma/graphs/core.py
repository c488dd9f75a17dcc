"""Standard graph invariants: degrees and connected components."""

from collections import deque
from functools import reduce
from math import gcd

from ..models import ComponentDecomposition, DegreeStats, Graph


def degree_stats(g: Graph) -> DegreeStats:
    """Compute the degree profile of a graph.

    Args:
        g: Graph to inspect

    Returns:
        DegreeStats: Degrees, delta(G), the minimum positive degree and the gcd of
        positive degrees (the last two are None iff g has no edges)
    """
    degrees = [len(row) for row in g.adj]
    positive = [d for d in degrees if d > 0]
    return DegreeStats(
        degrees=degrees,
        min_degree=min(degrees, default=0),
        min_positive_degree=min(positive) if positive else None,
        degree_gcd=reduce(gcd, positive) if positive else None,
    )


def connected_components(g: Graph) -> ComponentDecomposition:
    """Split V(G) into connected components.

    Components are found by breadth-first search started from the smallest
    unvisited vertex, so they come out ordered by smallest contained vertex.

    Args:
        g: Graph to decompose

    Returns:
        ComponentDecomposition: Sorted vertex lists, one per component
    """
    seen = [False] * g.n
    components: list[list[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        members = []
        while queue:
            v = queue.popleft()
            members.append(v)
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
        components.append(sorted(members))
    return ComponentDecomposition(components=components)


def is_connected(g: Graph) -> bool:
    return connected_components(g).count <= 1
