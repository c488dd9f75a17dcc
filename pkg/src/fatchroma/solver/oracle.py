"""Brute-force oracles used to cross-check the exact solvers on small graphs."""

import logging
from typing import Iterator

from ..coloring.fat import infer_fat_parameters
from ..errors import SizeCapExceeded
from ..models import Graph, Partition

logger = logging.getLogger(__name__)

CHI_FAT_ORACLE_CAP = 12
CHROMATIC_ORACLE_CAP = 10


def restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """Yield every restricted growth string of length n.

    Entry i is at most 1 + max of entries before it and entry 0 is 0, so the
    strings are in bijection with the set partitions of {0, ..., n-1}.
    The same list object is reused between yields; copy it to keep it.
    """
    if n == 0:
        yield []
        return
    labels = [0] * n

    def extend(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield labels
            return
        for label in range(top + 2):
            labels[i] = label
            yield from extend(i + 1, max(top, label))

    yield from extend(1, 0)


def brute_force_chi_fat(g: Graph, cap: int = CHI_FAT_ORACLE_CAP) -> int:
    """Largest k such that some partition of V(g) into k blocks is FAT.

    Enumerates all set partitions and infers (alpha, beta) for each one.

    Raises:
        SizeCapExceeded: If |V(g)| exceeds cap
    """
    if g.n > cap:
        raise SizeCapExceeded("brute_force_chi_fat", g.n, cap)
    if g.n == 0:
        return 0
    best = 1
    checked = 0
    for labels in restricted_growth_strings(g.n):
        k = max(labels) + 1
        if k <= best:
            continue
        checked += 1
        if infer_fat_parameters(g, Partition.from_labels(labels)).accepted:
            best = k
    logger.debug(f"brute_force_chi_fat: n={g.n}, {checked} partitions inferred, answer {best}")
    return best


def brute_force_chromatic(g: Graph, cap: int = CHROMATIC_ORACLE_CAP) -> int:
    """Smallest k admitting a proper coloring, by exhaustive search for k = 1, 2, ...

    Raises:
        SizeCapExceeded: If |V(g)| exceeds cap
    """
    if g.n > cap:
        raise SizeCapExceeded("brute_force_chromatic", g.n, cap)
    if g.n == 0:
        return 0
    adj = [sorted(row) for row in g.adj]
    colors = [-1] * g.n

    def colorable(v: int, k: int) -> bool:
        if v == g.n:
            return True
        for c in range(k):
            if all(colors[u] != c for u in adj[v] if u < v):
                colors[v] = c
                if colorable(v + 1, k):
                    return True
        colors[v] = -1
        return False

    for k in range(1, g.n + 1):
        if colorable(0, k):
            return k
    return g.n
