"""Exact chromatic number by DSATUR branch and bound."""

import logging
import time
from typing import Optional

import psutil

from ..coloring.fat import is_proper_coloring
from ..errors import SolveTimeout
from ..models import Bounds, Graph, ProperColoring, SearchStats, SolveReport
from .budget import Budget

logger = logging.getLogger(__name__)


def greedy_dsatur(adj: list[list[int]]) -> list[int]:
    """Greedy DSATUR coloring: pick the vertex with most distinct neighbor colors, ties by degree."""
    n = len(adj)
    colors = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    uncolored = set(range(n))
    while uncolored:
        v = max(uncolored, key=lambda u: (len(neighbor_colors[u]), len(adj[u]), -u))
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        uncolored.remove(v)
        for u in adj[v]:
            if u in uncolored:
                neighbor_colors[u].add(c)
    return colors


def greedy_clique(adj: list[list[int]]) -> list[int]:
    """Largest clique found by greedy growth from every start vertex."""
    best: list[int] = []
    sets = [set(row) for row in adj]
    for start in sorted(range(len(adj)), key=lambda v: (-len(adj[v]), v)):
        if len(adj[start]) + 1 <= len(best):
            continue
        clique = [start]
        candidates = set(sets[start])
        while candidates:
            v = max(candidates, key=lambda u: (len(sets[u] & candidates), -u))
            clique.append(v)
            candidates &= sets[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


class ChromaticSearch:
    """Branch and bound over DSATUR vertex orderings.

    The clique found greedily is pre-colored 0..q-1, which fixes the color
    symmetry, and a new color is only opened while it stays below the incumbent.
    """

    def __init__(self, g: Graph, budget: Optional[Budget] = None):
        self.adj = [sorted(row) for row in g.adj]
        self.n = g.n
        self.budget = budget or Budget()
        self.stats = SearchStats()
        self.best = greedy_dsatur(self.adj)
        self.best_k = max(self.best, default=-1) + 1
        self.clique = greedy_clique(self.adj)
        self.lower = len(self.clique)

    def run(self) -> list[int]:
        if self.best_k <= self.lower:
            return self.best
        colors = [-1] * self.n
        saturation: list[dict[int, int]] = [{} for _ in range(self.n)]
        for c, v in enumerate(self.clique):
            self._color(v, c, colors, saturation)
        self._branch(colors, saturation, len(self.clique), len(self.clique))
        return self.best

    def _color(self, v: int, c: int, colors: list[int], saturation: list[dict[int, int]]) -> None:
        colors[v] = c
        for u in self.adj[v]:
            saturation[u][c] = saturation[u].get(c, 0) + 1

    def _uncolor(self, v: int, c: int, colors: list[int], saturation: list[dict[int, int]]) -> None:
        colors[v] = -1
        for u in self.adj[v]:
            saturation[u][c] -= 1
            if not saturation[u][c]:
                del saturation[u][c]

    def _branch(self, colors: list[int], saturation: list[dict[int, int]], colored: int, used: int) -> None:
        self.budget.tick()
        if colored == self.n:
            if used < self.best_k:
                self.best, self.best_k = colors[:], used
                logger.debug(f"chi incumbent improved to {used}")
            return
        v = max(
            (u for u in range(self.n) if colors[u] == -1),
            key=lambda u: (len(saturation[u]), len(self.adj[u]), -u),
        )
        for c in range(used + 1):
            if c >= self.best_k - 1:
                # the remaining colors cannot beat the incumbent
                self.stats.pruned += 1
                break
            if c in saturation[v]:
                self.stats.pruned += 1
                continue
            self.stats.nodes += 1
            self._color(v, c, colors, saturation)
            self._branch(colors, saturation, colored + 1, max(used, c + 1))
            self._uncolor(v, c, colors, saturation)
            if self.best_k <= self.lower:
                return


def chromatic_number(g: Graph, timeout_sec: Optional[float] = None) -> SolveReport:
    """Compute chi(G) exactly with a proper-coloring witness.

    Args:
        g: Graph with at least one vertex
        timeout_sec: Wall-clock budget; on expiry the report carries the clique
            lower bound and the best coloring's size as bounds

    Returns:
        SolveReport: value, witness coloring and search statistics
    """
    if g.n < 1:
        raise ValueError("chromatic_number needs a graph with at least one vertex")
    started = time.perf_counter()
    search = ChromaticSearch(g, Budget(timeout_sec))
    status = "solved"
    try:
        colors = search.run()
    except SolveTimeout:
        logger.warning(f"chromatic_number timed out after {timeout_sec}s")
        status = "timeout"
        colors = search.best

    if not is_proper_coloring(g, colors):
        raise RuntimeError("chromatic search produced an improper coloring")
    stats = search.stats
    stats.wall_time_sec = time.perf_counter() - started
    stats.rss_mb = psutil.Process().memory_info().rss / (1024 * 1024)
    bounds = Bounds(
        lower=search.lower,
        upper=search.best_k,
        lower_reason=f"greedy clique of order {search.lower}",
        upper_reason=f"proper coloring with {search.best_k} colors",
    )
    if status == "timeout":
        return SolveReport(what="chi", status="timeout", bounds=bounds, stats=stats)
    return SolveReport(what="chi", value=search.best_k, witness=ProperColoring(colors=colors), bounds=bounds, stats=stats)
