"""Backtracking search for a FAT k-coloring with a fixed positive alpha."""

import logging
from fractions import Fraction
from typing import Optional

from ..models import FatWitness, Graph, Partition, SearchStats
from .budget import Budget

logger = logging.getLogger(__name__)


class FatSearch:
    """Exact CSP search for one (k, alpha) branch.

    Vertices are assigned in descending-degree order. Block indices follow a
    restricted growth order (a vertex may join an opened block or the next new
    one), which removes the k! relabelings of each coloring. For every vertex we
    track how many assigned neighbors sit in each block; a branch dies when a
    count exceeds its target (beta * deg in the own block, alpha * deg elsewhere)
    or when an unassigned neighbor has no block left that it could join. Since
    the targets of a vertex sum to its degree, no overflow at a complete
    assignment means every count is met exactly.
    """

    def __init__(self, g: Graph, k: int, alpha: Fraction, budget: Optional[Budget] = None):
        """Initialize one branch.

        Args:
            g: Graph with at least one edge
            k: Number of color classes (>= 2)
            alpha: Positive candidate from candidate_alphas
            budget: Deadline / stop flag polled once per node
        """
        self.g = g
        self.k = k
        self.alpha = alpha
        self.beta = 1 - (k - 1) * alpha
        self.budget = budget or Budget()
        self.stats = SearchStats(alpha_branches=1)

        self.adj = [sorted(row) for row in g.adj]
        self.order = sorted(range(g.n), key=lambda v: (-len(self.adj[v]), v))
        self.own_target: list[int] = []
        self.other_target: list[int] = []
        self.integral = True
        for v in range(g.n):
            deg = len(self.adj[v])
            own, other = self.beta * deg, alpha * deg
            if own.denominator != 1 or other.denominator != 1:
                self.integral = False
            self.own_target.append(int(own))
            self.other_target.append(int(other))

        self.block = [-1] * g.n
        self.counts = [[0] * k for _ in range(g.n)]
        self.used = 0

    def run(self) -> Optional[FatWitness]:
        """Search the branch to exhaustion.

        Returns:
            FatWitness: First coloring found in search order
            None: If no FAT k-coloring uses this alpha
        """
        if not self.integral or self.beta < 0:
            logger.debug(f"k={self.k} alpha={self.alpha}: targets not integral, branch closed")
            return None
        found = self._assign(0)
        logger.debug(
            f"k={self.k} alpha={self.alpha}: {'found' if found else 'exhausted'} "
            f"after {self.stats.nodes} nodes, {self.stats.pruned} prunes"
        )
        if not found:
            return None
        blocks: list[list[int]] = [[] for _ in range(self.k)]
        for v, b in enumerate(self.block):
            blocks[b].append(v)
        canon = Partition(blocks=blocks).canonical()
        return FatWitness(k=self.k, blocks=canon.blocks, alpha=self.alpha, beta=self.beta)

    def _fits(self, v: int, b: int) -> bool:
        counts = self.counts[v]
        if counts[b] > self.own_target[v]:
            return False
        other = self.other_target[v]
        return all(count <= other for c, count in enumerate(counts) if c != b)

    def _has_option(self, u: int) -> bool:
        limit = min(self.used + 1, self.k)
        return any(self._fits(u, b) for b in range(limit))

    def _assign(self, pos: int) -> bool:
        n = self.g.n
        if pos == n:
            return self.used == self.k
        if self.k - self.used > n - pos:
            self.stats.pruned += 1
            return False

        v = self.order[pos]
        previous_used = self.used
        for b in range(min(self.used + 1, self.k)):
            self.budget.tick()
            if not self._fits(v, b):
                self.stats.pruned += 1
                continue
            self.stats.nodes += 1
            self.block[v] = b
            self.used = max(previous_used, b + 1)
            for u in self.adj[v]:
                self.counts[u][b] += 1

            if self._consistent(v, b) and self._assign(pos + 1):
                return True

            for u in self.adj[v]:
                self.counts[u][b] -= 1
            self.block[v] = -1
            self.used = previous_used
        return False

    def _consistent(self, v: int, b: int) -> bool:
        """Check every neighbor of v after v joined block b."""
        for u in self.adj[v]:
            bu = self.block[u]
            if bu >= 0:
                limit = self.own_target[u] if bu == b else self.other_target[u]
                if self.counts[u][b] > limit:
                    self.stats.pruned += 1
                    return False
            elif not self._has_option(u):
                self.stats.pruned += 1
                return False
        return True
