"""Exact decision and optimization for FAT colorings."""

import logging
import time
from typing import Optional

import psutil

from ..coloring.fat import ONE, ZERO, verify_witness
from ..errors import SizeCapExceeded, SolveTimeout
from ..graphs.core import connected_components
from ..models import (
    ComponentDecomposition,
    FatWitness,
    Graph,
    KFeasibility,
    Partition,
    SearchStats,
    SolveReport,
    SpectrumReport,
)
from .bounds import candidate_alphas, chi_fat_upper_bound
from .budget import Budget
from .pool import BranchPool

logger = logging.getLogger(__name__)

DEFAULT_SPECTRUM_CAP = 32


def group_components(components: ComponentDecomposition, k: int) -> FatWitness:
    """Merge components into k nonempty classes (alpha = 0, beta = 1).

    The k-1 components with the smallest vertices keep their own class and every
    remaining component joins the last one.
    """
    parts = components.components
    blocks = [list(part) for part in parts[: k - 1]]
    blocks.append(sorted(v for part in parts[k - 1:] for v in part))
    canon = Partition(blocks=blocks).canonical()
    return FatWitness(k=k, blocks=canon.blocks, alpha=ZERO, beta=ONE)


def fat_k_feasible(
    g: Graph,
    k: int,
    budget: Optional[Budget] = None,
    pool: Optional[BranchPool] = None,
) -> KFeasibility:
    """Decide whether g admits a FAT k-coloring.

    k = 1 is always feasible. The alpha = 0 branch is closed-form: classes must be
    unions of components, so it succeeds iff k <= c. Every positive candidate alpha
    runs an exact backtracking search.

    Args:
        g: Graph
        k: Number of color classes, 1 <= k <= |V(g)|
        budget: Deadline (unlimited when omitted)
        pool: Branch pool; sequential when omitted

    Returns:
        KFeasibility: Witness if feasible, plus the alphas considered and search stats

    Raises:
        ValueError: If k is out of range
        SolveTimeout: If the budget runs out first
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"k must lie in [1, {g.n}], got {k}")
    budget = budget or Budget()
    stats = SearchStats()

    if k == 1:
        witness = FatWitness(k=1, blocks=[list(range(g.n))], alpha=ZERO, beta=ONE)
        return KFeasibility(k=1, witness=witness, alphas_tried=[ZERO], stats=stats)

    components = connected_components(g)
    if k <= components.count:
        return KFeasibility(k=k, witness=group_components(components, k), alphas_tried=[ZERO], stats=stats)
    positive = [alpha for alpha in candidate_alphas(g, k) if alpha > 0]

    pool = pool or BranchPool()
    witness = pool.first_witness(g, k, positive, budget, stats)
    logger.info(f"k={k}: {'feasible' if witness else 'infeasible'} ({len(positive)} alpha branches, {stats.nodes} nodes)")
    return KFeasibility(k=k, witness=witness, alphas_tried=[ZERO, *positive], stats=stats)


def _finish(stats: SearchStats, started: float) -> None:
    stats.wall_time_sec = time.perf_counter() - started
    stats.rss_mb = psutil.Process().memory_info().rss / (1024 * 1024)


def _check_witness(g: Graph, witness: FatWitness) -> None:
    verdict = verify_witness(g, witness)
    if not verdict.accepted:
        raise RuntimeError(f"solver produced an invalid witness: {verdict.violation.describe()}")


def chi_fat(
    g: Graph,
    timeout_sec: Optional[float] = None,
    threads: int = 1,
    deterministic: bool = False,
) -> SolveReport:
    """Compute the FAT chromatic number exactly.

    k descends from chi_fat_upper_bound(g).upper and the first feasible k is the
    answer. The loop always stops by k = c, where the component coloring applies.

    Args:
        g: Graph with at least one vertex
        timeout_sec: Wall-clock budget; on expiry the report carries bounds only
        threads: Worker processes for alpha branches
        deterministic: Merge parallel branches in alpha order

    Returns:
        SolveReport: value, re-verified witness, bounds and search statistics
    """
    if g.n < 1:
        raise ValueError("chi_fat needs a graph with at least one vertex")
    started = time.perf_counter()
    bounds = chi_fat_upper_bound(g)
    budget = Budget(timeout_sec)
    stats = SearchStats(workers=max(1, threads))
    logger.info(f"chi_fat: n={g.n}, m={g.edge_count}, bounds [{bounds.lower}, {bounds.upper}]")

    try:
        with BranchPool(threads, deterministic) as pool:
            for k in range(bounds.upper, bounds.lower - 1, -1):
                result = fat_k_feasible(g, k, budget, pool)
                stats.absorb(result.stats)
                if result.feasible:
                    _check_witness(g, result.witness)
                    _finish(stats, started)
                    return SolveReport(what="chifat", value=k, witness=result.witness, bounds=bounds, stats=stats)
    except SolveTimeout:
        logger.warning(f"chi_fat timed out after {timeout_sec}s; reporting bounds only")
        _finish(stats, started)
        return SolveReport(what="chifat", status="timeout", bounds=bounds, stats=stats)
    raise RuntimeError("no feasible k at or above the component count")


def fat_spectrum(
    g: Graph,
    cap: int = DEFAULT_SPECTRUM_CAP,
    timeout_sec: Optional[float] = None,
    threads: int = 1,
    deterministic: bool = False,
) -> SpectrumReport:
    """Decide every k in [1, |V|] independently.

    Raises:
        SizeCapExceeded: If |V| exceeds cap
        SolveTimeout: If the budget runs out
    """
    if g.n < 1:
        raise ValueError("fat_spectrum needs a graph with at least one vertex")
    if g.n > cap:
        raise SizeCapExceeded("fat_spectrum", g.n, cap)
    started = time.perf_counter()
    budget = Budget(timeout_sec)
    stats = SearchStats(workers=max(1, threads))
    feasible: dict[int, FatWitness] = {}
    infeasible: list[int] = []

    with BranchPool(threads, deterministic) as pool:
        for k in range(1, g.n + 1):
            result = fat_k_feasible(g, k, budget, pool)
            stats.absorb(result.stats)
            if result.feasible:
                _check_witness(g, result.witness)
                feasible[k] = result.witness
            else:
                infeasible.append(k)

    _finish(stats, started)
    logger.info(f"spectrum: feasible {sorted(feasible)}, infeasible {infeasible}")
    return SpectrumReport(feasible=feasible, infeasible=infeasible, stats=stats)
