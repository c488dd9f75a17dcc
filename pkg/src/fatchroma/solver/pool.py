"""Worker pool for independent (k, alpha) branches."""

import logging
import multiprocessing
from concurrent.futures import Future, ProcessPoolExecutor, as_completed
from fractions import Fraction
from typing import Any, Optional, Sequence

from ..models import FatWitness, Graph, SearchStats
from .budget import BranchCancelled, Budget
from .search import FatSearch

logger = logging.getLogger(__name__)


def run_alpha_branch(
    g: Graph,
    k: int,
    alpha: Fraction,
    timeout_sec: Optional[float],
    stop_event: Any,
) -> tuple[Optional[FatWitness], SearchStats]:
    """Worker entry point: search a single branch until done, cancelled or out of time.

    Raises:
        SolveTimeout: If the branch runs past its budget
    """
    search = FatSearch(g, k, alpha, Budget(timeout_sec, stop_event))
    try:
        return search.run(), search.stats
    except BranchCancelled:
        logger.debug(f"k={k} alpha={alpha}: branch cancelled")
        return None, search.stats


class BranchPool:
    """Runs alpha branches sequentially or across worker processes.

    The only shared state between workers is a stop flag raised once the answer
    is settled. With ``deterministic`` set, results are merged in alpha order so
    the returned witness is the one a sequential run would return; otherwise the
    first branch to finish with a witness wins.
    """

    def __init__(self, workers: int = 1, deterministic: bool = False):
        self.workers = max(1, workers)
        self.deterministic = deterministic
        self._executor: Optional[ProcessPoolExecutor] = None
        self._manager = None

    def __enter__(self) -> "BranchPool":
        if self.workers > 1:
            self._executor = ProcessPoolExecutor(max_workers=self.workers)
            self._manager = multiprocessing.Manager()
            logger.info(f"Started branch pool with {self.workers} workers")
        return self

    def __exit__(self, *exc_info) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None
        if self._manager is not None:
            self._manager.shutdown()
            self._manager = None

    def first_witness(
        self,
        g: Graph,
        k: int,
        alphas: Sequence[Fraction],
        budget: Budget,
        stats: SearchStats,
    ) -> Optional[FatWitness]:
        """Search the given alpha branches and return a witness, or None if all close.

        Args:
            g: Graph
            k: Number of color classes
            alphas: Positive alpha candidates in ascending order
            budget: Deadline shared by every branch
            stats: Aggregate statistics, updated in place

        Raises:
            SolveTimeout: If any branch runs out of time before a witness is found
        """
        if self._executor is None or len(alphas) <= 1:
            for alpha in alphas:
                search = FatSearch(g, k, alpha, budget)
                try:
                    witness = search.run()
                finally:
                    stats.absorb(search.stats)
                if witness is not None:
                    return witness
            return None

        stop = self._manager.Event()
        futures: list[Future] = [
            self._executor.submit(run_alpha_branch, g, k, alpha, budget.remaining(), stop) for alpha in alphas
        ]
        consumed: set[Future] = set()
        try:
            ordered = futures if self.deterministic else as_completed(futures)
            for future in ordered:
                consumed.add(future)
                witness, branch_stats = future.result()
                stats.absorb(branch_stats)
                if witness is not None:
                    return witness
            return None
        finally:
            stop.set()
            drain_branches(futures, consumed, stats)


def drain_branches(futures: Sequence[Future], consumed: set[Future], stats: SearchStats) -> None:
    """Absorb counters from branches still running once the answer is settled.

    Branches that never started are cancelled. Branches that fail or run out of
    time after that point carry no counters back and are skipped.
    """
    for future in futures:
        if future in consumed or future.cancel():
            continue
        try:
            _, branch_stats = future.result()
        except Exception as e:
            logger.debug(f"discarding unfinished branch: {e!r}")
            continue
        stats.absorb(branch_stats)
