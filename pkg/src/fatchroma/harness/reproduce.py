"""Reproduce the (chi, chi_fat) values claimed for each family construction.

Cases are generated from parameter ranges, checked against the theorem
hypotheses, solved exactly and compared with the claimed pair. Like a batch
scheduler, cases fan out across worker processes and results are gathered back
in submission order, so the table is stable whatever finishes first.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional, Sequence

from ..coloring.fat import is_proper_coloring, verify_witness
from ..errors import HypothesisViolation
from ..generators.registry import build_family, expected_size
from ..models import CaseResult, Family, FamilySpec, FatWitness, ProperColoring, Theorem, TheoremCase
from ..solver.chromatic import chromatic_number
from ..solver.fat import chi_fat

logger = logging.getLogger(__name__)

DEFAULT_MAX_L2 = 4
DEFAULT_CONNECTED_N = (5,)
LARGE_CONNECTED_N = (7,)
DEFAULT_GENERAL_N = (3, 4, 5, 6)


# ============================================================================
# Case construction
# ============================================================================


def disconnected1_case(l1: int, l2: int) -> TheoremCase:
    """Graph with chi = L1 and chi_fat = L2: L2 disjoint copies of K_L1.

    Raises:
        HypothesisViolation: Unless 1 <= L1 < L2
    """
    if not 1 <= l1 < l2:
        raise HypothesisViolation(f"disconnected1 requires 1 <= L1 < L2, got L1={l1}, L2={l2}")
    if l1 == 1:
        instance = FamilySpec(family=Family.EDGELESS, params={"n": l2})
    else:
        instance = FamilySpec(family=Family.DISJOINT_CLIQUES, params={"count": l2, "size": l1})
    return TheoremCase(theorem=Theorem.DISCONNECTED1, instance=instance, expected_chi=l1, expected_chi_fat=l2)


def disconnected2_case(l1: int, l2: int) -> TheoremCase:
    """Graph with chi_fat = L1 and chi = L2.

    Raises:
        HypothesisViolation: Unless 1 < L1 < L2
    """
    if not 1 < l1 < l2:
        raise HypothesisViolation(f"disconnected2 requires 1 < L1 < L2, got L1={l1}, L2={l2}")
    instance = FamilySpec(family=Family.CLIQUES_MIXED, params={"l1": l1, "l2": l2})
    return TheoremCase(theorem=Theorem.DISCONNECTED2, instance=instance, expected_chi=l2, expected_chi_fat=l1)


def connected_cases(n: int) -> list[TheoremCase]:
    """Crown (chi 2, chi_fat n) and pendant triangles (chi n, chi_fat 2).

    Raises:
        HypothesisViolation: Unless n is odd and n >= 5
    """
    if n < 5 or n % 2 == 0:
        raise HypothesisViolation(f"connected requires odd n >= 5, got n={n}")
    return [
        TheoremCase(
            theorem=Theorem.CONNECTED,
            instance=FamilySpec(family=Family.CROWN, params={"n": n}),
            expected_chi=2,
            expected_chi_fat=n,
        ),
        TheoremCase(
            theorem=Theorem.CONNECTED,
            instance=FamilySpec(family=Family.PENDANT_TRIANGLES, params={"n": n}),
            expected_chi=n,
            expected_chi_fat=2,
        ),
    ]


def general_cases(n: int) -> list[TheoremCase]:
    """Edgeless (chi 1, chi_fat n) and K_n plus a pendant (chi n, chi_fat 1).

    Raises:
        HypothesisViolation: Unless n >= 3
    """
    if n < 3:
        raise HypothesisViolation(f"general requires n >= 3, got n={n}")
    return [
        TheoremCase(
            theorem=Theorem.GENERAL,
            instance=FamilySpec(family=Family.EDGELESS, params={"n": n}),
            expected_chi=1,
            expected_chi_fat=n,
        ),
        TheoremCase(
            theorem=Theorem.GENERAL,
            instance=FamilySpec(family=Family.CLIQUE_WITH_PENDANT, params={"n": n}),
            expected_chi=n,
            expected_chi_fat=1,
        ),
    ]


def build_cases(
    theorems: Optional[Iterable[Theorem]] = None,
    max_l2: int = DEFAULT_MAX_L2,
    connected_n: Optional[Sequence[int]] = None,
    general_n: Sequence[int] = DEFAULT_GENERAL_N,
    include_large: bool = False,
) -> list[TheoremCase]:
    """Enumerate reproduction cases in a fixed order.

    Args:
        theorems: Theorems to include (all when omitted)
        max_l2: Largest L2 for both disconnected constructions
        connected_n: Odd orders for the connected construction
        general_n: Orders for the general construction
        include_large: Add the larger connected instances to the default orders

    Returns:
        list[TheoremCase]: Cases grouped by theorem, parameters ascending

    Raises:
        HypothesisViolation: If an explicitly requested order breaks a hypothesis
    """
    selected = set(theorems) if theorems is not None else set(Theorem)
    if connected_n is None:
        connected_n = DEFAULT_CONNECTED_N + (LARGE_CONNECTED_N if include_large else ())

    cases: list[TheoremCase] = []
    if Theorem.DISCONNECTED1 in selected:
        cases += [disconnected1_case(l1, l2) for l2 in range(2, max_l2 + 1) for l1 in range(1, l2)]
    if Theorem.DISCONNECTED2 in selected:
        cases += [disconnected2_case(l1, l2) for l2 in range(3, max_l2 + 1) for l1 in range(2, l2)]
    if Theorem.CONNECTED in selected:
        for n in connected_n:
            cases += connected_cases(n)
    if Theorem.GENERAL in selected:
        for n in general_n:
            cases += general_cases(n)
    return cases


# ============================================================================
# Case execution
# ============================================================================


def run_case(case: TheoremCase, timeout_sec: Optional[float] = None, threads: int = 1) -> CaseResult:
    """Generate, solve and re-verify a single case.

    Never raises: failures come back as an ERROR row so a worker process does
    not have to ship an exception back to the parent.
    """
    started = time.perf_counter()
    try:
        g = build_family(case.instance)
        if (g.n, g.edge_count) != expected_size(case.instance):
            raise RuntimeError(f"{case.label}: generated size {(g.n, g.edge_count)} differs from closed form")

        chi = chromatic_number(g, timeout_sec=timeout_sec)
        fat = chi_fat(g, timeout_sec=timeout_sec, threads=threads, deterministic=True)
        elapsed = time.perf_counter() - started
        if chi.status == "timeout" or fat.status == "timeout":
            logger.warning(f"{case.label}: timed out after {elapsed:.2f}s")
            return CaseResult(
                case=case, computed_chi=chi.value, computed_chi_fat=fat.value, status="TIMEOUT", time_sec=elapsed
            )

        verified = (
            isinstance(chi.witness, ProperColoring)
            and is_proper_coloring(g, chi.witness.colors)
            and chi.witness.k == chi.value
            and isinstance(fat.witness, FatWitness)
            and verify_witness(g, fat.witness).accepted
        )
        matches = chi.value == case.expected_chi and fat.value == case.expected_chi_fat
        status = "PASS" if matches and verified else "FAIL"
        logger.info(f"{case.label}: chi={chi.value} chi_fat={fat.value} {status} in {elapsed:.2f}s")
        return CaseResult(
            case=case,
            computed_chi=chi.value,
            computed_chi_fat=fat.value,
            status=status,
            witness_verified=verified,
            time_sec=elapsed,
        )
    except Exception as e:
        logger.error(f"{case.label}: {e}", exc_info=True)
        return CaseResult(case=case, status="ERROR", time_sec=time.perf_counter() - started, error=str(e))


def run_cases(
    cases: Sequence[TheoremCase],
    timeout_sec: Optional[float] = None,
    workers: int = 1,
) -> list[CaseResult]:
    """Run cases, concurrently when workers > 1, returning rows in case order."""
    logger.info(f"Reproducing {len(cases)} cases with {workers} worker(s)")
    if workers <= 1 or len(cases) <= 1:
        return [run_case(case, timeout_sec) for case in cases]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(run_case, case, timeout_sec) for case in cases]
        return [future.result() for future in futures]


def all_passed(results: Iterable[CaseResult]) -> bool:
    return all(result.status == "PASS" for result in results)


# ============================================================================
# Reporting
# ============================================================================

_COLUMNS = ("case", "expected", "computed", "gap", "verified", "status", "time")


def format_table(results: Sequence[CaseResult]) -> str:
    """Plain-text table with one row per case, followed by a summary line."""
    rows = [_COLUMNS]
    for r in results:
        computed = "-" if r.computed_chi is None and r.computed_chi_fat is None else (
            f"({_dash(r.computed_chi)}, {_dash(r.computed_chi_fat)})"
        )
        rows.append((
            r.case.label,
            f"({r.case.expected_chi}, {r.case.expected_chi_fat})",
            computed,
            _dash(r.gap),
            "yes" if r.witness_verified else "no",
            r.status,
            f"{r.time_sec:.2f}s",
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(_COLUMNS))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
    passed = sum(r.status == "PASS" for r in results)
    lines.append(f"{passed}/{len(results)} cases passed")
    return "\n".join(lines)


def _dash(value: Optional[int]) -> str:
    return "-" if value is None else str(value)
