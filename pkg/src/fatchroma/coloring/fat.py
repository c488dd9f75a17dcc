"""The FAT coloring definition: neighbor counts, parameter inference and verification.

All comparisons are exact. ``e(v, V_i) = alpha * deg(v)`` is tested as
``e * alpha.denominator == alpha.numerator * deg`` so no floating point is involved.
"""

import logging
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import PartitionError
from ..graphs.core import connected_components
from ..models import FatWitness, Graph, InferenceOutcome, Partition, Verdict, Violation

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


def neighbor_count(g: Graph, v: int, s: Iterable[int]) -> int:
    """e(v, S): number of neighbors of v inside S.

    Raises:
        ValueError: If v is not a vertex of g
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range [0, {g.n})")
    return len(g.adj[v].intersection(s))


def validate_partition(g: Graph, p: Partition) -> Partition:
    """Check the color classes against V(g) and return them in canonical order.

    Raises:
        PartitionError: Empty block, vertex outside V(g), overlapping blocks,
            or blocks that do not cover V(g)
    """
    if not p.blocks:
        raise PartitionError("partition has no blocks")
    owner = [-1] * g.n
    for i, block in enumerate(p.blocks):
        if not block:
            raise PartitionError(f"block {i} is empty")
        for v in block:
            if not 0 <= v < g.n:
                raise PartitionError(f"vertex {v} in block {i} is outside [0, {g.n})")
            if owner[v] != -1:
                raise PartitionError(f"vertex {v} appears in blocks {owner[v]} and {i}")
            owner[v] = i
    missing = [v for v in range(g.n) if owner[v] == -1]
    if missing:
        raise PartitionError(f"blocks do not cover vertices {missing}")
    return p.canonical()


def block_owner(p: Partition, n: int) -> list[int]:
    """owner[v] = index of the block containing v."""
    owner = [0] * n
    for i, block in enumerate(p.blocks):
        for v in block:
            owner[v] = i
    return owner


def _class_counts(g: Graph, v: int, owner: Sequence[int], k: int) -> list[int]:
    counts = [0] * k
    for u in g.adj[v]:
        counts[owner[u]] += 1
    return counts


def infer_fat_parameters(g: Graph, p: Partition) -> InferenceOutcome:
    """Infer the (alpha, beta) pair a partition would need to be a FAT coloring.

    Every positive-degree vertex pins beta through its own class and alpha through
    each other class; the first pin of each parameter in (vertex, block) order is
    kept and any later disagreement is returned as a rejection. A parameter nothing
    pins falls back to the FAT 1-coloring values (alpha = 0, beta = 1).

    Args:
        g: Graph
        p: Candidate color classes

    Returns:
        InferenceOutcome: The witness, or the first conflicting (vertex, block) pair

    Raises:
        PartitionError: If p is not a partition of V(g) into nonempty blocks
    """
    canon = validate_partition(g, p)
    owner = block_owner(canon, g.n)
    k = canon.k
    pins: dict[str, tuple[Fraction, int, int]] = {}

    for v in range(g.n):
        deg = len(g.adj[v])
        if deg == 0:
            continue
        for i, count in enumerate(_class_counts(g, v, owner, k)):
            parameter = "beta" if i == owner[v] else "alpha"
            ratio = Fraction(count, deg)
            pinned = pins.get(parameter)
            if pinned is None:
                pins[parameter] = (ratio, v, i)
            elif pinned[0] != ratio:
                return InferenceOutcome(
                    violation=Violation(
                        vertex=v,
                        block=i,
                        block_vertices=canon.blocks[i],
                        parameter=parameter,
                        observed_count=count,
                        degree=deg,
                        required=pinned[0],
                        pinned_by=(pinned[1], pinned[2]),
                    )
                )

    alpha = pins["alpha"][0] if "alpha" in pins else ZERO
    beta = pins["beta"][0] if "beta" in pins else ONE
    return InferenceOutcome(witness=FatWitness(k=k, blocks=canon.blocks, alpha=alpha, beta=beta))


def verify_fat(g: Graph, p: Partition, alpha: Fraction, beta: Fraction) -> Verdict:
    """Check the FAT condition for given parameters.

    Args:
        g: Graph
        p: Color classes
        alpha: Required fraction of neighbors in every other class
        beta: Required fraction of neighbors in the own class

    Returns:
        Verdict: Accepted, or the first failing (vertex, block) pair in
        lexicographic order over canonical block indices

    Raises:
        ValueError: If alpha or beta is outside [0, 1]
        PartitionError: If p is not a partition of V(g) into nonempty blocks
    """
    for name, value in (("alpha", alpha), ("beta", beta)):
        if not 0 <= value <= 1:
            raise ValueError(f"{name}={value} is outside [0, 1]")
    alpha, beta = Fraction(alpha), Fraction(beta)
    canon = validate_partition(g, p)
    owner = block_owner(canon, g.n)

    for v in range(g.n):
        deg = len(g.adj[v])
        if deg == 0:
            continue
        for i, count in enumerate(_class_counts(g, v, owner, canon.k)):
            own = i == owner[v]
            required = beta if own else alpha
            if count * required.denominator != required.numerator * deg:
                return Verdict(
                    accepted=False,
                    violation=Violation(
                        vertex=v,
                        block=i,
                        block_vertices=canon.blocks[i],
                        parameter="beta" if own else "alpha",
                        observed_count=count,
                        degree=deg,
                        required=required,
                    ),
                )
    return Verdict(accepted=True)


def verify_witness(g: Graph, witness: FatWitness) -> Verdict:
    return verify_fat(g, witness.partition, witness.alpha, witness.beta)


def component_coloring(g: Graph) -> FatWitness:
    """One color class per connected component, with alpha = 0 and beta = 1.

    Raises:
        ValueError: If g has no vertices
    """
    if g.n == 0:
        raise ValueError("the empty graph has no FAT coloring")
    components = connected_components(g).components
    return FatWitness(k=len(components), blocks=components, alpha=ZERO, beta=ONE)


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    """True iff colors assigns every vertex and no edge is monochromatic."""
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())
