"""Pydantic models for graphs, FAT colorings, solver reports and reproduction runs."""

from enum import Enum
from fractions import Fraction
from typing import Annotated, Any, Iterable, Literal, Optional, Sequence, Union

from pydantic import (
    AfterValidator,
    BaseModel,
    ConfigDict,
    Field,
    PlainSerializer,
    PlainValidator,
    model_validator,
)


# ============================================================================
# Exact rationals (alpha, beta)
# ============================================================================


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational: {value!r}") from None
    raise ValueError(f"not a rational: {value!r}")


def format_fraction(value: Fraction) -> str:
    """Lowest-terms ``p/q`` string; integers keep an explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


def _in_unit_interval(value: Fraction) -> Fraction:
    if not 0 <= value <= 1:
        raise ValueError(f"{format_fraction(value)} is outside [0, 1]")
    return value


Rational = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(format_fraction, return_type=str),
]
UnitRational = Annotated[Rational, AfterValidator(_in_unit_interval)]


# ============================================================================
# Graph Models
# ============================================================================


class Graph(BaseModel):
    """Simple undirected graph on vertices 0..n-1 (immutable)."""

    n: int = Field(ge=0, description="Vertex count")
    adj: tuple[frozenset[int], ...] = Field(description="Neighbor set per vertex")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_simple(self) -> "Graph":
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, neighbors in enumerate(self.adj):
            if v in neighbors:
                raise ValueError(f"self-loop at vertex {v}")
            for u in neighbors:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range [0, {self.n})")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency: {u} in N({v}) but {v} not in N({u})")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse.

        Raises:
            ValueError: On self-loops or endpoints outside [0, n)
        """
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n=n, adj=tuple(frozenset(row) for row in rows))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of v in ascending order."""
        return sorted(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adj) // 2


class DegreeStats(BaseModel):
    """Degree profile of a graph."""

    degrees: list[int]
    min_degree: int = Field(description="delta(G); 0 for the empty graph")
    min_positive_degree: Optional[int] = Field(None, description="Minimum over vertices of positive degree")
    degree_gcd: Optional[int] = Field(None, description="gcd of all positive degrees")


class ComponentDecomposition(BaseModel):
    """Connected components, each sorted, listed by smallest vertex."""

    components: list[list[int]]

    @property
    def count(self) -> int:
        return len(self.components)


# ============================================================================
# FAT Coloring Models
# ============================================================================


class Partition(BaseModel):
    """Ordered color classes. Structural validity is checked against a graph by fat_core."""

    blocks: list[list[int]]

    @property
    def k(self) -> int:
        return len(self.blocks)

    def canonical(self) -> "Partition":
        """Blocks sorted internally and ordered by smallest vertex (blocks must be nonempty)."""
        return Partition(blocks=sorted((sorted(block) for block in self.blocks), key=lambda block: block[0]))

    @classmethod
    def from_labels(cls, labels: Sequence[Any]) -> "Partition":
        """One block per distinct label, vertex i carrying labels[i]."""
        index: dict[Any, int] = {}
        blocks: list[list[int]] = []
        for v, label in enumerate(labels):
            if label not in index:
                index[label] = len(blocks)
                blocks.append([])
            blocks[index[label]].append(v)
        return cls(blocks=blocks)


class FatWitness(BaseModel):
    """A certified FAT k-coloring. Serializes to the witness JSON schema."""

    k: int = Field(ge=1)
    blocks: list[list[int]]
    alpha: UnitRational
    beta: UnitRational

    @model_validator(mode="after")
    def _check_block_count(self) -> "FatWitness":
        if len(self.blocks) != self.k:
            raise ValueError(f"k={self.k} but {len(self.blocks)} blocks given")
        return self

    @property
    def partition(self) -> Partition:
        return Partition(blocks=self.blocks)


class Violation(BaseModel):
    """A (vertex, block) pair where the FAT condition fails.

    ``required`` is the ratio e(v, V_i)/deg(v) that the parameter demands.
    For inference conflicts ``pinned_by`` names the (vertex, block) pair that
    fixed ``required`` first.
    """

    vertex: int
    block: int
    block_vertices: list[int]
    parameter: Literal["alpha", "beta"]
    observed_count: int
    degree: int
    required: Rational
    pinned_by: Optional[tuple[int, int]] = None

    @property
    def observed_ratio(self) -> Fraction:
        return Fraction(self.observed_count, self.degree)

    def describe(self) -> str:
        relation = "own class" if self.parameter == "beta" else "other class"
        text = (
            f"vertex {self.vertex} has {self.observed_count} of {self.degree} neighbors in {relation} "
            f"{self.block} {self.block_vertices}, ratio {format_fraction(self.observed_ratio)}, "
            f"but {self.parameter} = {format_fraction(self.required)}"
        )
        if self.pinned_by is not None:
            text += f" (pinned by vertex {self.pinned_by[0]} via block {self.pinned_by[1]})"
        return text


class InferenceOutcome(BaseModel):
    """Result of inferring (alpha, beta) from a candidate partition."""

    witness: Optional[FatWitness] = None
    violation: Optional[Violation] = None

    @property
    def accepted(self) -> bool:
        return self.witness is not None


class Verdict(BaseModel):
    """Result of checking a partition against given (alpha, beta)."""

    accepted: bool
    violation: Optional[Violation] = None


class ProperColoring(BaseModel):
    """Proper coloring witness for chi: colors[v] in [0, k)."""

    colors: list[int]

    @property
    def k(self) -> int:
        return max(self.colors) + 1 if self.colors else 0


# ============================================================================
# Solver Report Models
# ============================================================================


class SearchStats(BaseModel):
    """Search effort for one solve.

    Parallel runs count the branches that finished or were stopped; a branch that
    times out after the answer is settled contributes nothing.
    """

    nodes: int = 0
    pruned: int = 0
    alpha_branches: int = 0
    workers: int = 1
    wall_time_sec: float = 0.0
    rss_mb: Optional[float] = None

    def absorb(self, other: "SearchStats") -> None:
        """Add another branch's counters into this one."""
        self.nodes += other.nodes
        self.pruned += other.pruned
        self.alpha_branches += other.alpha_branches


class Bounds(BaseModel):
    """Sound bounds on chi_fat with the argument behind each."""

    lower: int
    upper: int
    lower_reason: str
    upper_reason: str


class KFeasibility(BaseModel):
    """Decision for a single k."""

    k: int
    witness: Optional[FatWitness] = None
    alphas_tried: list[Rational] = Field(default_factory=list)
    stats: SearchStats = Field(default_factory=SearchStats)

    @property
    def feasible(self) -> bool:
        return self.witness is not None


class SolveReport(BaseModel):
    """Result of an exact solve; value is None when the budget ran out."""

    what: Literal["chi", "chifat", "spectrum"]
    status: Literal["solved", "timeout"] = "solved"
    value: Optional[int] = None
    witness: Optional[Union[FatWitness, ProperColoring]] = None
    bounds: Optional[Bounds] = None
    stats: SearchStats = Field(default_factory=SearchStats)


class SpectrumReport(BaseModel):
    """Every k in [1, n] classified as feasible (with witness) or infeasible."""

    feasible: dict[int, FatWitness]
    infeasible: list[int]
    stats: SearchStats = Field(default_factory=SearchStats)

    @property
    def chi_fat(self) -> int:
        return max(self.feasible)


# ============================================================================
# Generator and Reproduction Models
# ============================================================================


class Family(str, Enum):
    """Graph families built in the FAT chromatic number constructions."""

    EDGELESS = "edgeless"
    DISJOINT_CLIQUES = "disjoint_cliques"
    CLIQUES_MIXED = "cliques_mixed"
    CROWN = "crown"
    PENDANT_TRIANGLES = "pendant_triangles"
    CLIQUE_WITH_PENDANT = "clique_with_pendant"


class FamilySpec(BaseModel):
    """A family name plus its integer parameters."""

    family: Family
    params: dict[str, int] = Field(default_factory=dict)


class Theorem(str, Enum):
    DISCONNECTED1 = "disconnected1"
    DISCONNECTED2 = "disconnected2"
    CONNECTED = "connected"
    GENERAL = "general"


class TheoremCase(BaseModel):
    """One graph instance together with the (chi, chi_fat) pair the theorem claims."""

    theorem: Theorem
    instance: FamilySpec
    expected_chi: int
    expected_chi_fat: int

    @property
    def label(self) -> str:
        params = ",".join(f"{key}={value}" for key, value in self.instance.params.items())
        return f"{self.theorem.value}:{self.instance.family.value}({params})"


class CaseResult(BaseModel):
    """One row of the reproduction table."""

    case: TheoremCase
    computed_chi: Optional[int] = None
    computed_chi_fat: Optional[int] = None
    status: Literal["PASS", "FAIL", "TIMEOUT", "ERROR"]
    witness_verified: bool = False
    time_sec: float = 0.0
    error: Optional[str] = None

    @property
    def gap(self) -> Optional[int]:
        if self.computed_chi is None or self.computed_chi_fat is None:
            return None
        return self.computed_chi_fat - self.computed_chi
