"""Exact FAT chromatic number toolkit - graphs in, certified colorings out."""

# Models
from .models import (
    # Graph models
    Graph,
    DegreeStats,
    ComponentDecomposition,
    # FAT coloring models
    Partition,
    FatWitness,
    Violation,
    InferenceOutcome,
    Verdict,
    ProperColoring,
    # Solver reports
    SearchStats,
    Bounds,
    KFeasibility,
    SolveReport,
    SpectrumReport,
    # Reproduction
    Family,
    FamilySpec,
    Theorem,
    TheoremCase,
    CaseResult,
)

# Graphs
from .graphs import connected_components, degree_stats, emit_dimacs, emit_graph6, parse_dimacs, parse_graph6

# Coloring
from .coloring import infer_fat_parameters, neighbor_count, validate_partition, verify_fat

# Solver
from .solver import (
    brute_force_chi_fat,
    brute_force_chromatic,
    candidate_alphas,
    chi_fat,
    chi_fat_upper_bound,
    chromatic_number,
    fat_k_feasible,
    fat_spectrum,
)

# Configuration
from .config import Config

__version__ = "0.1.0"

__all__ = [
    # Models
    "Graph",
    "DegreeStats",
    "ComponentDecomposition",
    "Partition",
    "FatWitness",
    "Violation",
    "InferenceOutcome",
    "Verdict",
    "ProperColoring",
    "SearchStats",
    "Bounds",
    "KFeasibility",
    "SolveReport",
    "SpectrumReport",
    "Family",
    "FamilySpec",
    "Theorem",
    "TheoremCase",
    "CaseResult",
    # Components
    "parse_graph6",
    "emit_graph6",
    "parse_dimacs",
    "emit_dimacs",
    "degree_stats",
    "connected_components",
    "neighbor_count",
    "validate_partition",
    "infer_fat_parameters",
    "verify_fat",
    "candidate_alphas",
    "fat_k_feasible",
    "chi_fat",
    "fat_spectrum",
    "chi_fat_upper_bound",
    "chromatic_number",
    "brute_force_chi_fat",
    "brute_force_chromatic",
    "Config",
]
