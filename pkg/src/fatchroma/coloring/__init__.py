"""FAT coloring definition, verification and coloring files."""

from .fat import (
    block_owner,
    component_coloring,
    infer_fat_parameters,
    is_proper_coloring,
    neighbor_count,
    validate_partition,
    verify_fat,
    verify_witness,
)
from .files import format_coloring, parse_coloring

__all__ = [
    "neighbor_count",
    "validate_partition",
    "block_owner",
    "infer_fat_parameters",
    "verify_fat",
    "verify_witness",
    "component_coloring",
    "is_proper_coloring",
    "parse_coloring",
    "format_coloring",
]
