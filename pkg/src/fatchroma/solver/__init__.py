"""Exact solvers for chi and chi_fat, bounds and brute-force oracles."""

from .bounds import candidate_alphas, chi_fat_upper_bound
from .budget import Budget
from .chromatic import chromatic_number
from .fat import DEFAULT_SPECTRUM_CAP, chi_fat, fat_k_feasible, fat_spectrum
from .oracle import brute_force_chi_fat, brute_force_chromatic, restricted_growth_strings
from .pool import BranchPool

__all__ = [
    "candidate_alphas",
    "chi_fat_upper_bound",
    "Budget",
    "BranchPool",
    "fat_k_feasible",
    "chi_fat",
    "fat_spectrum",
    "DEFAULT_SPECTRUM_CAP",
    "chromatic_number",
    "brute_force_chi_fat",
    "brute_force_chromatic",
    "restricted_growth_strings",
]
