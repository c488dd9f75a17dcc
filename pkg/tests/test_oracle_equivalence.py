"""Exact solvers against the brute-force oracles on every small graph.

The corpus is every graph on at most 6 vertices up to isomorphism plus 200
seeded G(n, m) samples on 7 to 9 vertices.
"""

import pytest

from fatchroma.coloring import infer_fat_parameters, is_proper_coloring, verify_witness
from fatchroma.graphs import degree_stats
from fatchroma.models import Partition
from fatchroma.solver import (
    brute_force_chi_fat,
    brute_force_chromatic,
    candidate_alphas,
    chi_fat,
    chromatic_number,
    fat_spectrum,
    restricted_growth_strings,
)

from .conftest import atlas_graphs, random_graphs

ATLAS = atlas_graphs()
RANDOM = random_graphs()

pytestmark = pytest.mark.slow


def _fat_witnesses(g):
    for labels in restricted_growth_strings(g.n):
        outcome = infer_fat_parameters(g, Partition.from_labels(labels))
        if outcome.accepted:
            yield outcome.witness


@pytest.mark.parametrize("g", ATLAS + RANDOM, ids=lambda g: f"n{g.n}m{g.edge_count}")
def test_chi_fat_matches_oracle(g):
    report = chi_fat(g)
    assert report.value == brute_force_chi_fat(g)
    assert verify_witness(g, report.witness).accepted
    assert report.bounds.lower <= report.value <= report.bounds.upper
    if g.edge_count:
        w = report.witness
        assert w.beta + (w.k - 1) * w.alpha == 1


@pytest.mark.parametrize("g", ATLAS + RANDOM, ids=lambda g: f"n{g.n}m{g.edge_count}")
def test_chromatic_matches_oracle(g):
    report = chromatic_number(g)
    assert report.value == brute_force_chromatic(g)
    assert is_proper_coloring(g, report.witness.colors)


def test_atlas_size():
    # graphs on 1..6 vertices up to isomorphism: 1 + 2 + 4 + 11 + 34 + 156
    assert len(ATLAS) == 208


@pytest.mark.parametrize("g", ATLAS, ids=lambda g: f"n{g.n}m{g.edge_count}")
def test_spectrum_matches_every_fat_partition(g):
    achievable = {w.k for w in _fat_witnesses(g)}
    report = fat_spectrum(g)
    assert set(report.feasible) == achievable
    assert 1 in report.feasible
    assert report.chi_fat == chi_fat(g).value


@pytest.mark.parametrize("g", [g for g in ATLAS if degree_stats(g).degree_gcd], ids=lambda g: f"n{g.n}m{g.edge_count}")
def test_candidate_alphas_cover_every_witness(g):
    for witness in _fat_witnesses(g):
        if witness.k >= 2:
            assert witness.alpha in candidate_alphas(g, witness.k)
