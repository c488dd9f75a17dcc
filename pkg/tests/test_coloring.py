"""FAT condition: neighbor counts, partition checks, inference and verification."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fatchroma.coloring import (
    component_coloring,
    format_coloring,
    infer_fat_parameters,
    is_proper_coloring,
    neighbor_count,
    parse_coloring,
    validate_partition,
    verify_fat,
    verify_witness,
)
from fatchroma.errors import GraphFormatError, PartitionError
from fatchroma.generators import crown, edgeless, pendant_triangles
from fatchroma.models import FatWitness, Graph, Partition


class TestNeighborCount:
    def test_counts_inside_set(self, k4):
        assert neighbor_count(k4, 0, {1, 2}) == 2
        assert neighbor_count(k4, 0, {0}) == 0

    def test_vertex_out_of_range(self, k4):
        with pytest.raises(ValueError, match="out of range"):
            neighbor_count(k4, 4, {0})


class TestValidatePartition:
    def test_returns_canonical_order(self, k4):
        p = validate_partition(k4, Partition(blocks=[[3, 1], [2, 0]]))
        assert p.blocks == [[0, 2], [1, 3]]

    @pytest.mark.parametrize(
        "blocks, message",
        [
            ([[0, 1], []], "empty"),
            ([[0, 1], [1, 2, 3]], "appears in blocks"),
            ([[0, 1], [2]], "do not cover"),
            ([[0, 1, 2, 3, 4]], "outside"),
            ([], "no blocks"),
        ],
    )
    def test_rejects_bad_partitions(self, k4, blocks, message):
        with pytest.raises(PartitionError, match=message):
            validate_partition(k4, Partition(blocks=blocks))


class TestInference:
    def test_triangle_singletons(self, triangle):
        outcome = infer_fat_parameters(triangle, Partition(blocks=[[0], [1], [2]]))
        assert outcome.accepted
        assert outcome.witness.alpha == Fraction(1, 2)
        assert outcome.witness.beta == 0

    def test_triangle_split_rejected_with_pin(self, triangle):
        outcome = infer_fat_parameters(triangle, Partition(blocks=[[0, 1], [2]]))
        assert not outcome.accepted
        violation = outcome.violation
        # vertex 2 sees both neighbors in block 0, but vertex 0 pinned alpha at 1/2
        assert (violation.vertex, violation.block) == (2, 0)
        assert violation.parameter == "alpha"
        assert violation.observed_count == 2
        assert violation.required == Fraction(1, 2)
        assert violation.pinned_by == (0, 1)
        assert "pinned by vertex 0" in violation.describe()

    def test_path_middle_versus_ends(self, path3):
        outcome = infer_fat_parameters(path3, Partition(blocks=[[1], [0, 2]]))
        assert outcome.accepted
        assert (outcome.witness.alpha, outcome.witness.beta) == (1, 0)

    def test_path_singletons_rejected(self, path3):
        assert not infer_fat_parameters(path3, Partition(blocks=[[0], [1], [2]])).accepted

    def test_single_block_defaults(self, triangle):
        witness = infer_fat_parameters(triangle, Partition(blocks=[[0, 1, 2]])).witness
        assert (witness.alpha, witness.beta) == (0, 1)

    def test_edgeless_accepts_anything(self):
        g = Graph.from_edges(4, [])
        witness = infer_fat_parameters(g, Partition(blocks=[[0, 3], [1], [2]])).witness
        assert witness.k == 3
        assert (witness.alpha, witness.beta) == (0, 1)

    def test_crown_matching_pairs(self):
        g = crown(5)
        blocks = [[i, 5 + i] for i in range(5)]
        witness = infer_fat_parameters(g, Partition(blocks=blocks)).witness
        assert witness.k == 5
        assert (witness.alpha, witness.beta) == (Fraction(1, 4), 0)

    def test_pendant_triangles_hubs_versus_triangles(self):
        # each pendant pair sits opposite its hub; each hub sees n-1 hubs and n-1 pendant vertices
        n = 5
        g = pendant_triangles(n)
        blocks = [list(range(n)), list(range(n, g.n))]
        witness = infer_fat_parameters(g, Partition(blocks=blocks)).witness
        assert witness is not None
        assert (witness.alpha, witness.beta) == (Fraction(1, 2), Fraction(1, 2))


class TestVerify:
    def test_accepts_given_parameters(self, triangle):
        verdict = verify_fat(triangle, Partition(blocks=[[0], [1], [2]]), Fraction(1, 2), Fraction(0))
        assert verdict.accepted

    def test_reports_first_failure(self, triangle):
        verdict = verify_fat(triangle, Partition(blocks=[[0], [1], [2]]), Fraction(1, 3), Fraction(1, 3))
        assert not verdict.accepted
        assert (verdict.violation.vertex, verdict.violation.block) == (0, 0)
        assert verdict.violation.parameter == "beta"

    def test_pendant_triangles_hubs_versus_pendants(self):
        g = pendant_triangles(5)
        p = Partition(blocks=[list(range(5)), list(range(5, g.n))])
        assert verify_fat(g, p, Fraction(1, 2), Fraction(1, 2)).accepted

    def test_crown_pairs_reject_equal_parameters(self):
        # x_1 has no neighbor in its own pair, but beta asks for one of its four
        g = crown(5)
        p = Partition(blocks=[[i, 5 + i] for i in range(5)])
        verdict = verify_fat(g, p, Fraction(1, 4), Fraction(1, 4))
        assert not verdict.accepted
        violation = verdict.violation
        assert (violation.vertex, violation.block, violation.observed_count) == (0, 0, 0)
        assert violation.parameter == "beta"
        assert violation.required == Fraction(1, 4)

    @given(st.fractions(0, 1), st.fractions(0, 1))
    def test_edgeless_accepts_any_parameters(self, alpha, beta):
        g = edgeless(3)
        assert verify_fat(g, Partition(blocks=[[0], [1], [2]]), alpha, beta).accepted

    def test_parameters_outside_unit_interval(self, triangle):
        with pytest.raises(ValueError, match="outside"):
            verify_fat(triangle, Partition(blocks=[[0, 1, 2]]), Fraction(-1), Fraction(1))

    def test_invalid_partition_raises(self, triangle):
        with pytest.raises(PartitionError):
            verify_fat(triangle, Partition(blocks=[[0, 1]]), Fraction(0), Fraction(1))

    def test_component_coloring_verifies(self, two_triangles):
        witness = component_coloring(two_triangles)
        assert witness.blocks == [[0, 1, 2], [3, 4, 5]]
        assert verify_witness(two_triangles, witness).accepted

    @settings(max_examples=100)
    @given(st.lists(st.integers(0, 2), min_size=6, max_size=6))
    def test_block_order_does_not_matter(self, labels):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
        p = Partition.from_labels(labels)
        shuffled = Partition(blocks=[list(reversed(block)) for block in reversed(p.blocks)])
        first = infer_fat_parameters(g, p)
        second = infer_fat_parameters(g, shuffled)
        assert first.accepted == second.accepted
        if first.accepted:
            assert first.witness == second.witness


@st.composite
def graphs_with_partitions(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs)))
    labels = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    p = Partition.from_labels(labels)
    shuffled = draw(st.permutations(p.blocks))
    return Graph.from_edges(n, edges), p, Partition(blocks=[list(reversed(block)) for block in shuffled])


@settings(max_examples=200)
@given(graphs_with_partitions())
def test_inferred_parameters_verify_on_any_block_order(case):
    g, p, shuffled = case
    outcome = infer_fat_parameters(g, p)
    if outcome.accepted:
        assert verify_fat(g, shuffled, outcome.witness.alpha, outcome.witness.beta).accepted


@settings(max_examples=200)
@given(graphs_with_partitions(), st.fractions(0, 1), st.fractions(0, 1))
def test_verify_ignores_block_order(case, alpha, beta):
    g, p, shuffled = case
    assert verify_fat(g, p, alpha, beta) == verify_fat(g, shuffled, alpha, beta)


class TestProperColoring:
    def test_detects_monochromatic_edge(self, triangle):
        assert is_proper_coloring(triangle, [0, 1, 2])
        assert not is_proper_coloring(triangle, [0, 1, 1])
        assert not is_proper_coloring(triangle, [0, 1])


class TestColoringFiles:
    def test_labels_become_canonical_blocks(self):
        text = "# crown pairs\n3 b\n0 a\n1 b\n\n2 a\n"
        assert parse_coloring(text, 4).blocks == [[0, 2], [1, 3]]

    def test_uncolored_vertex(self):
        with pytest.raises(PartitionError, match="uncolored"):
            parse_coloring("0 a\n", 2)

    @pytest.mark.parametrize("text", ["0\n", "x a\n", "5 a\n", "0 a\n0 b\n"])
    def test_malformed_lines(self, text):
        with pytest.raises(GraphFormatError):
            parse_coloring(text, 2)

    def test_format_is_inverse(self):
        witness = FatWitness(k=2, blocks=[[0, 2], [1, 3]], alpha=1, beta=0)
        text = format_coloring(witness)
        assert text == "0 0\n1 1\n2 0\n3 1\n"
        assert parse_coloring(text, 4).blocks == witness.blocks
