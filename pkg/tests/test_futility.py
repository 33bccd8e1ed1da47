"""The three futility routes, the counting bounds, and the transitive case."""

import pytest
from hypothesis import given, settings

from orbgraph.futility import (
    SHAPE_BIPARTITE,
    SHAPE_COMPLETE,
    SHAPE_NONE,
    arc_count_bounds,
    find_arc_violation,
    futility_by_stabilizer_transitivity,
    is_futile_fast,
    is_futile_oracle,
    is_futile_structural,
    transitive_group_futility,
    verdict_record,
)
from orbgraph.orbital import build_orbital_graph, enumerate_base_pairs
from orbgraph.perm import PermGroup, partition_stabilizer_generators

from support import all_elements, base_pairs_of, brute_futile, group_from, groups_st


class TestFast:
    def test_single_arc_is_futile(self, two_swaps):
        assert is_futile_fast(two_swaps, 1, 7)

    def test_complete_bipartite_between_orbits(self, two_swaps):
        assert is_futile_fast(two_swaps, 1, 3)

    def test_two_triangles_not_futile(self, two_triangles):
        assert not is_futile_fast(two_triangles, 1, 2)

    def test_symmetric_group_always_futile(self):
        group = PermGroup.symmetric(5)
        for pair in base_pairs_of(group):
            assert is_futile_fast(group, *pair)

    def test_matches_definitional_brute_force(self, two_swaps, two_triangles,
                                              square_symmetries, diagonal_triangles):
        for group in (two_swaps, two_triangles, square_symmetries, diagonal_triangles):
            for pair in enumerate_base_pairs(group):
                g = build_orbital_graph(group, *pair)
                assert is_futile_fast(group, *pair) == brute_futile(g, group)


class TestStructural:
    def test_two_triangles_verdict(self, two_triangles):
        g = build_orbital_graph(two_triangles, 1, 2)
        v = is_futile_structural(g, two_triangles)
        assert not v.futile
        assert v.shape == SHAPE_NONE
        assert v.component is None
        perm, arc = v.witness
        # the witness really does break the graph and really does stabilize
        # the orbit partition
        x, y = arc
        assert arc in g.arc_set
        assert (perm.apply(x), perm.apply(y)) not in g.arc_set
        gens = partition_stabilizer_generators(two_triangles.orbit_partition())
        assert perm in PermGroup(9, gens)

    def test_single_arc_shape(self, two_swaps):
        g = build_orbital_graph(two_swaps, 1, 7)
        v = is_futile_structural(g, two_swaps)
        assert v.futile and v.shape == SHAPE_BIPARTITE
        assert v.component == (1, 7)
        assert v.witness is None

    def test_bipartite_shape(self, two_swaps):
        g = build_orbital_graph(two_swaps, 3, 4)
        v = is_futile_structural(g, two_swaps)
        assert v.futile and v.shape == SHAPE_BIPARTITE
        assert v.component == (2, 3, 4, 6)

    def test_complete_shape(self):
        group = PermGroup.symmetric(4)
        v = is_futile_structural(build_orbital_graph(group, 1, 2), group)
        assert v.futile and v.shape == SHAPE_COMPLETE
        assert v.component == (1, 2, 3, 4)

    def test_eight_arc_graph_not_futile(self, square_symmetries):
        g = build_orbital_graph(square_symmetries, 1, 2)
        v = is_futile_structural(g, square_symmetries)
        assert not v.futile
        assert v.witness is not None

    def test_witness_is_deterministic(self, two_triangles):
        g = build_orbital_graph(two_triangles, 1, 2)
        v1 = is_futile_structural(g, two_triangles)
        v2 = is_futile_structural(g, two_triangles)
        assert v1.witness == v2.witness
        perm, arc = v1.witness
        assert perm.cycle_string() == "(3,4)"
        assert arc == (1, 3)

    def test_degree_mismatch(self, two_swaps, two_triangles):
        g = build_orbital_graph(two_swaps, 1, 7)
        with pytest.raises(ValueError):
            is_futile_structural(g, two_triangles)

    def test_self_paired_futile_graphs_are_complete(self, corpus_sample):
        from orbgraph.orbital import is_self_paired

        for group in corpus_sample:
            for pair in enumerate_base_pairs(group):
                g = build_orbital_graph(group, *pair)
                v = is_futile_structural(g, group)
                if v.futile:
                    expected = SHAPE_COMPLETE if is_self_paired(g) else SHAPE_BIPARTITE
                    assert v.shape == expected


class TestOracle:
    def test_examples(self, two_swaps, two_triangles):
        assert is_futile_oracle(build_orbital_graph(two_swaps, 1, 7), two_swaps)
        assert not is_futile_oracle(
            build_orbital_graph(two_triangles, 1, 2), two_triangles
        )

    def test_matches_full_element_enumeration(self, two_swaps, two_triangles,
                                              square_symmetries, diagonal_triangles):
        for group in (two_swaps, two_triangles, square_symmetries, diagonal_triangles):
            for pair in enumerate_base_pairs(group):
                g = build_orbital_graph(group, *pair)
                assert is_futile_oracle(g, group) == brute_futile(g, group)

    def test_generators_of_the_group_never_violate(self, two_triangles):
        g = build_orbital_graph(two_triangles, 1, 2)
        assert find_arc_violation(g, two_triangles.generators) is None


class TestStabilizerTransitivity:
    def test_cross_orbit_examples(self, two_swaps, diagonal_triangles):
        assert futility_by_stabilizer_transitivity(two_swaps, 1, 3)
        assert not futility_by_stabilizer_transitivity(diagonal_triangles, 1, 4)

    def test_fixed_points_pair(self, two_swaps):
        assert futility_by_stabilizer_transitivity(two_swaps, 1, 7)

    def test_requires_beta_outside_alpha_orbit(self, two_triangles):
        with pytest.raises(ValueError, match="orbit"):
            futility_by_stabilizer_transitivity(two_triangles, 1, 2)

    def test_agrees_with_fast_test_across_orbits(self, corpus_sample):
        for group in corpus_sample:
            for alpha, beta in base_pairs_of(group):
                if beta in group.orbit(alpha):
                    continue
                assert futility_by_stabilizer_transitivity(
                    group, alpha, beta
                ) == is_futile_fast(group, alpha, beta)


class TestArcCountBounds:
    def test_within_orbit_threshold_met_exactly(self, square_symmetries):
        bounds = arc_count_bounds(square_symmetries, 1, 2)
        assert bounds.threshold == 8
        assert not bounds.exceeds
        assert len(build_orbital_graph(square_symmetries, 1, 2).arcs) == 8

    def test_cross_orbit_threshold_met_exactly(self, diagonal_triangles):
        bounds = arc_count_bounds(diagonal_triangles, 1, 4)
        assert bounds.threshold == 6
        assert not bounds.exceeds
        assert len(build_orbital_graph(diagonal_triangles, 1, 4).arcs) == 6

    def test_complete_graph_exceeds(self):
        bounds = arc_count_bounds(PermGroup.symmetric(4), 1, 2)
        assert bounds.threshold == 8
        assert bounds.exceeds

    def test_exceeding_implies_futile(self, corpus_sample):
        # the guaranteed direction; futile orbital graphs carry exactly
        # n(n-1) or n*m arcs, so in practice they exceed as well, but only
        # exceeds -> futile is promised
        exceeding = not_exceeding = 0
        for group in corpus_sample:
            for pair in enumerate_base_pairs(group):
                bounds = arc_count_bounds(group, *pair)
                if bounds.exceeds:
                    assert is_futile_fast(group, *pair)
                    exceeding += 1
                else:
                    not_exceeding += 1
        assert exceeding > 0 and not_exceeding > 0


class TestTransitiveGroups:
    def test_two_transitive_is_futile(self):
        assert transitive_group_futility(PermGroup.symmetric(4))

    def test_transitive_but_not_two_transitive(self, square_symmetries):
        assert not transitive_group_futility(square_symmetries)
        cyclic = group_from(4, "(1,2,3,4)")
        assert not transitive_group_futility(cyclic)

    def test_intransitive_group_is_an_error(self, two_swaps):
        with pytest.raises(ValueError, match="transitive"):
            transitive_group_futility(two_swaps)

    def test_verdict_is_uniform_over_base_pairs(self, square_symmetries):
        expected = transitive_group_futility(square_symmetries)
        for pair in base_pairs_of(square_symmetries):
            g = build_orbital_graph(square_symmetries, *pair)
            assert is_futile_oracle(g, square_symmetries) == expected


class TestVerdictRecord:
    def test_fast_record(self, two_swaps):
        rec = verdict_record(two_swaps, 1, 7, "fast")
        assert rec == {
            "base_pair": [1, 7],
            "futile": True,
            "shape": "complete-bipartite",
            "method": "fast",
            "witness": None,
            "arc_count": 1,
            "thresholds": {"threshold": 0, "exceeds": True},
        }

    def test_structural_record_carries_witness(self, two_triangles):
        rec = verdict_record(two_triangles, 1, 2, "structural")
        assert rec["futile"] is False
        assert rec["shape"] == "not-futile"
        assert rec["witness"] == {
            "permutation_cycles": "(3,4)",
            "violated_arc": [1, 3],
        }
        assert rec["arc_count"] == 12

    def test_oracle_record_shape_from_self_pairing(self, two_swaps):
        rec = verdict_record(two_swaps, 1, 3, "oracle")
        assert rec["futile"] is True
        assert rec["shape"] == "complete-bipartite"
        assert rec["witness"] is None

    def test_unknown_method(self, two_swaps):
        with pytest.raises(ValueError, match="method"):
            verdict_record(two_swaps, 1, 7, "guess")


@given(groups_st(min_degree=3, max_degree=6))
@settings(max_examples=40, deadline=None)
def test_three_routes_agree(group):
    for alpha, beta in base_pairs_of(group):
        g = build_orbital_graph(group, alpha, beta)
        fast = is_futile_fast(group, alpha, beta)
        structural = is_futile_structural(g, group)
        oracle = is_futile_oracle(g, group)
        assert fast == structural.futile == oracle


@given(groups_st(min_degree=3, max_degree=5))
@settings(max_examples=25, deadline=None)
def test_oracle_generator_check_equals_full_element_check(group):
    for pair in enumerate_base_pairs(group):
        g = build_orbital_graph(group, *pair)
        assert is_futile_oracle(g, group) == brute_futile(g, group)
