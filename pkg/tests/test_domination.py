import random

import pytest
from hypothesis import given, settings

from cdcrit import (
    Graph,
    add_edge,
    all_gamma_c_sets,
    complete,
    cycle,
    delete_vertex,
    dominates,
    empty_graph,
    gamma_c,
    gamma_t,
    is_connected,
    is_connected_dominating,
    join,
    non_edges,
    path,
    vertex_connectivity,
)
from oracles import graphs, oracle_gamma_c, oracle_gamma_t


class TestDominates:
    def test_cycle_neighbor_cover(self):
        assert dominates(cycle(5), {0}, {1, 4})

    def test_single_vertex_cannot_cover_cycle(self):
        assert not dominates(cycle(5), {0}, range(5))

    def test_everything_dominates_itself(self):
        g = cycle(6)
        assert dominates(g, range(6), range(6))

    def test_empty_dominates_empty(self):
        assert dominates(cycle(5), set(), set())


class TestConnectedDominating:
    def test_three_consecutive_on_cycle(self):
        assert is_connected_dominating(cycle(5), {0, 1, 2})

    def test_disconnected_pair_fails(self):
        assert not is_connected_dominating(cycle(5), {0, 2})

    def test_single_vertex_of_complete(self):
        assert is_connected_dominating(complete(5), {3})

    def test_empty_set(self):
        assert not is_connected_dominating(cycle(5), set())
        assert is_connected_dominating(empty_graph(0), set())


class TestGammaC:
    def test_five_cycle(self):
        result = gamma_c(cycle(5))
        assert result.value == 3
        assert is_connected_dominating(cycle(5), result.witness)

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_complete(self, n):
        assert gamma_c(complete(n)).value == 1

    def test_disconnected_undefined(self):
        assert gamma_c(empty_graph(3)).value is None
        assert gamma_c(Graph.from_edges(4, [(0, 1), (2, 3)])).value is None

    def test_empty_graph_undefined(self):
        assert gamma_c(empty_graph(0)).value is None

    def test_path(self):
        assert gamma_c(path(6)).value == 4

    @given(graphs(max_n=8))
    @settings(max_examples=150, deadline=None)
    def test_matches_subset_brute_force(self, g):
        result = gamma_c(g)
        assert result.value == oracle_gamma_c(g)
        if result.value is not None:
            assert is_connected_dominating(g, result.witness)
            assert len(result.witness) == result.value

    def test_exhaustive_small_connected(self, connected_upto_7):
        for g in (g for g in connected_upto_7 if g.n <= 6):
            assert gamma_c(g).value == oracle_gamma_c(g)

    def test_random_connected_sample_matches_oracle(self):
        rng = random.Random(2024)
        checked = 0
        while checked < 200:
            n = rng.randint(2, 8)
            edges = [
                (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45
            ]
            g = Graph.from_edges(n, edges)
            if not is_connected(g):
                continue
            assert gamma_c(g).value == oracle_gamma_c(g)
            checked += 1


class TestGammaT:
    def test_k2_needs_both_endpoints(self):
        assert gamma_t(complete(2)).value == 2

    def test_five_cycle(self):
        assert gamma_t(cycle(5)).value == 3

    def test_star_needs_center_plus_leaf(self):
        star = join(complete(1), empty_graph(4))
        assert gamma_t(star).value == 2

    def test_isolated_vertex_undefined(self):
        assert gamma_t(empty_graph(1)).value is None

    @given(graphs(max_n=8))
    @settings(max_examples=120, deadline=None)
    def test_matches_subset_brute_force(self, g):
        assert gamma_t(g).value == oracle_gamma_t(g)


class TestAllGammaCSets:
    def test_triangle(self):
        assert all_gamma_c_sets(complete(3)) == [
            frozenset({0}), frozenset({1}), frozenset({2}),
        ]

    def test_path_is_forced(self):
        assert all_gamma_c_sets(path(4)) == [frozenset({1, 2})]

    def test_five_cycle_has_five_optima(self):
        expected = [{0, 1, 2}, {0, 1, 4}, {0, 3, 4}, {1, 2, 3}, {2, 3, 4}]
        assert all_gamma_c_sets(cycle(5)) == [frozenset(s) for s in expected]

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            all_gamma_c_sets(empty_graph(2))

    @given(graphs(min_n=1, max_n=7, connected=True))
    @settings(max_examples=60, deadline=None)
    def test_members_are_optimal_and_sorted(self, g):
        value = gamma_c(g).value
        sets = all_gamma_c_sets(g)
        assert all(len(s) == value for s in sets)
        assert all(is_connected_dominating(g, s) for s in sets)
        assert sets == sorted(sets, key=sorted)


class TestStructuralProperties:
    @given(graphs(min_n=2, max_n=8, connected=True))
    @settings(max_examples=100, deadline=None)
    def test_adding_edges_never_raises_gamma_c(self, g):
        base = gamma_c(g).value
        for u, v in non_edges(g):
            assert gamma_c(add_edge(g, u, v)).value <= base

    @given(graphs(min_n=3, max_n=8, connected=True))
    @settings(max_examples=60, deadline=None)
    def test_vertex_deletion_keeps_gamma_c_defined_when_2_connected(self, g):
        if vertex_connectivity(g)[0] < 2:
            return
        for v in range(g.n):
            assert gamma_c(delete_vertex(g, v)).value is not None

    @given(graphs(min_n=1, max_n=8, connected=True))
    @settings(max_examples=80, deadline=None)
    def test_connected_dominating_pairs_are_total_dominating(self, g):
        result = gamma_c(g)
        if result.value is None or result.value < 2:
            return
        # Any connected dominating set with >= 2 vertices totally dominates.
        witness = result.witness
        assert all(g.neighbors(v) & witness for v in range(g.n))
