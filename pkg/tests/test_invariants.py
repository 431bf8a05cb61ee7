import pytest
from hypothesis import given, settings

from cdcrit import (
    CapacityError,
    InvariantRecord,
    clique_number,
    complement,
    complete,
    compute_invariants,
    cycle,
    empty_graph,
    gen_g1,
    gen_g3,
    independence_number,
    is_clique,
    is_independent_set,
    join,
    min_degree,
    minimum_cut_sets,
    path,
    vertex_connectivity,
)
from oracles import adjacency_sets, graphs, oracle_alpha, oracle_kappa, set_connected


class TestIndependenceNumber:
    def test_odd_cycle(self):
        assert independence_number(cycle(5))[0] == 2

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_complete(self, n):
        assert independence_number(complete(n))[0] == 1

    def test_family_three(self):
        assert independence_number(gen_g3(3))[0] == 3

    @given(graphs(max_n=10))
    @settings(max_examples=120, deadline=None)
    def test_matches_subset_brute_force(self, g):
        value, witness = independence_number(g)
        assert value == oracle_alpha(g)
        assert is_independent_set(g, witness) and len(witness) == value

    @given(graphs(min_n=1, max_n=12))
    @settings(max_examples=120, deadline=None)
    def test_alpha_is_omega_of_complement(self, g):
        assert independence_number(g)[0] == clique_number(complement(g))[0]

    def test_witness_is_lexicographically_smallest(self):
        # Both {0, 2} and {0, 3} are maximum in a 5-cycle; {0, 2} sorts first.
        assert sorted(independence_number(cycle(5))[1]) == [0, 2]


class TestCliqueNumber:
    def test_cycle(self):
        assert clique_number(cycle(5))[0] == 2

    def test_join_of_cliques(self):
        assert clique_number(join(complete(2), complete(2)))[0] == 4

    def test_family_one(self):
        value, witness = clique_number(gen_g1(3))
        assert value == 3
        assert is_clique(gen_g1(3), witness)

    @given(graphs(max_n=10))
    @settings(max_examples=100, deadline=None)
    def test_witness_passes_predicate(self, g):
        value, witness = clique_number(g)
        assert is_clique(g, witness) and len(witness) == value


class TestVertexConnectivity:
    def test_cycle(self):
        assert vertex_connectivity(cycle(5))[0] == 2

    def test_complete_convention(self):
        assert vertex_connectivity(complete(4)) == (3, None)

    def test_single_vertex(self):
        assert vertex_connectivity(complete(1)) == (0, None)

    def test_family_three(self):
        assert vertex_connectivity(gen_g3(3))[0] == 6

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            vertex_connectivity(empty_graph(0))

    def test_disconnected_is_zero(self):
        assert vertex_connectivity(empty_graph(2)) == (0, frozenset())

    @given(graphs(min_n=2, max_n=8))
    @settings(max_examples=120, deadline=None)
    def test_matches_brute_force(self, g):
        value, witness = vertex_connectivity(g)
        assert value == oracle_kappa(g)
        if witness is not None and g.n > len(witness):
            remaining = set(range(g.n)) - set(witness)
            assert not set_connected(adjacency_sets(g), remaining) or not remaining

    @given(graphs(min_n=2, max_n=9))
    @settings(max_examples=100, deadline=None)
    def test_never_exceeds_min_degree(self, g):
        assert vertex_connectivity(g)[0] <= min_degree(g)


class TestMinimumCutSets:
    def test_path_middle_vertex(self):
        assert minimum_cut_sets(path(3)) == [frozenset({1})]

    def test_four_cycle_antipodal_pairs(self):
        assert minimum_cut_sets(cycle(4)) == [frozenset({0, 2}), frozenset({1, 3})]

    def test_five_cycle_non_adjacent_pairs(self):
        cuts = minimum_cut_sets(cycle(5))
        assert cuts == [
            frozenset(p) for p in [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        ]

    def test_complete_rejected(self):
        with pytest.raises(ValueError):
            minimum_cut_sets(complete(4))

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            minimum_cut_sets(empty_graph(3))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            minimum_cut_sets(cycle(17))

    @given(graphs(min_n=2, max_n=7, connected=True))
    @settings(max_examples=60, deadline=None)
    def test_every_cut_disconnects_and_is_minimum(self, g):
        from cdcrit import is_connected

        if vertex_connectivity(g)[0] == g.n - 1:
            return  # complete
        kappa = vertex_connectivity(g)[0]
        cuts = minimum_cut_sets(g)
        assert cuts
        adj = adjacency_sets(g)
        for cut in cuts:
            assert len(cut) == kappa
            assert not set_connected(adj, set(range(g.n)) - cut)


class TestInvariantRecord:
    def test_family_three_record(self):
        record = compute_invariants(gen_g3(3))
        assert (record.n, record.delta, record.alpha, record.omega) == (12, 7, 3, 4)
        assert (record.kappa, record.gamma_c, record.gamma_t) == (6, 3, 3)

    def test_disconnected_has_undefined_gamma_c(self):
        record = compute_invariants(empty_graph(2))
        assert record.gamma_c is None and record.gamma_t is None

    def test_record_validation(self):
        with pytest.raises(ValueError):
            InvariantRecord(n=3, delta=1, alpha=2, omega=2, kappa=2, gamma_c=1, gamma_t=2)
        with pytest.raises(ValueError):
            InvariantRecord(n=3, delta=2, alpha=1, omega=3, kappa=2, gamma_c=5, gamma_t=2)

    def test_json_dict(self):
        payload = compute_invariants(cycle(5)).to_json_dict()
        assert payload == {
            "n": 5, "delta": 2, "alpha": 2, "omega": 2,
            "kappa": 2, "gamma_c": 3, "gamma_t": 3,
        }
