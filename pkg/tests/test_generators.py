import pytest

from cdcrit import (
    CapacityError,
    G2Params,
    are_isomorphic,
    complement,
    complete,
    compute_invariants,
    cycle,
    empty_graph,
    enumerate_graphs,
    gen_g1,
    gen_g2,
    gen_g3,
    gen_lemma_c1,
    is_clique,
    is_in_class_g1,
    is_independent_set,
    is_k_gc_edge_critical,
    is_maximal_k_gc_vertex_critical,
    path,
)


class TestStandardGraphs:
    def test_cycle(self):
        assert cycle(5).edge_count() == 5
        assert all(cycle(5).degree(v) == 2 for v in range(5))

    def test_cycle_too_small(self):
        with pytest.raises(ValueError):
            cycle(2)

    def test_path_two_is_k2(self):
        assert path(2) == complete(2)

    def test_complete_one(self):
        assert complete(1).n == 1 and complete(1).edge_count() == 0


class TestFamilyOne:
    def test_l2_is_five_cycle(self):
        assert are_isomorphic(gen_g1(2), cycle(5))

    def test_l3_edge_count(self):
        g = gen_g1(3)
        # apex edges + matched bipartite block + clique: l + l(l-1) + l(l-1)/2
        assert g.n == 7 and g.edge_count() == 12

    @pytest.mark.parametrize("l", [2, 3, 4, 5])
    def test_all_four_invariants_equal_parameter(self, l):
        record = compute_invariants(gen_g1(l))
        assert record.alpha == record.omega == record.kappa == record.delta == l
        assert record.alpha + record.omega == record.n - 1

    @pytest.mark.parametrize("l", range(2, 11))
    def test_membership_round_trip(self, l):
        assert is_in_class_g1(gen_g1(l)) == (True, l)

    def test_non_members(self):
        assert is_in_class_g1(complete(5)) == (False, None)
        assert is_in_class_g1(cycle(7)) == (False, None)
        assert is_in_class_g1(path(5)) == (False, None)

    def test_c5_is_member(self):
        assert is_in_class_g1(cycle(5)) == (True, 2)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            gen_g1(1)
        with pytest.raises(CapacityError):
            gen_g1(32)


class TestFamilyTwo:
    def test_minimal_alpha3(self):
        g = gen_g2(G2Params(alpha=3, w_sizes=(0, 1, 1)))
        record = compute_invariants(g)
        assert record.n == 6
        assert record.alpha == 3 and record.omega == 3
        assert record.alpha + record.omega == record.n

    def test_alpha3_with_w0(self):
        g = gen_g2(G2Params(alpha=3, w_sizes=(1, 1, 1)))
        assert g.n == 7
        assert is_k_gc_edge_critical(g, 3)[0]

    def test_alpha_must_be_at_least_3(self):
        with pytest.raises(ValueError):
            G2Params(alpha=2, w_sizes=(0, 1))

    def test_block_size_validation(self):
        with pytest.raises(ValueError):
            G2Params(alpha=3, w_sizes=(0, 0, 1))
        with pytest.raises(ValueError):
            G2Params(alpha=3, w_sizes=(0, 1))

    @pytest.mark.parametrize(
        "params",
        [
            G2Params(alpha=3, w_sizes=(0, 1, 1)),
            G2Params(alpha=3, w_sizes=(1, 1, 1)),
            G2Params(alpha=3, w_sizes=(0, 2, 1)),
            G2Params(alpha=4, w_sizes=(0, 1, 1, 1)),
            G2Params(alpha=4, w_sizes=(2, 1, 1, 2)),
        ],
    )
    def test_extremal_and_edge_critical(self, params):
        g = gen_g2(params)
        assert g.n == params.n <= 12
        record = compute_invariants(g)
        assert record.alpha + record.omega == record.n
        assert record.alpha == params.alpha
        assert is_k_gc_edge_critical(g, 3)[0]


class TestFamilyThree:
    def test_regular_blocks(self):
        s = 3
        g = gen_g3(s)
        assert g.n == 4 * s
        assert all(g.degree(v) == 3 * s - 2 for v in range(g.n))
        r = set(range(s))
        t = set(range(s, 2 * s))
        w = set(range(2 * s, 3 * s))
        z = set(range(3 * s, 4 * s))
        assert is_clique(g, r) and is_clique(g, z)
        assert is_independent_set(g, t) and is_independent_set(g, w)

    def test_s4_blocks(self):
        g = gen_g3(4)
        assert g.n == 16 and all(g.degree(v) == 10 for v in range(16))
        assert is_independent_set(g, set(range(4, 8)))
        assert is_clique(g, set(range(12, 16)))

    def test_neighborhoods_match_construction(self):
        s = 3
        g = gen_g3(s)
        for i in range(s):
            r_i, t_i, w_i, z_i = i, s + i, 2 * s + i, 3 * s + i
            assert g.neighbors(r_i) == (
                set(range(3 * s)) - {r_i, t_i}
            )
            assert g.neighbors(t_i) == (
                set(range(s)) | set(range(2 * s, 4 * s))
            ) - {w_i, r_i}
            assert g.neighbors(w_i) == (
                set(range(2 * s)) | set(range(3 * s, 4 * s))
            ) - {t_i, z_i}
            assert g.neighbors(z_i) == (
                set(range(s, 4 * s)) - {z_i, w_i}
            )

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            gen_g3(2)
        with pytest.raises(CapacityError):
            gen_g3(17)


class TestSeededConstruction:
    def test_k1_gives_five_cycle(self):
        assert are_isomorphic(gen_lemma_c1(complete(1)), cycle(5))

    def test_sizes(self):
        assert gen_lemma_c1(path(3)).n == 9
        assert gen_lemma_c1(empty_graph(2)).n == 7

    def test_empty_seed_rejected(self):
        with pytest.raises(ValueError):
            gen_lemma_c1(empty_graph(0))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            gen_lemma_c1(empty_graph(31))

    def test_every_small_seed_yields_critical_graph(self):
        seeds = []
        for m in range(1, 5):
            seeds.extend(enumerate_graphs(m))
        assert len(seeds) == 18
        for h in seeds:
            g = gen_lemma_c1(h)
            assert is_maximal_k_gc_vertex_critical(g, 3)[0], h


class TestIsomorphism:
    def test_five_cycle_self_complementary(self):
        assert are_isomorphic(cycle(5), complement(cycle(5)))

    def test_path_vs_cycle(self):
        assert not are_isomorphic(path(4), cycle(4))

    def test_different_sizes(self):
        assert not are_isomorphic(path(3), path(4))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            are_isomorphic(empty_graph(13), empty_graph(13))

    def test_regular_non_isomorphic_pair(self):
        # Both 2-regular on 6 vertices: one hexagon versus two triangles.
        from cdcrit import Graph

        two_triangles = Graph.from_edges(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )
        assert not are_isomorphic(two_triangles, cycle(6))

    def test_permuted_copies_match(self):
        from cdcrit import Graph

        g = gen_g1(3)
        perm = [3, 5, 0, 6, 1, 4, 2]
        relabeled = Graph.from_edges(
            g.n, [(perm[u], perm[v]) for u, v in g.edges()]
        )
        assert are_isomorphic(g, relabeled)
