import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cclose import (
    Bipartition,
    Decided,
    Graph,
    Instance,
    Problem,
    Reduced,
    complete_graph,
    compute_closure,
    cycle_graph,
    disjoint_cliques,
    is_c_closed,
    kernelize_im,
    kernelize_im_bipartite,
    maximal_cliques,
    oracle_im,
    path_graph,
    saturated_threshold,
    unrestricted_threshold,
    validate_witness,
    vclp_half_integral,
)
from cclose.instances import replay
from cclose.kernel_im import rr_leaf_rules, rr_lp_thresholds, rr_neighborhood_matching

from helpers import random_graph


def make(g, k):
    return Instance(problem=Problem.IM, graph=g, k=k)


class TestRuleNeighborhoodMatching:
    def test_fires_on_big_neighborhood_matching(self):
        # c=1, k=1: v sees a matching of size 2 >= 2ck
        g = Graph(range(5), [(4, 0), (4, 1), (4, 2), (4, 3), (0, 1), (2, 3)])
        record = rr_neighborhood_matching(make(g, 1), 1)
        assert record is not None and record.vertices_removed == (4,)
        post = replay(make(g, 1), record)
        assert (oracle_im(post.graph) >= 1) == (oracle_im(g) >= 1)

    def test_triangle_free_no_op(self):
        assert rr_neighborhood_matching(make(cycle_graph(5), 1), 2) is None

    def test_no_large_clique_after_exhaustion(self):
        g = complete_graph(6)
        inst = make(g, 1)
        c = 1
        while True:
            record = rr_neighborhood_matching(inst, c)
            if record is None:
                break
            inst = replay(inst, record)
        largest = max((len(cl) for cl in maximal_cliques(inst.graph)), default=0)
        assert largest <= 4 * c * inst.k


class TestLpThresholdRules:
    def test_no_op_on_desk_scale(self):
        g = random_graph(10, 0.5, 3)
        inst = make(g, 2)
        c = max(compute_closure(g).c, 2)
        p = vclp_half_integral(g)
        assert rr_lp_thresholds(inst, c, p) is None

    def test_vhalf_override_extracts_witness(self):
        # seven disjoint edges sit below the real threshold (18 at c=2, k=1)
        # but the lowered one still leaves enough matching for extraction
        b = 7
        g = Graph(range(2 * b), [(2 * i, 2 * i + 1) for i in range(b)])
        inst = make(g, 1)
        p = vclp_half_integral(g)
        assert len(p.v_half) == 2 * b
        decided = rr_lp_thresholds(inst, 2, p, require_witness=True, vhalf_threshold=2 * b)
        assert decided is not None and decided.answer
        assert validate_witness(inst, decided.witness)

    def test_vone_override_extracts_witness(self):
        # stars make V_1 the centers; crown matching feeds the saturated chain
        centers = 6
        edges = []
        nxt = centers
        for hub in range(centers):
            for _ in range(3):
                edges.append((hub, nxt))
                nxt += 1
        g = Graph(range(nxt), edges)
        inst = make(g, 1)
        p = vclp_half_integral(g)
        assert len(p.v1) == centers
        decided = rr_lp_thresholds(inst, 2, p, require_witness=True, vone_threshold=centers)
        assert decided is not None and decided.answer
        assert validate_witness(inst, decided.witness)

    def test_real_thresholds_reachable_at_k1(self):
        # c=2, k=1: V_half threshold is 3 * q2 = 18
        inst_bound = 3 * unrestricted_threshold(2, 9, 1)
        assert inst_bound == 18
        b = 9
        g = Graph(range(2 * b), [(2 * i, 2 * i + 1) for i in range(b)])
        inst = make(g, 1)
        out = kernelize_im(inst, 2)
        assert isinstance(out, Decided) and out.answer
        assert out.witness is not None and validate_witness(inst, out.witness)


class TestLeafRules:
    def test_duplicate_leaves_trimmed(self):
        # v1 = 0 with two leaves 3, 4; P_3 backbone keeps 0 in V_1
        g = Graph(range(5), [(0, 1), (0, 2), (0, 3), (0, 4)])
        inst = make(g, 1)
        p = vclp_half_integral(g)
        assert 0 in p.v1
        record = rr_leaf_rules(inst, 2, p)
        assert record is not None and record.rule == "RR13"
        assert record.vertices_removed == (2, 3, 4)[:len(record.vertices_removed)]
        post = replay(inst, record)
        assert (oracle_im(post.graph) >= 1) == (oracle_im(g) >= 1)

    def test_shadowed_vertex_gets_leaf(self):
        # v0 = 2 with N[2] inside N[1]; 1 leafless -> attach leaf
        g = Graph(range(4), [(0, 1), (1, 2), (0, 2), (1, 3), (0, 3)])
        # vclp: vertices 0,1 cover everything
        inst = make(g, 2)
        p = vclp_half_integral(g)
        record = rr_leaf_rules(inst, 3, p)
        if record is not None and record.rule == "RR14":
            post = replay(inst, record)
            assert (oracle_im(post.graph) >= 2) == (oracle_im(g) >= 2)

    def test_surrounded_zero_vertex_removed(self):
        # every neighbor of v0 has a leaf -> v0 goes
        g = Graph(range(7), [(0, 1), (0, 2), (1, 3), (2, 4), (1, 5), (2, 6)])
        # 1 and 2 carry leaves (3,5) and (4,6)... trim to one leaf each first
        g = Graph(range(5), [(0, 1), (0, 2), (1, 3), (2, 4)])
        inst = make(g, 1)
        p = vclp_half_integral(g)
        if 0 in p.v0:
            record = rr_leaf_rules(inst, 2, p)
            assert record is not None
            post = replay(inst, record)
            assert (oracle_im(post.graph) >= 1) == (oracle_im(g) >= 1)


class TestKernelizeIm:
    def test_cluster_counting(self):
        g = disjoint_cliques(3, 2)
        out = kernelize_im(make(g, 3), 1)
        assert isinstance(out, Decided) and out.answer
        assert len(out.witness.elements) == 3
        out = kernelize_im(make(g, 4), 1)
        assert out == Decided(False)

    def test_p5_yes(self):
        out = kernelize_im(make(path_graph(5), 2), 2)
        expected = oracle_im(path_graph(5)) >= 2
        answer = out.answer if isinstance(out, Decided) else (
            oracle_im(out.instance.graph) >= out.instance.k
        )
        assert answer == expected

    def test_p4_no(self):
        out = kernelize_im(make(path_graph(4), 2), 2)
        answer = out.answer if isinstance(out, Decided) else (
            oracle_im(out.instance.graph) >= out.instance.k
        )
        assert not answer

    def test_k0(self):
        out = kernelize_im(make(path_graph(3), 0), 2)
        assert isinstance(out, Decided) and out.answer

    @settings(max_examples=120)
    @given(st.integers(0, 10 ** 6), st.integers(0, 9), st.integers(0, 3))
    def test_randomized_equivalence(self, seed, n, k):
        g = random_graph(n, 0.4, seed)
        c = compute_closure(g).c
        inst = make(g, k)
        expected = oracle_im(g) >= k
        out = kernelize_im(inst, c)
        if isinstance(out, Decided):
            assert out.answer == expected
            if out.witness is not None:
                assert validate_witness(inst, out.witness)
        else:
            assert (oracle_im(out.instance.graph) >= out.instance.k) == expected
            state = inst
            for record in out.trace:
                state = replay(state, record)
                assert is_c_closed(state.graph, c)
                assert (oracle_im(state.graph) >= state.k) == expected
            assert state.graph == out.instance.graph
            p = vclp_half_integral(out.instance.graph)
            a = 4 * c * k + 1
            assert len(p.v_half) < 3 * unrestricted_threshold(c, a, k)
            assert len(p.v1) < saturated_threshold(c, a, k)
            assert len(p.v0) <= len(p.v1) + c * comb(len(p.v1), 2)


class TestOptimumIndependence:
    @settings(max_examples=40)
    @given(st.integers(0, 10 ** 6), st.integers(2, 9), st.integers(0, 3))
    def test_outcome_survives_relabeling(self, seed, n, k):
        # Relabeling flips the deterministic tie-breaks in the double-cover
        # matching, sampling a different half-integral optimum; the pipeline
        # must stay equivalent either way.
        g = random_graph(n, 0.45, seed)
        mapping = {v: n - 1 - v for v in g.vertex_ids}
        relabeled = Graph(
            [mapping[v] for v in g.vertex_ids],
            [(mapping[u], mapping[v]) for u, v in g.edges()],
        )
        c = compute_closure(g).c
        expected = oracle_im(g) >= k
        for graph in (g, relabeled):
            out = kernelize_im(Instance(problem=Problem.IM, graph=graph, k=k), c)
            answer = out.answer if isinstance(out, Decided) else (
                oracle_im(out.instance.graph) >= out.instance.k
            )
            assert answer == expected

    @given(st.integers(0, 10 ** 6), st.integers(0, 9))
    def test_lp_cost_is_relabeling_invariant(self, seed, n):
        # the split may move between optima, but the cost is canonical
        g = random_graph(n, 0.45, seed)
        mapping = {v: n - 1 - v for v in g.vertex_ids}
        relabeled = Graph(
            [mapping[v] for v in g.vertex_ids],
            [(mapping[u], mapping[v]) for u, v in g.edges()],
        )
        assert vclp_half_integral(g).lp_cost == vclp_half_integral(relabeled).lp_cost


class TestBipartiteKernels:
    def test_delta_mode_perfect_matching(self):
        k = 2
        g = Graph(range(8 * k), [(2 * i, 2 * i + 1) for i in range(4 * k)])
        parts = Bipartition(frozenset(2 * i for i in range(4 * k)))
        inst = Instance(problem=Problem.IM, graph=g, k=k, bipartition=parts)
        out = kernelize_im_bipartite(inst, parts, "delta")
        assert isinstance(out, Decided) and out.answer
        assert validate_witness(inst, out.witness)

    def test_delta_mode_below_threshold_reduces(self):
        g = Graph(range(6), [(0, 3), (0, 4), (0, 5)])
        parts = Bipartition(frozenset({0, 1, 2}))
        inst = Instance(problem=Problem.IM, graph=g, k=2, bipartition=parts)
        out = kernelize_im_bipartite(inst, parts, "delta")
        assert isinstance(out, Reduced)
        assert not out.instance.graph.isolated_vertices()

    def test_closure_mode_high_degree(self):
        # star forests are 2-closed; 2k hubs of degree c*k trip the rule
        c, k = 2, 2
        edges = []
        nxt = 2 * k
        for hub in range(2 * k):
            for _ in range(c * k):
                edges.append((hub, nxt))
                nxt += 1
        g = Graph(range(nxt), edges)
        assert compute_closure(g).c == c
        parts = Bipartition(frozenset(range(2 * k)))
        inst = Instance(problem=Problem.IM, graph=g, k=k, bipartition=parts)
        out = kernelize_im_bipartite(inst, parts, "closure", c=c)
        assert isinstance(out, Decided) and out.answer
        assert validate_witness(inst, out.witness)

    def test_invalid_mode(self):
        g = Graph(range(2), [(0, 1)])
        parts = Bipartition(frozenset({0}))
        inst = Instance(problem=Problem.IM, graph=g, k=1, bipartition=parts)
        with pytest.raises(ValueError):
            kernelize_im_bipartite(inst, parts, "bogus")

    @settings(max_examples=100)
    @given(st.integers(0, 10 ** 6), st.integers(0, 12), st.integers(0, 2))
    def test_randomized_equivalence_both_modes(self, seed, n, k):
        rng = random.Random(seed)
        left = n // 2
        g = Graph(
            range(n),
            [(u, v) for u in range(left) for v in range(left, n) if rng.random() < 0.4],
        )
        parts = Bipartition(frozenset(range(left)))
        inst = Instance(problem=Problem.IM, graph=g, k=k, bipartition=parts)
        expected = oracle_im(g) >= k
        c = compute_closure(g).c
        for mode, extra in (("delta", {}), ("closure", {"c": c})):
            out = kernelize_im_bipartite(inst, parts, mode, **extra)
            if isinstance(out, Decided):
                assert out.answer == expected
                if out.witness is not None:
                    assert validate_witness(inst, out.witness)
            else:
                assert (oracle_im(out.instance.graph) >= out.instance.k) == expected
