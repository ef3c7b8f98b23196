from hypothesis import given, settings
from hypothesis import strategies as st

from cclose import (
    Graph,
    clique_count_bound_holds,
    cliques_of_size,
    complete_graph,
    cycle_graph,
    maximal_cliques,
)

from helpers import brute_maximal_cliques, random_graph


def test_examples():
    assert maximal_cliques(complete_graph(3)) == [(0, 1, 2)]
    assert maximal_cliques(cycle_graph(4)) == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert maximal_cliques(Graph(range(3))) == [(0,), (1,), (2,)]
    assert maximal_cliques(Graph()) == []


@given(st.integers(0, 2 ** 31), st.integers(0, 10))
def test_agrees_with_brute_force(seed, n):
    g = random_graph(n, 0.5, seed)
    assert maximal_cliques(g) == brute_maximal_cliques(g)


@settings(max_examples=25)
@given(st.integers(0, 2 ** 31), st.integers(11, 14))
def test_agrees_with_brute_force_larger(seed, n):
    g = random_graph(n, 0.4, seed)
    assert maximal_cliques(g) == brute_maximal_cliques(g)


@given(st.integers(0, 2 ** 31), st.integers(1, 11))
def test_structural_invariants(seed, n):
    g = random_graph(n, 0.5, seed)
    cliques = maximal_cliques(g)
    seen = set()
    covered = set()
    for clique in cliques:
        assert g.is_clique(clique)
        assert clique not in seen
        seen.add(clique)
        covered.update(clique)
    for a in cliques:
        for b in cliques:
            if a != b:
                assert not set(a) <= set(b)
    assert covered == set(g.vertex_ids)


def test_cliques_of_size():
    k4 = complete_graph(4)
    assert cliques_of_size(k4, 0) == [()]
    assert cliques_of_size(k4, 2) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert cliques_of_size(cycle_graph(4), 3) == []


def test_bound_examples():
    assert clique_count_bound_holds(complete_graph(10))
    assert clique_count_bound_holds(cycle_graph(4))


@given(st.integers(0, 2 ** 31))
def test_bound_on_random_graphs(seed):
    assert clique_count_bound_holds(random_graph(12, 0.5, seed))
