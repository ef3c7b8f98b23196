"""Shared test utilities: independent brute-force oracles, the canonical
small-graph catalog, and closure-respecting random generators.

The oracles here deliberately avoid the library's own code paths so they can
serve as ground truth.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from cclose import Graph
from cclose.instances import Bipartition


def closure_by_matrix(g: Graph) -> int:
    """Closure via an adjacency-matrix product; independent of the pair scan."""
    import numpy as np

    ids = list(g.vertex_ids)
    n = len(ids)
    if n < 2:
        return 1
    idx = {v: i for i, v in enumerate(ids)}
    adj = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        adj[idx[u], idx[v]] = adj[idx[v], idx[u]] = 1
    common = adj @ adj
    nonadjacent = (adj == 0) & ~np.eye(n, dtype=bool)
    upper = np.triu(nonadjacent)
    if not upper.any():
        return 1
    return int(common[upper].max()) + 1


@lru_cache(maxsize=1)
def atlas_graphs() -> tuple[Graph, ...]:
    """All 1253 graphs on up to seven vertices, from the networkx atlas."""
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for nxg in graph_atlas_g():
        out.append(Graph(range(nxg.number_of_nodes()), [tuple(e) for e in nxg.edges()]))
    return tuple(out)


def brute_max_matching(g: Graph) -> int:
    """Exponential branch on the smallest live vertex; fine for n <= 12."""
    neighbors = {v: frozenset(g.neighbors(v)) for v in g.vertex_ids}

    @lru_cache(maxsize=None)
    def rec(avail: frozenset) -> int:
        live = [v for v in sorted(avail) if neighbors[v] & avail]
        if not live:
            return 0
        v = live[0]
        best = rec(avail - {v})
        for w in sorted(neighbors[v] & avail):
            best = max(best, 1 + rec(avail - {v, w}))
        return best

    result = rec(frozenset(g.vertex_ids))
    rec.cache_clear()
    return result


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Subset enumeration; fine for n <= 14."""
    ids = list(g.vertex_ids)
    cliques = [
        combo
        for size in range(1, len(ids) + 1)
        for combo in combinations(ids, size)
        if g.is_clique(combo)
    ]
    out = []
    for clique in cliques:
        cs = set(clique)
        extendable = any(
            cs <= g.neighbors(v) for v in ids if v not in cs
        )
        if not extendable:
            out.append(tuple(sorted(clique)))
    if not ids:
        return []
    out.sort()
    return out


def brute_hitting_set(universe, sets, k_max=None) -> int | None:
    """Minimum hitting-set size by ascending subset scan (None if > k_max)."""
    ground = sorted(universe)
    limit = len(ground) if k_max is None else min(k_max, len(ground))
    for size in range(limit + 1):
        for combo in combinations(ground, size):
            chosen = set(combo)
            if all(chosen & s for s in sets):
                return size
    return None


def edge_keeps_closure(g: Graph, u: int, v: int, c: int) -> bool:
    """Would adding edge uv keep a c-closed graph c-closed?

    Only pairs (u, w) with w adjacent to v and (v, w) with w adjacent to u
    gain a common neighbor, so checking those suffices.
    """
    for a, b in ((u, v), (v, u)):
        for w in g.neighbors(b):
            if w == a or g.has_edge(a, w):
                continue
            if len(g.neighbors(a) & g.neighbors(w)) + 1 >= c:
                return False
    return True


def random_c_closed_graph(
    n: int,
    c: int,
    p: float,
    seed: int,
    base_edges=(),
    forbidden_pairs=frozenset(),
) -> Graph:
    """Random graph kept c-closed by rejecting closure-breaking edges.

    ``base_edges`` are installed first (they must themselves be safe);
    ``forbidden_pairs`` are never added, which lets callers plant independent
    sets.
    """
    rng = random.Random(seed)
    g = Graph(range(n), base_edges)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    rng.shuffle(pairs)
    for u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in forbidden_pairs or rng.random() >= p:
            continue
        if edge_keeps_closure(g, u, v, c):
            g = g.with_edge(u, v)
    return g


def random_c_closed_bipartite(
    nl: int, nr: int, c: int, p: float, seed: int, base_edges=()
) -> tuple[Graph, Bipartition]:
    """Random bipartite graph with all same-side co-degrees below c."""
    rng = random.Random(seed)
    left = list(range(nl))
    right = list(range(nl, nl + nr))
    g = Graph(range(nl + nr), base_edges)
    pairs = [(u, v) for u in left for v in right if not g.has_edge(u, v)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() < p and edge_keeps_closure(g, u, v, c):
            g = g.with_edge(u, v)
    return g, Bipartition(frozenset(left))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(range(n), edges)
