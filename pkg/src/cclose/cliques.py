"""Maximal-clique enumeration (Bron-Kerbosch with pivoting)."""

from __future__ import annotations

from itertools import combinations

from .closure import compute_closure
from .graph import Graph


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each sorted, in sorted order.

    Pivoting on a maximum-degree candidate keeps the recursion small; the
    output is canonicalized so callers can rely on a deterministic order.
    """
    out: list[tuple[int, ...]] = []
    adj = {v: g.neighbors(v) for v in g.vertex_ids}

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda v: (len(adj[v] & p), -v))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    if g.n:
        expand(set(), set(g.vertex_ids), set())
    out.sort()
    return out


def cliques_of_size(g: Graph, size: int) -> list[tuple[int, ...]]:
    """All cliques with exactly ``size`` vertices, sorted.

    size 0 yields the empty clique; fine at desk scale, where size is at most
    the closure of the graph.
    """
    if size == 0:
        return [()]
    return [c for c in combinations(g.vertex_ids, size) if g.is_clique(c)]


def clique_count_bound_holds(g: Graph) -> bool:
    """Check the clique-count bound 3^((c-1)/3) * n^2 for c-closed graphs.

    Compared exactly by cubing both sides, so no floating point is involved.
    """
    count = len(maximal_cliques(g))
    c = compute_closure(g).c
    return count ** 3 <= 3 ** (c - 1) * g.n ** 6
