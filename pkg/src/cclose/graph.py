"""Simple undirected graphs with stable vertex identifiers."""

from __future__ import annotations

from collections.abc import Iterable


class Graph:
    """An immutable simple undirected graph.

    Vertex identifiers are non-negative integers and stay stable across
    deletions: removing a vertex never renumbers the others, so rule traces
    and witnesses remain valid references. Every mutating operation returns
    a new graph; values can therefore be shared freely between threads.
    """

    __slots__ = ("_adj",)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            adj.setdefault(v, set())
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) references an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = adj

    # -- construction helpers ------------------------------------------------

    @classmethod
    def _from_adj(cls, adj: dict[int, set[int]]) -> "Graph":
        g = cls.__new__(cls)
        g._adj = adj
        return g

    def _copy_adj(self) -> dict[int, set[int]]:
        return {v: set(nbrs) for v, nbrs in self._adj.items()}

    # -- basic queries -------------------------------------------------------

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        if v not in self._adj:
            raise ValueError(f"unknown vertex {v}")
        return frozenset(self._adj[v])

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        if v not in self._adj:
            raise ValueError(f"unknown vertex {v}")
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self._adj.values()), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs, sorted."""
        out = [(u, v) for u in self._adj for v in self._adj[u] if u < v]
        out.sort()
        return out

    def isolated_vertices(self) -> list[int]:
        return sorted(v for v, nbrs in self._adj.items() if not nbrs)

    def fresh_id(self) -> int:
        """Smallest integer larger than every existing vertex id."""
        return max(self._adj, default=-1) + 1

    # -- predicates ----------------------------------------------------------

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        for v in vs:
            if v not in self._adj:
                return False
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if v not in self._adj[u]:
                    return False
        return True

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        for v in vs:
            if v not in self._adj:
                return False
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if v in self._adj[u]:
                    return False
        return True

    # -- value-style mutations -----------------------------------------------

    def with_vertex(self, v: int) -> "Graph":
        if v in self._adj:
            raise ValueError(f"vertex {v} already present")
        adj = self._copy_adj()
        adj[v] = set()
        return Graph._from_adj(adj)

    def with_vertices(self, vs: Iterable[int]) -> "Graph":
        adj = self._copy_adj()
        for v in vs:
            if v in adj:
                raise ValueError(f"vertex {v} already present")
            adj[v] = set()
        return Graph._from_adj(adj)

    def with_edge(self, u: int, v: int) -> "Graph":
        return self.with_edges([(u, v)])

    def with_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        adj = self._copy_adj()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) references an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        return Graph._from_adj(adj)

    def without_vertex(self, v: int) -> "Graph":
        """The graph minus ``v`` and all its incident edges."""
        if v not in self._adj:
            raise ValueError(f"unknown vertex {v}")
        return self.without_vertices([v])

    def without_vertices(self, vs: Iterable[int]) -> "Graph":
        drop = set(vs)
        for v in drop:
            if v not in self._adj:
                raise ValueError(f"unknown vertex {v}")
        adj = {v: nbrs - drop for v, nbrs in self._adj.items() if v not in drop}
        return Graph._from_adj(adj)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        for v in keep:
            if v not in self._adj:
                raise ValueError(f"unknown vertex {v}")
        adj = {v: self._adj[v] & keep for v in keep}
        return Graph._from_adj(adj)

    # -- structure -----------------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        """Connected components, sorted by smallest member."""
        seen: set[int] = set()
        comps = []
        for start in sorted(self._adj):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def two_color(self) -> frozenset[int] | None:
        """One side of a proper 2-coloring, or None if the graph is odd-cyclic.

        Within each component the side containing the smallest vertex id is
        chosen as "left", so the result is deterministic.
        """
        side: dict[int, int] = {}
        for start in sorted(self._adj):
            if start in side:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if w not in side:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return None
        return frozenset(v for v, s in side.items() if s == 0)

    def validate(self) -> None:
        """Check structural invariants (symmetry, no loops, known endpoints)."""
        for v, nbrs in self._adj.items():
            if v in nbrs:
                raise AssertionError(f"self-loop at {v}")
            for w in nbrs:
                if w not in self._adj:
                    raise AssertionError(f"dangling endpoint {w}")
                if v not in self._adj[w]:
                    raise AssertionError(f"asymmetric edge ({v}, {w})")

    # -- dunder --------------------------------------------------------------

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    vs = range(n)
    return Graph(vs, [(i, j) for i in vs for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """A star with center 0 and the given number of leaves."""
    return Graph(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])
