"""The branching solver for (Threshold) Dominating Set.

Each node recolors satisfied black vertices white, grabs a swap-stable
independent set of the blacks, and either branches on the vertices seeing
two of its members or finishes the leaf by brute force (plain Dominating Set
gets a free Yes at the leaf instead). Branching order is by vertex id, so
the reported witness is the one from the lexicographically least accepting
path.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .closure import is_c_closed
from .errors import ExtractionError
from .graph import Graph
from .instances import Coloring, Instance, Problem, RuleRecord, Witness, replay
from .kernel_ds import rr_clique
from .matching import is_two_maximal, two_maximal_independent_set
from .oracle import validate_witness


def solve_tds(g: Graph, c: int, r: int, k: int) -> tuple[bool, Witness | None]:
    """Decide whether k vertices can dominate every vertex r times.

    The clique preprocessing rule runs first (skipped at c*k <= 1, where it
    would churn); the recursion then follows the branch/brute-force scheme.
    The returned witness is validated against the original graph.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not is_c_closed(g, c):
        raise ValueError("graph is not c-closed")
    inst = Instance(problem=Problem.BW_TDS, graph=g, k=k, r=r, coloring=Coloring())
    rr2_cliques: list[tuple[int, tuple[int, ...]]] = []
    if c * k >= 2:
        while True:
            record = rr_clique(inst, c)
            if record is None:
                break
            rr2_cliques.append((record.vertices_added[0], tuple(record.payload["clique"])))
            inst = replay(inst, record)

    solution = _branch(inst, c, r, k, set(), ds_mode=False)
    if solution is None:
        return False, None
    for added, clique in reversed(rr2_cliques):
        if added in solution:
            swap = sorted(set(clique) - solution)
            if not swap:
                raise ExtractionError("no swap partner when lifting over the clique rule")
            solution.remove(added)
            solution.add(swap[0])
    witness = Witness.vertex_set(solution, Problem.TDS)
    original = Instance(problem=Problem.TDS, graph=g, k=k, r=r)
    if not validate_witness(original, witness):
        raise ExtractionError("solver witness fails validation")
    return True, witness


def solve_ds(g: Graph, c: int, k: int) -> tuple[bool, Witness | None]:
    """Dominating Set fast path: no clique preprocessing, and a leaf whose
    independent set fits the budget is an immediate Yes."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not is_c_closed(g, c):
        raise ValueError("graph is not c-closed")
    inst = Instance(problem=Problem.BW_TDS, graph=g, k=k, r=1, coloring=Coloring())
    solution = _branch(inst, c, 1, k, set(), ds_mode=True)
    if solution is None:
        return False, None
    witness = Witness.vertex_set(solution, Problem.DS)
    original = Instance(problem=Problem.DS, graph=g, k=k)
    if not validate_witness(original, witness):
        raise ExtractionError("solver witness fails validation")
    return True, witness


def _branch(
    inst: Instance, c: int, r: int, budget: int, partial: set[int], ds_mode: bool
) -> set[int] | None:
    """One node of the search tree; returns a full solution set or None."""
    g = inst.graph
    base_black = inst.black_vertices()
    unsatisfied = frozenset(
        v for v in base_black if len(g.closed_neighborhood(v) & partial) < r
    )
    if not unsatisfied:
        return set(partial)
    if budget == 0:
        return None
    independent = two_maximal_independent_set(g.induced(unsatisfied))
    assert is_two_maximal(g.induced(unsatisfied), independent)

    if len(independent) >= budget + 1:
        chosen = sorted(independent)[: budget + 1]
        pool = [
            v for v in g.vertex_ids if len(g.neighbors(v) & set(chosen)) >= 2
        ]
        if len(pool) > (c - 1) * comb(budget + 1, 2):
            raise ExtractionError(
                "branching width exceeds the (c-1)*C(k'+1,2) bound"
            )
        for v in pool:
            if v in partial:
                continue
            result = _branch(inst, c, r, budget - 1, partial | {v}, ds_mode)
            if result is not None:
                return result
        return None

    if ds_mode:
        return set(partial) | set(independent)

    # TDS leaf: prune redundant whites (never touching the partial solution),
    # then try every extension of at most `budget` vertices, smallest first.
    leaf = Instance(
        problem=Problem.BW_TDS,
        graph=g,
        k=budget,
        r=r,
        coloring=Coloring(frozenset(set(g.vertex_ids) - unsatisfied)),
    )
    while True:
        record = _rr_white_removal_avoiding(leaf, partial)
        if record is None:
            break
        leaf = replay(leaf, record)
    lg = leaf.graph
    remaining = [v for v in lg.vertex_ids if v not in partial]
    demands = leaf.black_vertices()
    for size in range(budget + 1):
        for extension in combinations(remaining, size):
            candidate = set(partial) | set(extension)
            if all(
                len(lg.closed_neighborhood(v) & candidate) >= r for v in demands
            ):
                return candidate
    return None


def _rr_white_removal_avoiding(inst: Instance, keep: set[int]) -> RuleRecord | None:
    """White-removal restricted to vertices outside the partial solution."""
    assert inst.r is not None
    g = inst.graph
    black = inst.black_vertices()
    for w in sorted(inst.white_vertices()):
        if w in keep:
            continue
        demand = g.neighbors(w) & black
        dominators = sum(
            1
            for v in g.vertex_ids
            if v != w and demand <= (g.closed_neighborhood(v) & black)
        )
        if dominators >= inst.r:
            return RuleRecord(rule="RR6", vertices_removed=(w,), payload={"white": w})
    return None
