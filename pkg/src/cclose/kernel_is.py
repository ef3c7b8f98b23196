"""Independent Set kernelization: the degree rule and its c*k^2 kernel."""

from __future__ import annotations

from .closure import is_c_closed
from .graph import Graph
from .instances import Decided, Instance, KernelOutcome, Problem, Reduced, RuleRecord, Witness


def kernelize_is(inst: Instance, c: int) -> KernelOutcome:
    """Strip high-degree vertices, then either answer outright or shrink.

    A vertex of degree at least (c-1)(k-1)+1 can always be swapped out of a
    solution, so it is removed (smallest id first, for determinism). Once the
    maximum degree falls below the threshold, a graph on (threshold)*k
    vertices is greedily Yes; otherwise the residual has at most c*k^2
    vertices.
    """
    if inst.problem is not Problem.IS:
        raise ValueError(f"expected an IS instance, got {inst.problem}")
    if not is_c_closed(inst.graph, c):
        raise ValueError("graph is not c-closed")
    k = inst.k
    if k == 0:
        return Decided(True, Witness.vertex_set((), Problem.IS))
    g = inst.graph
    threshold = (c - 1) * (k - 1) + 1
    trace: list[RuleRecord] = []
    while True:
        target = next((v for v in g.vertex_ids if g.degree(v) >= threshold), None)
        if target is None:
            break
        g = g.without_vertex(target)
        trace.append(
            RuleRecord(rule="RR1", vertices_removed=(target,), payload={"degree_threshold": threshold})
        )
    if g.n >= threshold * k:
        return Decided(True, Witness.vertex_set(_greedy_low_degree_is(g, k), Problem.IS))
    reduced = Instance(problem=Problem.IS, graph=g, k=k, declared_closure=c)
    assert g.n <= c * k * k, "kernel exceeds the c*k^2 bound"
    return Reduced(reduced, tuple(trace))


def _greedy_low_degree_is(g: Graph, k: int) -> list[int]:
    """k independent vertices by repeated minimum-degree picks.

    Sound whenever n >= (max_degree + 1) * k: each pick deletes a closed
    neighborhood of at most max_degree + 1 vertices.
    """
    chosen: list[int] = []
    while len(chosen) < k:
        v = min(g.vertex_ids, key=lambda u: (g.degree(u), u))
        chosen.append(v)
        g = g.without_vertices(g.closed_neighborhood(v))
    return chosen
