"""Induced Matching kernelization via the vertex-cover LP.

The pipeline destroys large cliques (neighborhoods with big matchings), caps
the LP partition classes by Ramsey-type thresholds, and cleans up the
LP-zero vertices with leaf rules. The LP split is solution-dependent, so it
is recomputed after every structural change; each rule is correct for any
optimal half-integral solution, which makes refreshing safe.
"""

from __future__ import annotations

from math import comb

from .closure import is_c_closed
from .errors import ExtractionError
from .instances import (
    Bipartition,
    Decided,
    Instance,
    KernelOutcome,
    Problem,
    Reduced,
    RuleRecord,
    Witness,
    replay,
)
from .matching import Matching, VclpPartition, crown_from_vclp, max_matching_general, vclp_half_integral
from .oracle import validate_witness
from .ramsey import (
    Clique,
    clique_or_im,
    clique_or_im_saturating,
    dense_bipartite_threshold,
    im_dense_bipartite,
    im_from_high_degree,
    saturated_threshold,
    unrestricted_threshold,
)


def rr_neighborhood_matching(inst: Instance, c: int) -> RuleRecord | None:
    """RR10: drop the smallest vertex whose neighborhood holds a maximum
    matching of size at least 2*c*k."""
    g = inst.graph
    need = 2 * c * inst.k
    for v in g.vertex_ids:
        m = max_matching_general(g.induced(g.neighbors(v)))
        if len(m) >= need:
            return RuleRecord(
                rule="RR10",
                vertices_removed=(v,),
                payload={"vertex": v, "neighborhood_matching": len(m)},
            )
    return None


def rr_lp_thresholds(
    inst: Instance,
    c: int,
    p: VclpPartition,
    require_witness: bool = False,
    vhalf_threshold: int | None = None,
    vone_threshold: int | None = None,
) -> Decided | None:
    """RR11/RR12: a huge half class or one class certifies a Yes.

    The default thresholds are astronomically large for c, k >= 2; the
    override parameters exist so tests can exercise the extraction paths on
    desk-scale graphs. Witness extraction runs opportunistically and is
    mandatory under ``require_witness``.
    """
    k = inst.k
    a = 4 * c * k + 1
    half_bound = 3 * unrestricted_threshold(c, a, k) if vhalf_threshold is None else vhalf_threshold
    one_bound = saturated_threshold(c, a, k) if vone_threshold is None else vone_threshold
    if len(p.v_half) >= half_bound:
        return Decided(True, _extract_from_half(inst, c, p, require_witness))
    if len(p.v1) >= one_bound:
        return Decided(True, _extract_from_crown(inst, c, p, require_witness))
    return None


def _extract_from_half(inst: Instance, c: int, p: VclpPartition, require: bool) -> Witness | None:
    g, k = inst.graph, inst.k
    try:
        m = max_matching_general(g.induced(p.v_half))
        outcome = clique_or_im(g, c, m, 4 * c * k + 1, k)
        if isinstance(outcome, Clique):
            raise ExtractionError("clique branch fired after the matching rule")
        return _as_witness(inst, outcome)
    except (ExtractionError, ValueError):
        if require:
            raise
        return None


def _extract_from_crown(inst: Instance, c: int, p: VclpPartition, require: bool) -> Witness | None:
    g, k = inst.graph, inst.k
    try:
        crown = crown_from_vclp(g, p)
        m = crown.saturating_matching
        independent = frozenset(crown.independent & m.vertices)
        outcome = clique_or_im_saturating(g, c, independent, m, 4 * c * k + 1, k)
        if isinstance(outcome, Clique):
            raise ExtractionError("clique branch fired after the matching rule")
        return _as_witness(inst, outcome)
    except (ExtractionError, ValueError):
        if require:
            raise
        return None


def _as_witness(inst: Instance, m: Matching) -> Witness:
    w = Witness.edge_set(m.edges, Problem.IM)
    if not validate_witness(inst, w):
        raise ExtractionError("extracted induced matching fails validation")
    return w


def lift_im_witness(
    original: Instance,
    witness: Witness,
    trace: list[RuleRecord],
    require: bool,
) -> Witness | None:
    """Map a matching found mid-pipeline back to the input graph.

    Vertex removals lift for free (inducedness only concerns the matched
    endpoints); an edge using a leaf attached by the shadowing rule swaps
    back to the shadowed LP-zero vertex, exactly as in that rule's
    correctness argument.
    """
    edges = set(witness.elements)
    for record in reversed(trace):
        if record.rule != "RR14":
            continue
        leaf = record.vertices_added[0]
        anchor = record.payload["anchor"]
        shadowed = record.payload["shadowed"]
        leaf_edge = (min(leaf, anchor), max(leaf, anchor))
        if leaf_edge in edges:
            edges.remove(leaf_edge)
            edges.add((min(shadowed, anchor), max(shadowed, anchor)))
    lifted = Witness.edge_set(edges, Problem.IM)
    if not validate_witness(original, lifted):
        if require:
            raise ExtractionError("lifted induced matching fails validation")
        return None
    return lifted


def rr_leaf_rules(inst: Instance, c: int, p: VclpPartition) -> RuleRecord | None:
    """The first applicable of the three LP-zero cleanup rules.

    RR13 trims duplicate leaves of an LP-one vertex; RR14 attaches a leaf to
    an LP-one vertex that dominates an LP-zero closed neighborhood; RR15
    drops an LP-zero non-leaf all of whose neighbors carry leaves.
    """
    g = inst.graph
    for v1 in sorted(p.v1):
        leaves = sorted(u for u in g.neighbors(v1) if g.degree(u) == 1)
        if len(leaves) > 1:
            return RuleRecord(
                rule="RR13",
                vertices_removed=tuple(leaves[1:]),
                payload={"kept_leaf": leaves[0], "anchor": v1},
            )
    for v0 in sorted(p.v0):
        n0 = g.closed_neighborhood(v0)
        for v1 in sorted(p.v1):
            if v0 == v1 or not n0 <= g.closed_neighborhood(v1):
                continue
            if any(g.degree(u) == 1 for u in g.neighbors(v1)):
                continue
            leaf = g.fresh_id()
            return RuleRecord(
                rule="RR14",
                vertices_added=(leaf,),
                edges_added=((leaf, v1),),
                payload={"anchor": v1, "shadowed": v0},
            )
    for v0 in sorted(p.v0):
        if g.degree(v0) < 2:
            continue
        if all(
            any(g.degree(u) == 1 for u in g.neighbors(v1))
            for v1 in g.neighbors(v0)
        ):
            return RuleRecord(rule="RR15", vertices_removed=(v0,), payload={"vertex": v0})
    return None


def kernelize_im(inst: Instance, c: int, require_witness: bool = False) -> KernelOutcome:
    """The full pipeline; 1-closed graphs are decided outright by counting
    non-trivial clique components."""
    if inst.problem is not Problem.IM:
        raise ValueError(f"expected an IM instance, got {inst.problem}")
    if not is_c_closed(inst.graph, c):
        raise ValueError("graph is not c-closed")
    if inst.k == 0:
        return Decided(True, Witness.edge_set((), Problem.IM))
    if c == 1:
        return _decide_cluster_im(inst)

    original = inst
    trace: list[RuleRecord] = []
    guard = 20 * (inst.graph.n + inst.k + 10)
    for _ in range(guard):
        record = rr_neighborhood_matching(inst, c)
        if record is not None:
            inst = replay(inst, record)
            trace.append(record)
            continue
        p = vclp_half_integral(inst.graph)
        decided = rr_lp_thresholds(inst, c, p, require_witness)
        if decided is not None:
            witness = decided.witness
            if witness is not None:
                witness = lift_im_witness(original, witness, trace, require_witness)
            return Decided(decided.answer, witness)
        record = rr_leaf_rules(inst, c, p)
        if record is None:
            isolated = inst.graph.isolated_vertices()
            if isolated:
                record = RuleRecord(rule="drop-isolated", vertices_removed=tuple(isolated))
        if record is None:
            break
        inst = replay(inst, record)
        trace.append(record)
    else:
        raise ExtractionError("IM pipeline failed to reach a fixpoint")

    _assert_partition_bounds(inst, c)
    reduced = Instance(problem=Problem.IM, graph=inst.graph, k=inst.k, declared_closure=c)
    return Reduced(reduced, tuple(trace))


def _assert_partition_bounds(inst: Instance, c: int) -> None:
    p = vclp_half_integral(inst.graph)
    k = inst.k
    a = 4 * c * k + 1
    assert len(p.v_half) < 3 * unrestricted_threshold(c, a, k)
    assert len(p.v1) < saturated_threshold(c, a, k)
    assert len(p.v0) <= len(p.v1) + c * comb(len(p.v1), 2)


def _decide_cluster_im(inst: Instance) -> Decided:
    """1-closed graphs are disjoint cliques: the answer is whether at least k
    components have an edge, one matched edge per such component."""
    g = inst.graph
    chosen: list[tuple[int, int]] = []
    for comp in g.components():
        if len(comp) >= 2 and len(chosen) < inst.k:
            members = sorted(comp)
            chosen.append((members[0], members[1]))
    if len(chosen) >= inst.k:
        return Decided(True, Witness.edge_set(chosen, Problem.IM))
    return Decided(False)


# -- bipartite kernels ------------------------------------------------------------


def kernelize_im_bipartite(
    inst: Instance,
    parts: Bipartition,
    mode: str = "delta",
    c: int | None = None,
    require_witness: bool = False,
) -> KernelOutcome:
    """Size-threshold kernels for bipartite graphs.

    delta mode: enough non-isolated vertices relative to the maximum degree
    force a Yes. closure mode: either many high-degree vertices exist (private
    neighbors give the matching directly) or the low-degree remainder is
    large enough for the dense-bipartite bound with Delta <= c*k.
    """
    if inst.problem is not Problem.IM:
        raise ValueError(f"expected an IM instance, got {inst.problem}")
    parts.validate(inst.graph)
    g, k = inst.graph, inst.k
    if k == 0:
        return Decided(True, Witness.edge_set((), Problem.IM))

    if mode == "delta":
        delta = g.max_degree()
        live = [v for v in g.vertex_ids if g.degree(v) > 0]
        if delta > 0 and len(live) >= dense_bipartite_threshold(delta, k):
            return Decided(True, _maybe(inst, require_witness, im_dense_bipartite, g, parts, k))
        return _reduced_drop_isolated(inst, parts)

    if mode == "closure":
        if c is None:
            raise ValueError("closure mode needs c")
        if not is_c_closed(g, c):
            raise ValueError("graph is not c-closed")
        high = frozenset(v for v in g.vertex_ids if g.degree(v) >= c * k)
        if len(high) >= 2 * k:
            return Decided(True, _maybe(inst, require_witness, im_from_high_degree, g, parts, c, k))
        rest = g.without_vertices(high)
        live = [v for v in rest.vertex_ids if rest.degree(v) > 0]
        if rest.max_degree() > 0 and len(live) >= dense_bipartite_threshold(c * k, k):
            rest_parts = Bipartition(parts.left_of(rest))
            return Decided(
                True, _maybe(inst, require_witness, im_dense_bipartite, rest, rest_parts, k)
            )
        return _reduced_drop_isolated(inst, parts)

    raise ValueError(f"unknown mode {mode!r} (expected 'delta' or 'closure')")


def _maybe(inst: Instance, require: bool, extractor, *args) -> Witness | None:
    try:
        return _as_witness(inst, extractor(*args))
    except (ExtractionError, ValueError) as exc:
        if require:
            raise ExtractionError(f"witness extraction failed: {exc}") from exc
        return None


def _reduced_drop_isolated(inst: Instance, parts: Bipartition) -> Reduced:
    g = inst.graph
    isolated = g.isolated_vertices()
    trace = []
    if isolated:
        record = RuleRecord(rule="drop-isolated", vertices_removed=tuple(isolated))
        inst = replay(inst, record)
        trace.append(record)
    reduced = Instance(
        problem=Problem.IM,
        graph=inst.graph,
        k=inst.k,
        bipartition=Bipartition(parts.left_of(inst.graph)),
    )
    return Reduced(reduced, tuple(trace))
