"""(BW-)Threshold Dominating Set kernelization.

The colored pipeline bounds black vertices via clique and common-neighborhood
rules, prunes redundant white vertices, and finally trades the coloring for a
small clique gadget. Rules are scheduled as a deterministic fixpoint loop in
the stated order; after any structural change all earlier rules are
re-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .closure import compute_closure, is_c_closed
from .cliques import cliques_of_size, maximal_cliques
from .errors import ExtractionError
from .graph import Graph
from .instances import (
    WHITE,
    Bipartition,
    Coloring,
    Decided,
    Instance,
    KernelOutcome,
    Problem,
    Reduced,
    RuleRecord,
    Witness,
    replay,
)
from .oracle import validate_witness
from .ramsey import ramsey_threshold


@dataclass(frozen=True)
class GadgetInfo:
    """Bookkeeping for the color-removal gadget.

    ``clique`` lists the r+1 fresh vertices; the first r of them are wired to
    every white vertex of the colored instance. Lifting a witness back needs
    both instances, so they ride along.
    """

    clique: tuple[int, ...]
    white_edges: tuple[tuple[int, int], ...]
    r: int
    original: Instance
    gadget_instance: Instance
    record: RuleRecord


@dataclass(frozen=True)
class HittingSetInstance:
    """A uniform set family with a hitting budget."""

    universe: tuple[int, ...]
    sets: tuple[frozenset[int], ...]
    set_size: int
    k: int

    def __post_init__(self):
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe has duplicate elements")
        ground = set(self.universe)
        for s in self.sets:
            if len(s) != self.set_size:
                raise ValueError(f"set {sorted(s)} does not have size {self.set_size}")
            if not s <= ground:
                raise ValueError(f"set {sorted(s)} leaves the universe")


# -- individual rules ----------------------------------------------------------


def rr_clique(inst: Instance, c: int) -> RuleRecord | None:
    """A maximal clique holding at least c*k black vertices pins r solution
    vertices inside it: attach a fresh black simplicial vertex and whiten the
    clique. No-op (None) when no clique qualifies."""
    g = inst.graph
    black = inst.black_vertices()
    need = c * inst.k
    for clique in maximal_cliques(g):
        in_black = [v for v in clique if v in black]
        if len(in_black) >= need:
            u = g.fresh_id()
            return RuleRecord(
                rule="RR2",
                vertices_added=(u,),
                edges_added=tuple((u, v) for v in clique),
                recolored=tuple((v, WHITE) for v in clique if v in black),
                payload={"clique": list(clique), "black_count": len(in_black)},
            )
    return None


def common_neighborhood_threshold(c: int, k: int, i: int) -> int:
    """The firing threshold of stage i of the common-neighborhood rule.

    The stated threshold k^(i-1) * rho is too tight: the inductive step
    needs head room for solution vertices dominating themselves and for the
    dominator found by pigeonhole not being its own common neighbor. The
    recurrence T_1 = rho, T_i = k * T_(i-1) + 2k restores the argument and
    keeps the same asymptotics.
    """
    rho = ramsey_threshold(c, c * k, k + 1)
    bound = rho
    for _ in range(i - 1):
        bound = k * bound + 2 * k
    return bound


def rr_common_neighborhood(inst: Instance, c: int, i: int) -> RuleRecord | None:
    """Stage i of the common-neighborhood rule (applies when r <= c - 1).

    A clique of size exactly c - i whose common black neighborhood P exceeds
    the stage threshold gets a fresh black simplicial vertex; the clique and
    P turn white. Stages must be exhausted in increasing i.
    """
    assert inst.r is not None and 1 <= i <= c - inst.r
    g = inst.graph
    black = inst.black_vertices()
    bound = common_neighborhood_threshold(c, inst.k, i)
    for clique in cliques_of_size(g, c - i):
        common = _common_black_neighbors(g, clique, black)
        if len(common) > bound:
            u = g.fresh_id()
            whitened = sorted(set(clique) & black | common)
            return RuleRecord(
                rule=f"RR3.{i}",
                vertices_added=(u,),
                edges_added=tuple((u, v) for v in clique),
                recolored=tuple((v, WHITE) for v in whitened),
                payload={"clique": list(clique), "common_black": sorted(common), "bound": bound},
            )
    return None


def rr_clique_no(inst: Instance, c: int) -> bool:
    """With r >= c, a (c-1)-clique with more than rho common black neighbors
    certifies a No-instance."""
    assert inst.r is not None and inst.r >= c
    g = inst.graph
    black = inst.black_vertices()
    rho = ramsey_threshold(c, c * inst.k, inst.k + 1)
    return any(
        len(_common_black_neighbors(g, clique, black)) > rho
        for clique in cliques_of_size(g, c - 1)
    )


def _common_black_neighbors(g: Graph, clique, black: frozenset[int]) -> set[int]:
    common: set[int] | None = None
    for v in clique:
        nbrs = g.neighbors(v)
        common = set(nbrs) if common is None else common & nbrs
    if common is None:  # empty clique: every vertex qualifies
        common = set(g.vertex_ids)
    return common & black


def per_vertex_black_bound(c: int, k: int, r: int) -> int:
    """After the clique and common-neighborhood rules, the number of black
    neighbors any single vertex can have in a Yes-instance.

    Extends the exhaustion bounds downward from clique size min(r, c-1) to
    single vertices, with the same self-domination head room as the rule
    thresholds.
    """
    if r <= c - 1:
        size = r
        bound = common_neighborhood_threshold(c, k, c - r)
    else:
        size = c - 1
        bound = ramsey_threshold(c, c * k, k + 1)
    for _ in range(size - 1):
        bound = max(k * c + k, k * bound + 2 * k)
    return bound


def rr_black_count(inst: Instance, c: int) -> bool:
    """Too many black vertices is a certified No.

    Each solution vertex covers at most per_vertex_black_bound black
    neighbors plus itself. (The paper's k^c * rho cap forgets the self
    coverage and wrongly rejects boundary Yes-instances such as a 4-closed
    wheel-like graph on five black vertices with k = 1.)
    """
    assert inst.r is not None
    bound = per_vertex_black_bound(c, inst.k, inst.r)
    return len(inst.black_vertices()) > inst.k * bound + inst.k


def rr_white_removal(inst: Instance) -> RuleRecord | None:
    """A white vertex is dropped when r other vertices each dominate all of
    its black neighborhood."""
    assert inst.r is not None
    g = inst.graph
    black = inst.black_vertices()
    for w in sorted(inst.white_vertices()):
        demand = g.neighbors(w) & black
        dominators = 0
        for v in g.vertex_ids:
            if v == w:
                continue
            if demand <= (g.closed_neighborhood(v) & black):
                dominators += 1
                if dominators >= inst.r:
                    return RuleRecord(
                        rule="RR6",
                        vertices_removed=(w,),
                        payload={"white": w, "black_demand": sorted(demand)},
                    )
    return None


# -- the colored pipeline --------------------------------------------------------


def kernelize_bwtds(inst: Instance, c: int) -> KernelOutcome:
    """Exhaust RR2, RR3.1..RR3.(c-r) (or the r >= c No-check), the black-count
    check, and white removal, restarting from the top after every change."""
    if inst.problem is not Problem.BW_TDS:
        raise ValueError(f"expected a BW-TDS instance, got {inst.problem}")
    assert inst.r is not None
    if not is_c_closed(inst.graph, c):
        raise ValueError("graph is not c-closed")
    r = inst.r
    if not inst.black_vertices():
        return Decided(True, Witness.vertex_set((), Problem.BW_TDS))
    if inst.k == 0:
        return Decided(False)
    if c == 1:
        return _decide_cluster_bwtds(inst)

    trace: list[RuleRecord] = []
    guard = 8 * (inst.graph.n + inst.k + 10)
    for _ in range(guard):
        if not inst.black_vertices():
            # Rules only trade blacks for blacks, so this means the input had
            # none; kept for safety.
            return Decided(True, Witness.vertex_set((), Problem.BW_TDS))
        record = rr_clique(inst, c)
        if record is None and r <= c - 1:
            for i in range(1, c - r + 1):
                record = rr_common_neighborhood(inst, c, i)
                if record is not None:
                    break
        if record is None and r >= c and rr_clique_no(inst, c):
            return Decided(False)
        if record is None and rr_black_count(inst, c):
            return Decided(False)
        if record is None:
            record = rr_white_removal(inst)
        if record is None:
            break
        inst = replay(inst, record)
        trace.append(record)
    else:
        raise ExtractionError("BW-TDS pipeline failed to reach a fixpoint")

    bound = per_vertex_black_bound(c, inst.k, r)
    assert len(inst.black_vertices()) <= inst.k * bound + inst.k
    reduced = Instance(
        problem=Problem.BW_TDS,
        graph=inst.graph,
        k=inst.k,
        r=r,
        coloring=inst.coloring,
        bipartition=inst.bipartition,
        declared_closure=c,
    )
    return Reduced(reduced, tuple(trace))


def _decide_cluster_bwtds(inst: Instance) -> Decided:
    """Exact decision for 1-closed (cluster) graphs.

    Every black vertex sees exactly its own clique component, so each
    component holding a black vertex needs r of its vertices, independently.
    The clique rule would churn forever at c*k = 1, hence this fast path.
    """
    assert inst.r is not None
    g, r = inst.graph, inst.r
    black = inst.black_vertices()
    witness: list[int] = []
    for comp in g.components():
        if comp & black:
            if len(comp) < r:
                return Decided(False)
            witness.extend(sorted(comp)[:r])
    if len(witness) > inst.k:
        return Decided(False)
    return Decided(True, Witness.vertex_set(witness, Problem.BW_TDS))


# -- color removal ----------------------------------------------------------------


def uncolor_gadget(inst: Instance) -> tuple[Instance, GadgetInfo]:
    """Replace the coloring with a clique gadget.

    A fresh (r+1)-clique is added; its first r members are wired to every
    white vertex, and the budget grows by r. The last gadget vertex has
    degree exactly r, which forces the other r into any solution that avoids
    it, covering the whites for free. The closure of the result may exceed
    the input's and is recomputed.
    """
    if inst.problem is not Problem.BW_TDS:
        raise ValueError(f"expected a BW-TDS instance, got {inst.problem}")
    assert inst.r is not None and inst.coloring is not None
    g, r = inst.graph, inst.r
    base = g.fresh_id()
    clique = tuple(range(base, base + r + 1))
    clique_edges = [(clique[i], clique[j]) for i in range(r + 1) for j in range(i + 1, r + 1)]
    white_edges = tuple(
        (w, clique[i]) for w in sorted(inst.white_vertices()) for i in range(r)
    )
    record = RuleRecord(
        rule="gadget",
        vertices_added=clique,
        edges_added=tuple(clique_edges) + white_edges,
        k_delta=r,
        payload={"uncolor": True, "clique": list(clique)},
    )
    new_graph = g.with_vertices(clique).with_edges(record.edges_added)
    closure = compute_closure(new_graph).c
    record = RuleRecord(
        rule=record.rule,
        vertices_added=record.vertices_added,
        edges_added=record.edges_added,
        k_delta=record.k_delta,
        payload={"uncolor": True, "clique": list(clique), "declared_closure": closure},
    )
    gadget_inst = replay(inst, record)
    info = GadgetInfo(
        clique=clique,
        white_edges=white_edges,
        r=r,
        original=inst,
        gadget_instance=gadget_inst,
        record=record,
    )
    return gadget_inst, info


def lift_witness(d_prime: Witness, gi: GadgetInfo) -> Witness:
    """Turn a solution of the gadget instance into one of the colored instance.

    The last gadget vertex is simplicial with exactly r neighbors, so the
    standard swap pushes it out of the solution; its r dominators must then
    be the rest of the gadget clique, which peels off cleanly.
    """
    gadget = gi.gadget_instance
    if not validate_witness(gadget, d_prime):
        raise ValueError("input witness does not solve the gadget instance")
    solution = set(d_prime.elements)
    g = gadget.graph
    last = gi.clique[-1]
    if last in solution:
        outside = sorted(g.neighbors(last) - solution)
        if outside:
            solution.remove(last)
            solution.add(outside[0])
        else:
            solution.remove(last)
    rest = set(gi.clique[:-1])
    if not rest <= solution:
        raise ExtractionError("gadget clique not forced into the solution")
    lifted = Witness.vertex_set(solution - set(gi.clique), Problem.BW_TDS)
    if not validate_witness(gi.original, lifted):
        raise ExtractionError("lifted witness fails validation")
    return lifted


def kernelize_ds(inst: Instance, c: int) -> KernelOutcome:
    """Dominating Set: color everything black, run the colored pipeline with
    r = 1, then remove colors with the gadget."""
    if inst.problem is not Problem.DS:
        raise ValueError(f"expected a DS instance, got {inst.problem}")
    colored = Instance(
        problem=Problem.BW_TDS,
        graph=inst.graph,
        k=inst.k,
        r=1,
        coloring=Coloring(),
        bipartition=inst.bipartition,
        declared_closure=inst.declared_closure,
    )
    outcome = kernelize_bwtds(colored, c)
    if isinstance(outcome, Decided):
        witness = outcome.witness
        if witness is not None:
            witness = Witness(witness.kind, witness.elements, Problem.DS)
        return Decided(outcome.answer, witness)
    gadget_inst, info = uncolor_gadget(outcome.instance)
    return Reduced(gadget_inst, outcome.trace + (info.record,))


# -- bipartite pipeline (r = 1) ----------------------------------------------------


def kernelize_bipartite_bwds(inst: Instance, parts: Bipartition, c: int) -> KernelOutcome:
    """BW-Dominating Set on bipartite graphs: high-degree vertices are forced
    into the solution, too many blacks is a No, and whites with at most one
    black neighbor are dropped."""
    if inst.problem is not Problem.BW_TDS or inst.r != 1:
        raise ValueError("expected a BW-TDS instance with r = 1")
    parts.validate(inst.graph)
    if not is_c_closed(inst.graph, c):
        raise ValueError("graph is not c-closed")

    original = inst
    trace: list[RuleRecord] = []
    forced: list[int] = []
    while True:
        black = inst.black_vertices()
        if not black:
            witness = Witness.vertex_set(forced, Problem.BW_TDS)
            if not validate_witness(original, witness):
                raise ExtractionError("forced-vertex witness fails validation")
            return Decided(True, witness)
        if inst.k == 0:
            return Decided(False)
        record = _rr_high_degree(inst, c)
        if record is not None:
            forced.append(record.vertices_removed[0])
            inst = replay(inst, record)
            trace.append(record)
            continue
        # Strictly more than c*k^2 blacks: k vertices, each covering at most
        # c*k - 1 black neighbors plus themselves, cannot dominate them all.
        # (Exactly c*k^2 can still be a Yes: one isolated black vertex at
        # c = k = 1.)
        if len(black) > c * inst.k * inst.k:
            return Decided(False)
        record = _rr_white_leaf(inst)
        if record is not None:
            inst = replay(inst, record)
            trace.append(record)
            continue
        break

    k = inst.k
    assert inst.graph.n <= c * k * k + c * comb(c * k * k, 2), "bipartite kernel bound"
    reduced = Instance(
        problem=Problem.BW_TDS,
        graph=inst.graph,
        k=k,
        r=1,
        coloring=inst.coloring,
        bipartition=inst.bipartition.restricted_to(inst.graph) if inst.bipartition else None,
        declared_closure=c,
    )
    return Reduced(reduced, tuple(trace))


def _rr_high_degree(inst: Instance, c: int) -> RuleRecord | None:
    """RR7: a vertex with at least c*k black neighbors is in every solution."""
    g = inst.graph
    black = inst.black_vertices()
    need = c * inst.k
    for v in g.vertex_ids:
        hit = g.neighbors(v) & black
        if len(hit) >= need:
            return RuleRecord(
                rule="RR7",
                recolored=tuple((w, WHITE) for w in sorted(hit)),
                vertices_removed=(v,),
                k_delta=-1,
                payload={"vertex": v, "black_neighbors": len(hit)},
            )
    return None


def _rr_white_leaf(inst: Instance) -> RuleRecord | None:
    """RR9, extended: a white vertex with at most one black neighbor goes.

    The stated rule says "only one", but a white vertex with no black
    neighbor is equally redundant and the white-count bound needs it gone;
    the extension is flagged in the payload.
    """
    g = inst.graph
    black = inst.black_vertices()
    for w in sorted(inst.white_vertices()):
        hits = len(g.neighbors(w) & black)
        if hits <= 1:
            return RuleRecord(
                rule="RR9",
                vertices_removed=(w,),
                payload={"white": w, "black_neighbors": hits, "extended_zero_case": hits == 0},
            )
    return None


# -- hardness-construction generator -------------------------------------------------


def hitting_set_to_ds(hs: HittingSetInstance) -> Instance:
    """The lower-bound reduction as an instance generator.

    The universe becomes a clique; each set becomes a degree-lambda vertex
    wired to its elements. The output is (lambda+1)-closed and its DS answer
    matches the hitting-set answer.
    """
    universe = list(hs.universe)
    base = max(universe, default=-1) + 1
    set_ids = list(range(base, base + len(hs.sets)))
    edges = [
        (universe[i], universe[j])
        for i in range(len(universe))
        for j in range(i + 1, len(universe))
    ]
    for sid, members in zip(set_ids, hs.sets):
        edges.extend((u, sid) for u in sorted(members))
    g = Graph(universe + set_ids, edges)
    return Instance(problem=Problem.DS, graph=g, k=hs.k, declared_closure=hs.set_size + 1)
