"""Irredundant Set kernelization: simplicial-twin removal plus a Ramsey-type
size threshold whose proof doubles as a witness extractor.

Privacy is checked against closed neighborhoods of the other members (the
open-neighborhood reading would make any adjacent pair in a clique vacuously
irredundant); the oracle exposes the literal open variant behind a flag for
comparison.
"""

from __future__ import annotations

from .closure import is_c_closed
from .errors import ExtractionError, PreconditionError
from .graph import Graph
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
from .oracle import is_irredundant, validate_witness
from .ramsey import (
    IndependentSet,
    ceil_sqrt,
    clique_or_independent_set,
    im_dense_bipartite,
    ramsey_threshold,
)


def rr_simplicial_twin(inst: Instance) -> RuleRecord | None:
    """RR16: of two simplicial vertices with equal closed neighborhoods, the
    larger-id one goes."""
    g = inst.graph
    simplicial = [v for v in g.vertex_ids if g.is_clique(g.neighbors(v))]
    closed = {v: g.closed_neighborhood(v) for v in simplicial}
    for i, u in enumerate(simplicial):
        for v in simplicial[i + 1:]:
            if closed[u] == closed[v]:
                return RuleRecord(
                    rule="RR16",
                    vertices_removed=(v,),
                    payload={"kept": u, "removed": v},
                )
    return None


def irs_thresholds(c: int, k: int) -> tuple[int, int, int]:
    """(alpha', alpha, T): clique-side demand, Ramsey stage, and the global
    Yes threshold. alpha' uses the exact integer ceiling of 6*c^(3/2)*k."""
    alpha_prime = ceil_sqrt(36 * k * k * c ** 3) + 2 * c * k + 1
    alpha = ramsey_threshold(c, alpha_prime, k)
    total = ramsey_threshold(c, c * alpha + 1, k)
    return alpha_prime, alpha, total


def kernelize_irs(inst: Instance, c: int, require_witness: bool = False) -> KernelOutcome:
    """Exhaust twin removal; any graph at the global threshold is a Yes."""
    if inst.problem is not Problem.IRS:
        raise ValueError(f"expected an IRS instance, got {inst.problem}")
    if not is_c_closed(inst.graph, c):
        raise ValueError("graph is not c-closed")
    if inst.k == 0:
        return Decided(True, Witness.vertex_set((), Problem.IRS))
    trace: list[RuleRecord] = []
    while True:
        record = rr_simplicial_twin(inst)
        if record is None:
            break
        inst = replay(inst, record)
        trace.append(record)
    _, _, total = irs_thresholds(c, inst.k)
    if inst.graph.n >= total:
        witness = None
        try:
            witness = _validated(inst, extract_irs_witness(inst.graph, c, inst.k))
        except (ExtractionError, ValueError):
            if require_witness:
                raise
        return Decided(True, witness)
    reduced = Instance(problem=Problem.IRS, graph=inst.graph, k=inst.k, declared_closure=c)
    return Reduced(reduced, tuple(trace))


def _validated(inst: Instance, w: Witness) -> Witness:
    if not validate_witness(inst, w):
        raise ExtractionError("extracted irredundant set fails validation")
    return w


def extract_irs_witness(
    g: Graph,
    c: int,
    k: int,
    alpha_prime: int | None = None,
    alpha: int | None = None,
    total: int | None = None,
) -> Witness:
    """A size-k irredundant set in a twin-free c-closed graph at the threshold.

    The Ramsey dichotomy either hands over an independent set (independent
    sets are irredundant) or a huge clique; walking the clique boundary picks
    clique vertices with pairwise-unshared outside neighbors, and a second
    dichotomy plus the dense-bipartite extractor turn those into k members
    whose outside partners are private.

    The threshold overrides let tests drive the clique branch on graphs far
    below the real threshold; the final irredundance check still guards the
    output.
    """
    if k == 0:
        return Witness.vertex_set((), Problem.IRS)
    if rr_simplicial_twin(Instance(problem=Problem.IRS, graph=g, k=k)) is not None:
        raise PreconditionError("simplicial twins remain; exhaust RR16 first")
    real_alpha_prime, real_alpha, real_total = irs_thresholds(c, k)
    alpha_prime = real_alpha_prime if alpha_prime is None else alpha_prime
    alpha = real_alpha if alpha is None else alpha
    total = real_total if total is None else total
    if g.n < total:
        raise PreconditionError(f"need at least {total} vertices, got {g.n}")

    outcome = clique_or_independent_set(g, c, c * alpha + 1, k)
    if isinstance(outcome, IndependentSet):
        return Witness.vertex_set(outcome.vertices, Problem.IRS)

    clique = _extend_to_maximal_clique(g, set(outcome.vertices))
    boundary = sorted(v for v in clique if g.neighbors(v) - clique)
    if len(clique) - len(boundary) > 1:
        raise ExtractionError("more than one all-clique vertex despite twin freeness")
    work = g.without_vertices(clique - set(boundary))

    xs: list[int] = []
    ys: list[int] = []
    banned: set[int] = set()
    for _ in range(alpha):
        candidates = [v for v in boundary if v not in banned]
        if not candidates:
            raise ExtractionError("clique boundary exhausted early")
        x = candidates[0]
        outside = sorted(work.neighbors(x) - clique)
        if not outside:
            raise ExtractionError("boundary vertex lost its outside neighbor")
        y = outside[0]
        xs.append(x)
        ys.append(y)
        banned |= work.neighbors(y)

    inner = clique_or_independent_set(g.induced(ys), c, alpha_prime, k)
    if isinstance(inner, IndependentSet):
        return Witness.vertex_set(inner.vertices, Problem.IRS)

    pair_of = {y: x for x, y in zip(xs, ys)}
    order = [i for i, y in enumerate(ys) if y in inner.vertices]
    kept = order[1:]  # drop the first matched pair; the rest avoid y_first
    xs_kept = [xs[i] for i in kept]
    ys_kept = [ys[i] for i in kept]
    cross = Graph(
        sorted(xs_kept + ys_kept),
        [
            (x, y)
            for x in xs_kept
            for y in g.neighbors(x)
            if y in set(ys_kept)
        ],
    )
    assert cross.max_degree() < c, "cross graph degree must stay below c"
    matching = im_dense_bipartite(cross, Bipartition(frozenset(xs_kept)), k)
    members = [v for e in matching.sorted_edges() for v in e if v in set(xs_kept)]
    if len(members) != k:
        raise ExtractionError("dense extractor returned a malformed matching")
    if not is_irredundant(g, members):
        raise ExtractionError("constructed member set is not irredundant")
    return Witness.vertex_set(members, Problem.IRS)


def _extend_to_maximal_clique(g: Graph, clique: set[int]) -> frozenset[int]:
    while True:
        common: set[int] | None = None
        for v in clique:
            nbrs = g.neighbors(v)
            common = set(nbrs) if common is None else common & nbrs
        extension = sorted((common or set()) - clique)
        if not extension:
            return frozenset(clique)
        clique.add(extension[0])
