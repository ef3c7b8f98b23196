"""Randomized agreement checking of pipelines against the brute-force oracles.

Each trial draws a seeded random instance, computes its closure, runs the
problem's pipeline(s), and compares outcomes with the oracle answer. Size
bounds and closure preservation are checked on every trial. Disagreements
are shrunk by greedy vertex deletion before being reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .closure import compute_closure, is_c_closed
from .errors import ResourceLimitError
from .generators import er_graph
from .graph import Graph
from .graphio import normalize_ids, serialize_graph
from .instances import (
    Bipartition,
    Coloring,
    Decided,
    Instance,
    KernelOutcome,
    Problem,
    Reduced,
    replay,
)
from .kernel_ds import kernelize_bipartite_bwds, kernelize_bwtds, kernelize_ds
from .kernel_im import kernelize_im, kernelize_im_bipartite
from .kernel_irs import kernelize_irs
from .kernel_is import kernelize_is
from .oracle import oracle_answer, validate_witness
from .ramsey import saturated_threshold, unrestricted_threshold
from .kernel_irs import irs_thresholds
from .solver import solve_ds, solve_tds

PROBLEMS = ("is", "ds", "tds", "bwtds", "im", "irs")


@dataclass
class TrialResult:
    index: int
    n: int
    m: int
    k: int
    c: int
    agreed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "c": self.c,
            "agreed": self.agreed,
            "detail": self.detail,
        }


@dataclass
class VerifyReport:
    problem: str
    n_max: int
    trials: int
    seed: int
    k_max: int
    r: int
    bipartite: bool
    results: list[TrialResult] = field(default_factory=list)
    reproducer: str | None = None

    @property
    def disagreements(self) -> list[TrialResult]:
        return [t for t in self.results if not t.agreed]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "problem": self.problem,
            "n_max": self.n_max,
            "trials": self.trials,
            "seed": self.seed,
            "k_max": self.k_max,
            "r": self.r,
            "bipartite": self.bipartite,
            "agreements": sum(t.agreed for t in self.results),
            "disagreements": [t.to_json() for t in self.disagreements],
            "reproducer": self.reproducer,
            "status": "ok" if self.ok else "disagreement",
        }


def random_instance(problem: str, n_max: int, k_max: int, r: int, bipartite: bool, seed: int) -> Instance:
    rng = random.Random(seed)
    n = rng.randrange(n_max + 1)
    p = 0.15 + 0.5 * rng.random()
    if bipartite:
        g = _random_bipartite(n, p, rng)
    else:
        g = er_graph(n, p, seed=rng.randrange(2 ** 32))
    k = rng.randrange(k_max + 1)
    tag = _instance_tag(problem, bipartite)
    coloring = None
    if tag is Problem.BW_TDS:
        if problem == "ds" and bipartite or problem == "bwtds":
            coloring = Coloring(frozenset(v for v in g.vertex_ids if rng.random() < 0.5))
        else:
            coloring = Coloring()
    use_r = r
    if problem == "ds" and bipartite:
        use_r = 1  # the bipartite pipeline covers the r = 1 colored problem
    bip = Bipartition(g.two_color() or frozenset()) if bipartite else None
    return Instance(
        problem=tag,
        graph=g,
        k=k,
        r=use_r if tag in (Problem.TDS, Problem.BW_TDS) else None,
        coloring=coloring,
        bipartition=bip,
    )


def _instance_tag(problem: str, bipartite: bool) -> Problem:
    if problem == "is":
        return Problem.IS
    if problem == "ds" and bipartite:
        return Problem.BW_TDS
    if problem == "ds":
        return Problem.DS
    if problem == "tds":
        return Problem.TDS
    if problem == "bwtds":
        return Problem.BW_TDS
    if problem == "im":
        return Problem.IM
    if problem == "irs":
        return Problem.IRS
    raise ValueError(f"unknown problem {problem!r}")


def _random_bipartite(n: int, p: float, rng: random.Random) -> Graph:
    left = n // 2
    edges = [
        (u, v)
        for u in range(left)
        for v in range(left, n)
        if rng.random() < p
    ]
    return Graph(range(n), edges)


def run_verify(
    problem: str,
    n_max: int = 8,
    trials: int = 100,
    seed: int = 0,
    k_max: int = 3,
    r: int = 1,
    bipartite: bool = False,
) -> VerifyReport:
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r} (expected one of {PROBLEMS})")
    report = VerifyReport(
        problem=problem, n_max=n_max, trials=trials, seed=seed, k_max=k_max, r=r, bipartite=bipartite
    )
    for idx in range(trials):
        trial_seed = seed * 1_000_003 + idx
        inst = random_instance(problem, n_max, k_max, r, bipartite, trial_seed)
        agreed, detail = check_instance(problem, inst, bipartite)
        report.results.append(
            TrialResult(
                index=idx,
                n=inst.graph.n,
                m=inst.graph.m,
                k=inst.k,
                c=compute_closure(inst.graph).c,
                agreed=agreed,
                detail=detail,
            )
        )
    bad = report.disagreements
    if bad:
        failing = random_instance(problem, n_max, k_max, r, bipartite, seed * 1_000_003 + bad[0].index)
        shrunk = shrink_instance(problem, failing, bipartite)
        normalized, _ = normalize_ids(shrunk.graph)
        report.reproducer = serialize_graph(normalized)
    return report


def check_instance(problem: str, inst: Instance, bipartite: bool) -> tuple[bool, str]:
    """Run the pipeline(s) for one instance; empty detail means agreement."""
    expected = oracle_answer(inst)
    c = compute_closure(inst.graph).c
    try:
        outcomes = _run_pipelines(problem, inst, c, bipartite)
    except ResourceLimitError:
        raise
    except Exception as exc:  # pipeline crash counts as disagreement
        return False, f"pipeline error: {exc!r}"
    for name, base, outcome in outcomes:
        ok, why = _outcome_agrees(base, outcome, expected, c)
        if not ok:
            return False, f"{name}: {why}"
    return True, ""


def _run_pipelines(
    problem: str, inst: Instance, c: int, bipartite: bool
) -> list[tuple[str, Instance, KernelOutcome]]:
    out: list[tuple[str, Instance, KernelOutcome]] = []
    if problem == "is":
        out.append(("kernelize_is", inst, kernelize_is(inst, c)))
    elif problem == "ds" and bipartite:
        assert inst.bipartition is not None
        out.append(
            ("kernelize_bipartite_bwds", inst, kernelize_bipartite_bwds(inst, inst.bipartition, c))
        )
    elif problem == "ds":
        colored = Instance(
            problem=Problem.BW_TDS, graph=inst.graph, k=inst.k, r=1, coloring=Coloring()
        )
        out.append(("kernelize_ds", colored, kernelize_ds(inst, c)))
        answer, witness = solve_ds(inst.graph, c, inst.k)
        out.append(("solve_ds", inst, Decided(answer, witness)))
    elif problem == "tds":
        assert inst.r is not None
        colored = Instance(
            problem=Problem.BW_TDS,
            graph=inst.graph,
            k=inst.k,
            r=inst.r,
            coloring=Coloring(),
        )
        out.append(("kernelize_bwtds", colored, kernelize_bwtds(colored, c)))
        answer, witness = solve_tds(inst.graph, c, inst.r, inst.k)
        out.append(("solve_tds", inst, Decided(answer, witness)))
    elif problem == "bwtds":
        out.append(("kernelize_bwtds", inst, kernelize_bwtds(inst, c)))
    elif problem == "im" and bipartite:
        assert inst.bipartition is not None
        out.append(
            (
                "kernelize_im_bipartite[delta]",
                inst,
                kernelize_im_bipartite(inst, inst.bipartition, "delta"),
            )
        )
        out.append(
            (
                "kernelize_im_bipartite[closure]",
                inst,
                kernelize_im_bipartite(inst, inst.bipartition, "closure", c=c),
            )
        )
        out.append(("kernelize_im", inst, kernelize_im(inst, c)))
    elif problem == "im":
        out.append(("kernelize_im", inst, kernelize_im(inst, c)))
    elif problem == "irs":
        out.append(("kernelize_irs", inst, kernelize_irs(inst, c)))
    return out


def _outcome_agrees(
    inst: Instance, outcome: KernelOutcome, expected: bool, c: int
) -> tuple[bool, str]:
    if isinstance(outcome, Decided):
        if outcome.answer != expected:
            return False, f"decided {outcome.answer}, oracle says {expected}"
        if outcome.witness is not None:
            target = inst
            if outcome.witness.problem is not inst.problem:
                # e.g. a DS-tagged witness from the uncolored pipeline checked
                # against its all-black colored twin
                target = Instance(
                    problem=outcome.witness.problem,
                    graph=inst.graph,
                    k=inst.k,
                    r=inst.r if outcome.witness.problem in (Problem.TDS, Problem.BW_TDS) else None,
                    coloring=Coloring() if outcome.witness.problem is Problem.BW_TDS else None,
                )
            if not validate_witness(target, outcome.witness):
                return False, "decided-yes witness fails validation"
        return True, ""
    reduced = outcome.instance
    try:
        reduced_answer = oracle_answer(reduced)
    except ResourceLimitError:
        return True, ""  # reduced instance too large to cross-check
    if reduced_answer != expected:
        return False, f"reduced instance answers {reduced_answer}, oracle says {expected}"
    ok, why = _size_bound_holds(reduced, c)
    if not ok:
        return False, why
    ok, why = _closure_preserved(inst, outcome, c)
    if not ok:
        return False, why
    return True, ""


def _size_bound_holds(reduced: Instance, c: int) -> tuple[bool, str]:
    n, k = reduced.graph.n, reduced.k
    if reduced.problem is Problem.IS:
        if n > c * k * k:
            return False, f"IS kernel has {n} > c*k^2 vertices"
    if reduced.problem is Problem.BW_TDS and reduced.r == 1 and reduced.bipartition is not None:
        bound = c * k * k + c * comb(c * k * k, 2)
        if n > bound:
            return False, f"bipartite kernel has {n} > {bound} vertices"
    if reduced.problem is Problem.BW_TDS:
        from .kernel_ds import per_vertex_black_bound

        bound = per_vertex_black_bound(c, k, reduced.r or 1)
        if len(reduced.black_vertices()) > k * bound + k:
            return False, "black-count bound violated"
    if reduced.problem is Problem.IRS:
        _, _, total = irs_thresholds(c, k)
        if n >= total:
            return False, f"IRS kernel has {n} >= {total} vertices"
    if reduced.problem is Problem.IM and reduced.bipartition is None:
        # the LP partition bounds belong to the general pipeline; the
        # bipartite kernels only promise to sit below their size thresholds
        from .matching import vclp_half_integral

        p = vclp_half_integral(reduced.graph)
        a = 4 * c * k + 1
        if len(p.v_half) >= 3 * unrestricted_threshold(c, a, k):
            return False, "V_half bound violated"
        if len(p.v1) >= saturated_threshold(c, a, k):
            return False, "V_1 bound violated"
        if len(p.v0) > len(p.v1) + c * comb(len(p.v1), 2):
            return False, "V_0 bound violated"
    return True, ""


def _closure_preserved(inst: Instance, outcome: Reduced, c: int) -> tuple[bool, str]:
    state = inst
    for record in outcome.trace:
        state = replay(state, record)
        if record.payload.get("uncolor"):
            continue  # the gadget may raise the closure; it is recomputed there
        if not is_c_closed(state.graph, c):
            return False, f"rule {record.rule} broke c-closedness"
    if state.graph != outcome.instance.graph:
        return False, "trace replay does not reproduce the reduced graph"
    return True, ""


def shrink_instance(problem: str, inst: Instance, bipartite: bool) -> Instance:
    """Greedy vertex-deletion shrinking while the disagreement persists."""

    def still_failing(candidate: Instance) -> bool:
        agreed, _ = check_instance(problem, candidate, bipartite)
        return not agreed

    changed = True
    while changed:
        changed = False
        for v in list(inst.graph.vertex_ids):
            g = inst.graph.without_vertex(v)
            candidate = Instance(
                problem=inst.problem,
                graph=g,
                k=inst.k,
                r=inst.r,
                coloring=inst.coloring.restricted_to(g) if inst.coloring else None,
                bipartition=inst.bipartition.restricted_to(g) if inst.bipartition else None,
            )
            if still_failing(candidate):
                inst = candidate
                changed = True
                break
    return inst
