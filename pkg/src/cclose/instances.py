"""Problem instances, solution witnesses, kernel outcomes, and rule traces."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .errors import BipartitionError
from .graph import Graph

BLACK = "black"
WHITE = "white"
LEFT = "left"
RIGHT = "right"


class Problem(str, Enum):
    IS = "IS"
    DS = "DS"
    TDS = "TDS"
    BW_TDS = "BW-TDS"
    IM = "IM"
    IRS = "IRS"


@dataclass(frozen=True)
class Coloring:
    """A total black/white coloring; vertices default to black.

    Only the white side is stored, so the coloring is automatically total
    over any vertex set.
    """

    white: frozenset[int] = frozenset()

    def color_of(self, v: int) -> str:
        return WHITE if v in self.white else BLACK

    def black_of(self, g: Graph) -> frozenset[int]:
        return frozenset(v for v in g.vertex_ids if v not in self.white)

    def white_of(self, g: Graph) -> frozenset[int]:
        return frozenset(v for v in g.vertex_ids if v in self.white)

    def whiten(self, vs: Iterable[int]) -> "Coloring":
        return Coloring(self.white | set(vs))

    def blacken(self, vs: Iterable[int]) -> "Coloring":
        return Coloring(self.white - set(vs))

    def restricted_to(self, g: Graph) -> "Coloring":
        return Coloring(frozenset(v for v in self.white if g.has_vertex(v)))


@dataclass(frozen=True)
class Bipartition:
    """A total left/right split; valid only if every edge crosses sides."""

    left: frozenset[int]

    def side_of(self, v: int) -> str:
        return LEFT if v in self.left else RIGHT

    def left_of(self, g: Graph) -> frozenset[int]:
        return frozenset(v for v in g.vertex_ids if v in self.left)

    def right_of(self, g: Graph) -> frozenset[int]:
        return frozenset(v for v in g.vertex_ids if v not in self.left)

    def validate(self, g: Graph) -> None:
        for u, v in g.edges():
            if (u in self.left) == (v in self.left):
                raise BipartitionError(f"edge ({u}, {v}) does not cross the bipartition")

    def restricted_to(self, g: Graph) -> "Bipartition":
        return Bipartition(frozenset(v for v in self.left if g.has_vertex(v)))


VERTEX_SET = "vertex-set"
EDGE_SET = "edge-set"


@dataclass(frozen=True)
class Witness:
    """A certified solution object: a vertex set or an edge set."""

    kind: str
    elements: frozenset
    problem: Problem

    @classmethod
    def vertex_set(cls, vs: Iterable[int], problem: Problem) -> "Witness":
        return cls(VERTEX_SET, frozenset(vs), problem)

    @classmethod
    def edge_set(cls, edges: Iterable[tuple[int, int]], problem: Problem) -> "Witness":
        return cls(EDGE_SET, frozenset((min(u, v), max(u, v)) for u, v in edges), problem)

    def sorted_elements(self) -> list:
        return sorted(self.elements)


@dataclass(frozen=True)
class Instance:
    """A parameterized problem instance.

    ``r`` (the domination multiplicity) is present exactly for TDS/BW-TDS;
    a coloring is present exactly for BW-TDS.
    """

    problem: Problem
    graph: Graph
    k: int
    r: int | None = None
    coloring: Coloring | None = None
    bipartition: Bipartition | None = None
    declared_closure: int | None = None

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget k must be nonnegative")
        needs_r = self.problem in (Problem.TDS, Problem.BW_TDS)
        if needs_r != (self.r is not None):
            raise ValueError(f"r must be present iff problem is TDS/BW-TDS (got {self.problem})")
        if self.r is not None and self.r < 1:
            raise ValueError("r must be positive")
        if (self.problem is Problem.BW_TDS) != (self.coloring is not None):
            raise ValueError("coloring must be present iff problem is BW-TDS")
        if self.declared_closure is not None and self.declared_closure < 1:
            raise ValueError("declared closure must be positive")
        if self.bipartition is not None:
            self.bipartition.validate(self.graph)

    def black_vertices(self) -> frozenset[int]:
        assert self.coloring is not None
        return self.coloring.black_of(self.graph)

    def white_vertices(self) -> frozenset[int]:
        assert self.coloring is not None
        return self.coloring.white_of(self.graph)


@dataclass(frozen=True)
class RuleRecord:
    """One replayable reduction-rule application.

    Replay order: add vertices, add edges, apply recolorings, remove
    vertices, then shift the budget by ``k_delta``.
    """

    rule: str
    vertices_added: tuple[int, ...] = ()
    edges_added: tuple[tuple[int, int], ...] = ()
    recolored: tuple[tuple[int, str], ...] = ()
    vertices_removed: tuple[int, ...] = ()
    k_delta: int = 0
    payload: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "rule": self.rule,
            "vertices_added": list(self.vertices_added),
            "edges_added": [list(e) for e in self.edges_added],
            "recolored": [list(rc) for rc in self.recolored],
            "vertices_removed": list(self.vertices_removed),
            "k_delta": self.k_delta,
            "payload": _jsonable(self.payload),
        }


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def replay(inst: Instance, record: RuleRecord) -> Instance:
    """Apply a recorded rule to an instance, reproducing its post-state.

    A record with ``payload["uncolor"]`` set marks the color-removal gadget:
    the result is an uncolored TDS (or DS, for r = 1) instance, and the
    payload carries the recomputed closure of the transformed graph.
    """
    g = inst.graph
    if record.vertices_added:
        g = g.with_vertices(record.vertices_added)
    if record.edges_added:
        g = g.with_edges(record.edges_added)
    coloring = inst.coloring
    for v, color in record.recolored:
        assert coloring is not None, "recoloring requires a colored instance"
        coloring = coloring.whiten([v]) if color == WHITE else coloring.blacken([v])
    if record.vertices_removed:
        g = g.without_vertices(record.vertices_removed)
    if coloring is not None:
        coloring = coloring.restricted_to(g)
    bip = inst.bipartition.restricted_to(g) if inst.bipartition is not None else None
    problem = inst.problem
    r = inst.r
    declared = inst.declared_closure
    if record.payload.get("uncolor"):
        problem = Problem.DS if inst.r == 1 else Problem.TDS
        r = None if problem is Problem.DS else inst.r
        coloring = None
        declared = record.payload.get("declared_closure")
    return Instance(
        problem=problem,
        graph=g,
        k=inst.k + record.k_delta,
        r=r,
        coloring=coloring,
        bipartition=bip,
        declared_closure=declared,
    )


def replay_trace(inst: Instance, trace: Iterable[RuleRecord]) -> Instance:
    for record in trace:
        inst = replay(inst, record)
    return inst


@dataclass(frozen=True)
class Decided:
    """The pipeline solved the instance outright."""

    answer: bool
    witness: Witness | None = None


@dataclass(frozen=True)
class Reduced:
    """An equivalent smaller instance plus the trace that produced it."""

    instance: Instance
    trace: tuple[RuleRecord, ...]


KernelOutcome = Decided | Reduced
