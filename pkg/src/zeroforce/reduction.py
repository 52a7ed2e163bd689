"""Gadget reduction from INDEPENDENT SET to failed (skew) zero forcing.

For a connected source graph with ``n`` vertices and ``m`` edges the gadget
has the original vertices, a path ``e^0 .. e^{2n}`` for every edge ``e``
whose head ``e^0`` subdivides ``e``, and one apex vertex adjacent to every
head.  Its failed and skew failed forcing numbers both equal
``(2n+1)m + alpha``, where ``alpha`` is the independence number of the
source.  This module builds the gadget and checks that identity, together
with the structural facts about large stalled sets that imply it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

from .forcing import Mode, is_stalled
from .graph import Graph, VertexSet, is_connected
from .solvers import FailedResult, failed_forcing_number, max_independent_set

__all__ = [
    "Original",
    "PathVertex",
    "Epsilon",
    "EPSILON",
    "ReducedGraph",
    "ReductionCertificate",
    "ObservationReport",
    "connectify",
    "reduce",
    "build_witness",
    "check_observation_3",
    "check_observations_4_to_7",
    "verify_theorem",
]


@dataclass(frozen=True)
class Original:
    vertex: int


@dataclass(frozen=True)
class PathVertex:
    edge: int
    layer: int


@dataclass(frozen=True)
class Epsilon:
    pass


EPSILON = Epsilon()
Label = Union[Original, PathVertex, Epsilon]


def _label_json(label: Label) -> dict:
    if isinstance(label, Original):
        return {"kind": "original", "vertex": label.vertex}
    if isinstance(label, PathVertex):
        return {"kind": "path", "edge": label.edge, "layer": label.layer}
    return {"kind": "epsilon"}


@dataclass(frozen=True)
class ReducedGraph:
    """The gadget graph with a map from its vertex ids back to labels.

    Vertex ids: ``0 .. n-1`` are the source vertices, then one block of
    ``2n+1`` ids per source edge (in canonical edge order) for ``e^0 ..
    e^{2n}``, and the apex is the last id.
    """

    graph: Graph
    source: Graph
    edges: tuple[tuple[int, int], ...]

    @property
    def n_src(self) -> int:
        return self.source.n

    @property
    def m_src(self) -> int:
        return len(self.edges)

    @property
    def path_length(self) -> int:
        return 2 * self.n_src + 1

    @property
    def epsilon(self) -> int:
        return self.graph.n - 1

    def path_id(self, edge: int, layer: int) -> int:
        if not (0 <= edge < self.m_src and 0 <= layer < self.path_length):
            raise IndexError(f"no path vertex e{edge}^{layer}")
        return self.n_src + edge * self.path_length + layer

    def label(self, v: int) -> Label:
        if not 0 <= v < self.graph.n:
            raise IndexError(v)
        if v < self.n_src:
            return Original(v)
        if v == self.epsilon:
            return EPSILON
        edge, layer = divmod(v - self.n_src, self.path_length)
        return PathVertex(edge, layer)

    @property
    def labeling(self) -> list[Label]:
        return [self.label(v) for v in range(self.graph.n)]

    @property
    def original_mask(self) -> int:
        return (1 << self.n_src) - 1

    @property
    def path_mask(self) -> int:
        return ((1 << (self.m_src * self.path_length)) - 1) << self.n_src

    def labeling_json(self) -> dict:
        return {
            "n": self.n_src,
            "m": self.m_src,
            "edges": [list(e) for e in self.edges],
            "labels": [_label_json(self.label(v)) for v in range(self.graph.n)],
        }


def connectify(g: Graph) -> Graph:
    """Add a vertex adjacent to every existing vertex."""
    if g.n == 0:
        raise ValueError("connectify needs at least one vertex")
    apex = g.n
    return Graph.from_edges(g.n + 1, g.edges() + [(v, apex) for v in range(g.n)])


def reduce(g: Graph) -> ReducedGraph:
    if g.n < 2:
        raise ValueError(f"source graph needs at least 2 vertices, got {g.n}")
    if not is_connected(g):
        raise ValueError("source graph is not connected (use connectify first)")
    if g.m == 0:
        raise ValueError("source graph has no edges")
    n = g.n
    edges = tuple(g.edges())
    plen = 2 * n + 1
    total = plen * len(edges) + n + 1
    eps = total - 1
    gadget_edges = []
    for i, (a, b) in enumerate(edges):
        head = n + i * plen
        gadget_edges += [(a, head), (b, head), (eps, head)]
        gadget_edges += [(head + j, head + j + 1) for j in range(plen - 1)]
    return ReducedGraph(Graph.from_edges(total, gadget_edges), g, edges)


def build_witness(rg: ReducedGraph, u: VertexSet) -> VertexSet:
    """Stalled set made of an independent set plus every path vertex.

    Skew stalled, hence also stalled, whenever ``u`` is independent.
    """
    if u.n != rg.n_src:
        raise ValueError(f"independent set lives on {u.n} vertices, source has {rg.n_src}")
    if not rg.source.is_independent(u):
        raise ValueError("vertex set is not independent in the source graph")
    return VertexSet(rg.graph.n, u.bits | rg.path_mask)


def _require_stalled(rg: ReducedGraph, s: VertexSet) -> None:
    if s.n != rg.graph.n:
        raise ValueError(f"set lives on {s.n} vertices, gadget has {rg.graph.n}")
    if not is_stalled(rg.graph, s, Mode.STANDARD):
        raise ValueError("set is not stalled")


def check_observation_3(rg: ReducedGraph, s: VertexSet) -> bool:
    """A stalled set holding two consecutive path vertices holds the whole path."""
    _require_stalled(rg, s)
    block = (1 << rg.path_length) - 1
    for e in range(rg.m_src):
        path = (s.bits >> rg.path_id(e, 0)) & block
        if path & (path >> 1) and path != block:
            return False
    return True


@dataclass(frozen=True)
class ObservationReport:
    """Verdicts on a stalled set's structure; ``applies`` is the size hypothesis.

    ``obs5a`` concerns stalled sets that keep the apex; theory says no
    large stalled set does, so it is usually vacuous (``obs5a_vacuous``).
    """

    size: int
    threshold: int
    applies: bool
    obs4: bool
    obs5a: bool
    obs5: bool
    obs6: bool
    obs5a_vacuous: bool

    @property
    def ok(self) -> bool:
        return self.obs4 and self.obs5a and self.obs5 and self.obs6


def _component_union(g: Graph, bits: int) -> bool:
    # closed under adjacency <=> union of connected components
    masks = g.masks
    for v in range(g.n):
        if bits >> v & 1 and masks[v] & ~bits:
            return False
    return True


def check_observations_4_to_7(rg: ReducedGraph, s: VertexSet) -> ObservationReport:
    """Check the structure forced on proper stalled sets of size ``(2n+1)m + 2`` or more.

    For such a set: every path vertex is in it, the apex is not, and its
    source part is independent (so its size is at most ``(2n+1)m + alpha``).
    Sets below the size threshold pass vacuously.
    """
    _require_stalled(rg, s)
    if not s.is_proper():
        raise ValueError("set must be a proper subset")
    threshold = rg.path_length * rg.m_src + 2
    applies = len(s) >= threshold
    has_eps = bool(s.bits >> rg.epsilon & 1)
    src = VertexSet(rg.n_src, s.bits & rg.original_mask)
    obs4 = obs5 = obs6 = obs5a = True
    if applies:
        obs4 = s.bits & rg.path_mask == rg.path_mask
        obs5 = not has_eps
        obs6 = rg.source.is_independent(src)
        if has_eps:
            obs5a = _component_union(rg.source, src.bits)
    return ObservationReport(
        size=len(s),
        threshold=threshold,
        applies=applies,
        obs4=obs4,
        obs5a=obs5a,
        obs5=obs5,
        obs6=obs6,
        obs5a_vacuous=not (applies and has_eps),
    )


@dataclass(frozen=True)
class ReductionCertificate:
    n: int
    m: int
    k: int
    standard: FailedResult
    skew: FailedResult

    @property
    def predicted(self) -> int:
        return (2 * self.n + 1) * self.m + self.k

    @property
    def verdict(self) -> bool:
        return self.standard.value == self.predicted and self.skew.value == self.predicted

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "predicted": self.predicted,
            "standard": self.standard.value,
            "skew": self.skew.value,
            "verdict": self.verdict,
        }


def verify_theorem(
    g: Graph, *, budget: Optional[int] = None, workers: int = 1, concurrent: bool = False
) -> ReductionCertificate:
    """Solve both failed forcing numbers of the gadget and compare with theory.

    Nothing is assumed from the predicted value: each search proves its
    answer by rejecting every smaller complement.  ``concurrent`` runs the
    two modes on separate threads.
    """
    rg = reduce(g)
    k = max_independent_set(g).k
    solve = lambda mode: failed_forcing_number(rg.graph, mode, budget=budget, workers=workers)  # noqa: E731
    if concurrent:
        with ThreadPoolExecutor(max_workers=2) as pool:
            std, skw = pool.map(solve, (Mode.STANDARD, Mode.SKEW))
    else:
        std, skw = solve(Mode.STANDARD), solve(Mode.SKEW)
    return ReductionCertificate(g.n, rg.m_src, k, std, skw)
