"""Simple undirected graphs, vertex subsets, and their text formats.

Vertices are always the integers ``0 .. n-1``.  Adjacency is kept both as
sorted neighbour tuples and as integer bitmasks; every hot loop in the
package works on the bitmasks.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "VertexSet",
    "GraphFormatError",
    "DuplicateEdgeWarning",
    "parse_graph",
    "serialize_graph",
    "is_connected",
    "FORMATS",
]

FORMATS = ("edgelist", "dimacs")


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed."""


class DuplicateEdgeWarning(UserWarning):
    """Emitted when a graph file lists the same edge more than once."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, eq=False)
class VertexSet:
    """A subset of ``range(n)`` stored as a bitmask.

    Sets from different universes never mix: every binary operation checks
    that both operands share the same ``n``.
    """

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("universe size must be non-negative")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits outside universe of size {self.n}")

    @classmethod
    def of(cls, n: int, members: Iterable[int] = ()) -> "VertexSet":
        bits = 0
        for v in members:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range for n={n}")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"universe mismatch: {self.n} != {other.n}")

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return _popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.bits ^ other.bits)

    def __invert__(self) -> "VertexSet":
        return VertexSet(self.n, ~self.bits & ((1 << self.n) - 1))

    def complement(self) -> "VertexSet":
        return ~self

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: "VertexSet") -> bool:
        return other <= self

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.bits != other.bits

    def __gt__(self, other: "VertexSet") -> bool:
        return other < self

    def issubset(self, other: "VertexSet") -> bool:
        return self <= other

    def is_proper(self) -> bool:
        """True unless this is the whole vertex set."""
        return self.bits != (1 << self.n) - 1

    def sorted(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, self))}}})"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    ``duplicates`` counts repeated edges that were collapsed while building
    the graph; it is metadata and does not take part in equality.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    duplicates: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match n")
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            mask = 0
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if u <= prev:
                    raise ValueError(f"neighbours of {v} not sorted and unique")
                prev = u
                mask |= 1 << u
            masks.append(mask)
        for v, mask in enumerate(masks):
            for u in self.adjacency[v]:
                if not masks[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from ``(u, v)`` pairs, collapsing duplicates.

        Raises :class:`ValueError` on self-loops or out-of-range endpoints.
        """
        nbrs: list[set[int]] = [set() for _ in range(n)]
        dup = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in nbrs[u]:
                dup += 1
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), duplicates=dup)

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmask for each vertex."""
        return self._masks  # type: ignore[attr-defined]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Canonical edge list: pairs ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, members)

    def is_independent(self, s: VertexSet) -> bool:
        if s.n != self.n:
            raise ValueError(f"universe mismatch: {self.n} != {s.n}")
        masks = self.masks
        return all(masks[v] & s.bits == 0 for v in s)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                queue.append(u)
    return count == g.n


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def _build(n: int, edges: list[tuple[int, int]], lines: list[int]) -> Graph:
    nbrs: list[set[int]] = [set() for _ in range(n)]
    dup = 0
    for (u, v), lineno in zip(edges, lines):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex id out of range in edge ({u}, {v})")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if v in nbrs[u]:
            dup += 1
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
    if dup:
        warnings.warn(f"collapsed {dup} duplicate edge(s)", DuplicateEdgeWarning, stacklevel=3)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs), duplicates=dup)


def _parse_edgelist(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        a, b = _ints(tokens, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError(f"line {lineno}: negative header value")
            header = (a, b)
        else:
            edges.append((a, b))
            lines.append(lineno)
    if header is None:
        raise GraphFormatError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} were given")
    return _build(n, edges, lines)


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError(f"line {lineno}: second problem line")
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise GraphFormatError(f"line {lineno}: expected 'p edge n m'")
            n, _m = _ints(tokens[2:], lineno)
            if n < 0 or _m < 0:
                raise GraphFormatError(f"line {lineno}: negative header value")
        elif kind == "e":
            if n is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e u v'")
            u, v = _ints(tokens[1:], lineno)
            edges.append((u - 1, v - 1))
            lines.append(lineno)
        else:
            raise GraphFormatError(f"line {lineno}: unknown line type {kind!r}")
    if n is None:
        raise GraphFormatError("missing 'p edge n m' line")
    return _build(n, edges, lines)


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse graph text in ``edgelist`` or ``dimacs`` format.

    Edge-list ids are 0-based; DIMACS ids are 1-based and shifted down.
    Duplicate edges are collapsed: a :class:`DuplicateEdgeWarning` is
    issued and ``Graph.duplicates`` records how many.
    """
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edgelist") -> str:
    edges = g.edges()
    if format == "edgelist":
        body = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    elif format == "dimacs":
        body = [f"p edge {g.n} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "\n".join(body) + "\n"
