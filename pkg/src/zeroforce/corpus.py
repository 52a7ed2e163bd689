"""Graph corpora: seeded random graphs and small graphs up to isomorphism.

Random graphs are drawn with SplitMix64 so that a seed means the same graph
in any language.  Edge ``(u, v)`` for ``u < v`` in lexicographic order
consumes one 64-bit output ``x`` and is kept when ``(x >> 11) * 2**-53 < p``.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator

from .graph import Graph, is_connected

MASK64 = (1 << 64) - 1
MAX_RETRIES = 10_000


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014)."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53


class ConnectivityError(RuntimeError):
    pass


def gnp(n: int, p: float, rng: SplitMix64) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must be between 0 and 1")
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n: int, p: float, rng: SplitMix64, max_retries: int = MAX_RETRIES) -> Graph:
    """Draw G(n, p) graphs until one is connected."""
    if n < 1:
        raise ValueError("n must be at least 1")
    for _ in range(max_retries):
        g = gnp(n, p, rng)
        if is_connected(g):
            return g
    raise ConnectivityError(f"no connected G({n}, {p}) graph after {max_retries} draws")


def random_connected_graphs(count: int, n: int, p: float, seed: int, max_edges: int | None = None) -> list[Graph]:
    """``count`` connected graphs from one seeded stream.

    With ``max_edges`` set, draws with more edges are discarded (this also
    consumes retries).
    """
    rng = SplitMix64(seed)
    out = []
    retries = 0
    while len(out) < count:
        g = random_connected_graph(n, p, rng)
        if max_edges is not None and g.m > max_edges:
            retries += 1
            if retries > MAX_RETRIES:
                raise ConnectivityError(f"no graph with at most {max_edges} edges after {MAX_RETRIES} draws")
            continue
        out.append(g)
    return out


def _canonical_key(n: int, edges: list[tuple[int, int]]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism.

    Brute force over labelled graphs and vertex permutations; fine for
    ``n <= 5`` (21 graphs at ``n = 5``).
    """
    pairs = list(combinations(range(n), 2))
    seen: dict[tuple, Graph] = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = Graph.from_edges(n, edges)
        if not is_connected(g):
            continue
        key = _canonical_key(n, edges)
        if key not in seen:
            seen[key] = Graph.from_edges(n, key)
    return sorted(seen.values(), key=lambda g: (g.m, g.edges()))


def labelled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if not connected_only or is_connected(g):
            yield g
