"""Exact solvers: failed forcing numbers, their decision versions, and MIS.

The failed forcing number is found by searching the *empty* set ``W``
rather than the filled set: complements are tried in order of increasing
size, and within one size in lexicographic order of their sorted ids.  The
first stalled complement therefore gives both the maximum and a canonical
witness.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .forcing import Mode, closure
from .graph import Graph, VertexSet

__all__ = [
    "FailedResult",
    "MisResult",
    "BudgetExceeded",
    "EmptyGraphError",
    "OracleLimitError",
    "failed_forcing_number",
    "failed_forcing_number_bruteforce",
    "decide_failed",
    "max_independent_set",
    "iter_stalled_complements",
    "DEFAULT_ORACLE_CAP",
]

DEFAULT_ORACLE_CAP = 20


class EmptyGraphError(ValueError):
    """Solver called on the graph with no vertices."""

    def __init__(self) -> None:
        super().__init__("empty graph has no proper subsets to evaluate")


class OracleLimitError(ValueError):
    """Brute-force oracle refused a graph above its size cap."""


class BudgetExceeded(RuntimeError):
    """The complement search performed more subset checks than allowed."""

    def __init__(self, budget: int, checks: int) -> None:
        super().__init__(f"search budget of {budget} subset checks exceeded ({checks} performed)")
        self.budget = budget
        self.checks = checks


@dataclass(frozen=True)
class FailedResult:
    """Failed (skew) forcing number with a maximum stalled witness.

    ``value is None`` means undefined: no proper subset is stalled.
    """

    mode: Mode
    value: Optional[int]
    witness: Optional[VertexSet]
    checks: int = 0

    @property
    def defined(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        return {
            "mode": self.mode.value,
            "value": self.value,
            "witness": None if self.witness is None else self.witness.sorted(),
        }


@dataclass(frozen=True)
class MisResult:
    k: int
    witness: VertexSet

    def to_json(self) -> dict:
        return {"k": self.k, "witness": self.witness.sorted()}


class _Counter:
    __slots__ = ("checks", "budget")

    def __init__(self, budget: Optional[int]) -> None:
        self.checks = 0
        self.budget = budget

    def add(self, k: int = 1) -> None:
        self.checks += k
        if self.budget is not None and self.checks > self.budget:
            raise BudgetExceeded(self.budget, self.checks)


def _complements(
    masks: tuple[int, ...],
    n: int,
    size: int,
    skew: bool,
    counter: _Counter,
    first: Optional[int] = None,
) -> Iterator[int]:
    """Yield bitmasks of stalled complements of exactly ``size`` vertices.

    Order is lexicographic on sorted vertex ids.  When ``first`` is given
    only complements whose smallest vertex is ``first`` are produced.
    """
    full = (1 << n) - 1

    def leaves(start: int, w: int, ones: int, twos: int) -> Iterator[int]:
        # Every vertex with exactly one empty neighbour so far must either be
        # empty itself (standard mode only) or be adjacent to the last pick.
        single = ones & ~twos
        need = single if skew else single & ~w
        cand = full & ~((1 << start) - 1)
        while need and cand:
            low = need & -need
            x = low.bit_length() - 1
            cand &= masks[x] if skew or w >> x & 1 else masks[x] | low
            need ^= low
        cand &= ~w
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            counter.add()
            m = masks[v]
            single = (ones | m) & ~(twos | (ones & m))
            wv = w | low
            if skew:
                if not single:
                    yield wv
            elif not single & ~wv:
                yield wv

    def rec(start: int, left: int, w: int, ones: int, twos: int) -> Iterator[int]:
        if left == 1:
            yield from leaves(start, w, ones, twos)
            return
        for v in range(start, n - left + 1):
            m = masks[v]
            yield from rec(v + 1, left - 1, w | 1 << v, ones | m, twos | (ones & m))

    if first is None:
        yield from rec(0, size, 0, 0, 0)
    elif size == 1:
        counter.add()
        # a lone empty vertex is forced by any neighbour
        if masks[first] == 0:
            yield 1 << first
    else:
        m = masks[first]
        yield from rec(first + 1, size - 1, 1 << first, m, 0)


def iter_stalled_complements(
    g: Graph, mode: Mode = Mode.STANDARD, sizes: Optional[range] = None
) -> Iterator[VertexSet]:
    """Yield every proper stalled set, ordered by complement size then lex.

    ``sizes`` restricts the complement sizes searched (default ``1..n``).
    """
    mode = Mode(mode)
    if sizes is None:
        sizes = range(1, g.n + 1)
    full = g.full_mask
    counter = _Counter(None)
    for size in sizes:
        if not 1 <= size <= g.n:
            continue
        for w in _complements(g.masks, g.n, size, mode is Mode.SKEW, counter):
            yield VertexSet(g.n, full & ~w)


def _first_with_head(args: tuple) -> tuple[Optional[int], int]:
    masks, n, size, skew, first = args
    counter = _Counter(None)
    for w in _complements(masks, n, size, skew, counter, first=first):
        return w, counter.checks
    return None, counter.checks


def _search(
    g: Graph,
    mode: Mode,
    max_size: int,
    budget: Optional[int],
    workers: int,
) -> tuple[Optional[int], int]:
    """Smallest lex-first stalled complement of size in ``1..max_size``."""
    skew = mode is Mode.SKEW
    counter = _Counter(budget)
    if workers <= 1:
        for size in range(1, max_size + 1):
            for w in _complements(g.masks, g.n, size, skew, counter):
                return w, counter.checks
        return None, counter.checks

    with ProcessPoolExecutor(max_workers=workers) as pool:
        for size in range(1, max_size + 1):
            tasks = [(g.masks, g.n, size, skew, v) for v in range(g.n - size + 1)]
            # map preserves task order, so the first hit is the lex-first one
            # no matter which worker finished first.
            hit = None
            for w, checks in pool.map(_first_with_head, tasks):
                counter.add(checks)
                if hit is None and w is not None:
                    hit = w
            if hit is not None:
                return hit, counter.checks
    return None, counter.checks


def failed_forcing_number(
    g: Graph,
    mode: Mode = Mode.STANDARD,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
) -> FailedResult:
    """Largest proper stalled subset of ``g`` in the given mode.

    ``budget`` caps the number of subset checks; ``workers > 1`` splits each
    complement size across processes with an identical result.
    """
    mode = Mode(mode)
    if g.n == 0:
        raise EmptyGraphError()
    w, checks = _search(g, mode, g.n, budget, workers)
    if w is None:
        return FailedResult(mode, None, None, checks)
    witness = VertexSet(g.n, g.full_mask & ~w)
    return FailedResult(mode, len(witness), witness, checks)


def decide_failed(
    g: Graph,
    s: int,
    mode: Mode = Mode.STANDARD,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
) -> bool:
    """Does ``g`` have a proper stalled subset with at least ``s`` vertices?"""
    mode = Mode(mode)
    if g.n == 0:
        raise EmptyGraphError()
    if s < 0:
        raise ValueError("threshold must be non-negative")
    if s >= g.n:
        return False
    w, _ = _search(g, mode, g.n - s, budget, workers)
    return w is not None


def failed_forcing_number_bruteforce(
    g: Graph, mode: Mode = Mode.STANDARD, *, cap: int = DEFAULT_ORACLE_CAP
) -> FailedResult:
    """Largest non-forcing set, by computing the closure of all ``2**n`` sets.

    Independent of the complement search; used to cross-check it.
    """
    mode = Mode(mode)
    if g.n == 0:
        raise EmptyGraphError()
    if g.n > cap:
        raise OracleLimitError(f"brute-force oracle limited to n <= {cap}, got n = {g.n}")
    full = VertexSet.full(g.n)
    best = None
    for bits in range(1 << g.n):
        s = VertexSet(g.n, bits)
        if best is not None and len(s) <= len(best):
            continue
        if closure(g, s, mode) != full:
            best = s
    if best is None:
        return FailedResult(mode, None, None, 1 << g.n)
    return FailedResult(mode, len(best), best, 1 << g.n)


def _clique_cover_bound(masks: tuple[int, ...], cand: int) -> int:
    cliques = 0
    while cand:
        low = cand & -cand
        cand ^= low
        common = masks[low.bit_length() - 1] & cand
        while common:
            nxt = common & -common
            cand ^= nxt
            common &= masks[nxt.bit_length() - 1]
        cliques += 1
    return cliques


def max_independent_set(g: Graph) -> MisResult:
    """Exact maximum independent set by branch and bound.

    Branches on a maximum-degree vertex, takes vertices of degree <= 1 for
    free, and prunes with a greedy clique cover of the remaining candidates.
    """
    masks = g.masks
    best = [0, 0]  # size, bits

    def rec(cand: int, chosen: int, size: int) -> None:
        while cand:
            # a vertex with at most one candidate neighbour is always safe to take
            forced = 0
            c = cand
            while c:
                low = c & -c
                c ^= low
                nb = masks[low.bit_length() - 1] & cand
                if nb & (nb - 1) == 0:
                    forced = low
                    break
            if not forced:
                break
            chosen |= forced
            size += 1
            cand &= ~(forced | masks[forced.bit_length() - 1])
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _clique_cover_bound(masks, cand) <= best[0]:
            return
        pivot, deg = -1, -1
        c = cand
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            d = bin(masks[v] & cand).count("1")
            if d > deg:
                pivot, deg = v, d
        bit = 1 << pivot
        rec(cand & ~(bit | masks[pivot]), chosen | bit, size + 1)
        rec(cand & ~bit, chosen, size)

    rec(g.full_mask, 0, 0)
    return MisResult(best[0], VertexSet(g.n, best[1]))
