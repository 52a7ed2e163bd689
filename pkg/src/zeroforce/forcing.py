"""Forcing dynamics: one forcing round, closure, stalled and forcing sets.

A filled vertex ``u`` forces an empty vertex ``v`` when ``v`` is the only
empty neighbour of ``u``.  In skew mode ``u`` may itself be empty.
"""

from __future__ import annotations

import enum

from .graph import Graph, VertexSet

__all__ = [
    "Mode",
    "forced_vertices",
    "closure",
    "is_stalled",
    "is_forcing_set",
    "single_empty_neighbor_mask",
]


class Mode(str, enum.Enum):
    STANDARD = "standard"
    SKEW = "skew"

    def __str__(self) -> str:
        return self.value


def _check_universe(g: Graph, filled: VertexSet) -> None:
    if filled.n != g.n:
        raise ValueError(f"universe mismatch: graph has {g.n} vertices, set has {filled.n}")


def _forced_bits(masks: tuple[int, ...], n: int, filled: int, mode: Mode) -> int:
    out = 0
    empty = ~filled
    for u in range(n):
        if mode is Mode.STANDARD and not filled >> u & 1:
            continue
        e = masks[u] & empty
        if e and e & (e - 1) == 0:
            out |= e
    return out


def forced_vertices(g: Graph, filled: VertexSet, mode: Mode = Mode.STANDARD) -> VertexSet:
    """All empty vertices forced in one synchronous round."""
    _check_universe(g, filled)
    mode = Mode(mode)
    return VertexSet(g.n, _forced_bits(g.masks, g.n, filled.bits, mode))


def closure(g: Graph, filled: VertexSet, mode: Mode = Mode.STANDARD) -> VertexSet:
    """Least superset of ``filled`` closed under forcing."""
    _check_universe(g, filled)
    mode = Mode(mode)
    masks, n = g.masks, g.n
    bits = filled.bits
    while True:
        new = _forced_bits(masks, n, bits, mode)
        if not new:
            return VertexSet(n, bits)
        bits |= new


def single_empty_neighbor_mask(masks: tuple[int, ...], empty: int) -> int:
    """Mask of vertices having exactly one neighbour inside ``empty``.

    Cost is linear in the number of empty vertices, which is what makes the
    complement search cheap when the empty set is small.
    """
    ones = twos = 0
    while empty:
        low = empty & -empty
        m = masks[low.bit_length() - 1]
        twos |= ones & m
        ones |= m
        empty ^= low
    return ones & ~twos


def is_stalled(g: Graph, filled: VertexSet, mode: Mode = Mode.STANDARD) -> bool:
    """True iff no empty vertex is forced by ``filled``.

    Uses the counting form: no candidate forcer (any filled vertex, or any
    vertex at all in skew mode) has exactly one empty neighbour.
    """
    _check_universe(g, filled)
    mode = Mode(mode)
    empty = g.full_mask & ~filled.bits
    single = single_empty_neighbor_mask(g.masks, empty)
    if mode is Mode.STANDARD:
        single &= filled.bits
    return single == 0


def is_forcing_set(g: Graph, filled: VertexSet, mode: Mode = Mode.STANDARD) -> bool:
    return closure(g, filled, mode).bits == g.full_mask
