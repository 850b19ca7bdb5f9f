"""Exhaustive ground truth for small graphs.

Construction sequences are exactly the linear extensions of the poset in
which every vertex lies below its incident edges.  The enumerator backtracks
over the elements that are *available* at each step: unplaced vertices, and
unplaced edges whose endpoints are both placed.  Candidates are tried in
ascending element code, so the stream order is deterministic.

Costs here are accumulated edge by edge straight from the delay definition,
independently of the position identity used by the solver.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import CapExceeded
from .graph import Graph
from .sequence import ConstructionSequence

ENUMERATION_CAP = 14
COUNTING_CAP = 20
WITNESS_CAP = 32
_MEMO_THRESHOLD = 12


def _check_cap(g: Graph, cap: int | None, what: str, hint: str) -> None:
    if cap is not None and g.ell > cap:
        raise CapExceeded(what, g.ell, cap, hint)


def _walk(g: Graph) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(codes, cost)`` for every c-sequence of ``g``."""
    p, ell = g.p, g.ell
    ends = g.edge_list
    incident = g.incident
    pos = [0] * p
    placed = [False] * p
    seq = [0] * ell

    def rec(t, cost, avail):
        if t > ell:
            yield tuple(seq), cost
            return
        for v in range(p):
            if placed[v]:
                continue
            placed[v] = True
            pos[v] = t
            seq[t - 1] = v
            fresh = [i for i in incident[v] if placed[ends[i][0]] and placed[ends[i][1]]]
            yield from rec(t + 1, cost, sorted(avail + fresh) if fresh else avail)
            placed[v] = False
        for k, i in enumerate(avail):
            u, w = ends[i]
            seq[t - 1] = p + i
            yield from rec(t + 1, cost + (t - pos[u]) + (t - pos[w]), avail[:k] + avail[k + 1:])

    yield from rec(1, 0, [])


def enumerate_csequences(g: Graph, cap: int | None = ENUMERATION_CAP) -> Iterator[ConstructionSequence]:
    """Yield every construction sequence of ``g`` exactly once.

    Raises:
        CapExceeded: if ``g`` has more than ``cap`` elements.
    """
    _check_cap(g, cap, "enumeration", "use construction_number for counting only")
    for codes, _cost in _walk(g):
        yield ConstructionSequence(g, codes)


def _count_by_enumeration(g: Graph) -> int:
    return sum(1 for _ in _walk(g))


def count_by_memo(g: Graph) -> int:
    """Construction number via memoisation on (placed vertices, free edges).

    Once both endpoints of an edge are placed the edge is unconstrained, so
    the number of completions depends only on the placed vertex set and the
    number of available edges not yet placed.
    """
    p = g.p
    adj = g.adjacency_masks
    full = (1 << p) - 1

    @lru_cache(maxsize=None)
    def completions(placed: int, free: int) -> int:
        if placed == full:
            return math.factorial(free)
        total = free * completions(placed, free - 1) if free else 0
        for v in range(p):
            bit = 1 << v
            if not placed & bit:
                total += completions(placed | bit, free + (adj[v] & placed).bit_count())
        return total

    try:
        return completions(0, 0)
    finally:
        completions.cache_clear()


def construction_number(g: Graph, cap: int | None = COUNTING_CAP) -> int:
    """Number of construction sequences of ``g``."""
    _check_cap(g, cap, "counting", "raise the counting cap")
    if g.ell < _MEMO_THRESHOLD:
        return _count_by_enumeration(g)
    return count_by_memo(g)


@dataclass
class EnumerationReport:
    count: int
    min_cost: int
    max_cost: int
    min_count: int
    max_count: int
    min_witnesses: list[ConstructionSequence] = field(default_factory=list)
    max_witnesses: list[ConstructionSequence] = field(default_factory=list)
    histogram: dict[int, int] | None = None


def brute_extremes(
    g: Graph,
    want_histogram: bool = False,
    witness_cap: int | None = WITNESS_CAP,
    cap: int | None = ENUMERATION_CAP,
) -> EnumerationReport:
    """Exact min and max cost by visiting every construction sequence.

    ``witness_cap=None`` keeps every optimal sequence.  ``min_count`` and
    ``max_count`` are always exact.
    """
    _check_cap(g, cap, "enumeration", "use the solver for min cost, formulas for max cost")
    lo = math.inf
    hi = -math.inf
    lo_w: list[tuple[int, ...]] = []
    hi_w: list[tuple[int, ...]] = []
    n_lo = n_hi = total = 0
    hist: Counter[int] = Counter()
    limit = math.inf if witness_cap is None else witness_cap

    for codes, c in _walk(g):
        total += 1
        if want_histogram:
            hist[c] += 1
        if c < lo:
            lo, n_lo, lo_w = c, 0, []
        if c == lo:
            n_lo += 1
            if len(lo_w) < limit:
                lo_w.append(codes)
        if c > hi:
            hi, n_hi, hi_w = c, 0, []
        if c == hi:
            n_hi += 1
            if len(hi_w) < limit:
                hi_w.append(codes)
    return EnumerationReport(
        count=total,
        min_cost=int(lo),
        max_cost=int(hi),
        min_count=n_lo,
        max_count=n_hi,
        min_witnesses=[ConstructionSequence(g, w) for w in lo_w],
        max_witnesses=[ConstructionSequence(g, w) for w in hi_w],
        histogram=dict(sorted(hist.items())) if want_histogram else None,
    )
