"""Exact minimum construction cost.

Minimum-cost sequences are greedy: every vertex is immediately followed by
all edges it makes available.  Edge order inside such a batch does not change
the cost, so a greedy sequence is fixed (cost-wise) by its vertex order and
the search runs over vertex orders only.

Subset DP
---------
Write the cost as ``2 * sum_e pos(e) - sum_v deg(v) * pos(v)``.  If the set
``S`` of vertices is already placed greedily, exactly ``|S| + e(S)`` elements
are down (``e(S)`` = edges inside ``S``), so the next vertex ``v`` lands at
``L = |S| + e(S) + 1`` and its ``k = |N(v) ∩ S|`` new edges at ``L+1 .. L+k``.
The step adds

    2 * (k*L + k*(k+1)/2) - deg(v) * L

to the cost, which depends on ``(S, v)`` only.  The minimum is therefore a
shortest path through the subset lattice from the empty set to ``V``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CapExceeded
from .graph import Graph
from .sequence import ConstructionSequence, cost

DP_CAP = 24
NODE_BUDGET = 2_000_000


@dataclass
class SearchResult:
    optimal_cost: int
    witness: ConstructionSequence
    vertex_order: list[int]
    stats: dict = field(default_factory=dict)
    proven: bool = True


def greedy_codes(g: Graph, vertex_order: Sequence[int]) -> list[int]:
    """Element codes of the greedy sequence induced by ``vertex_order``.

    Each vertex is followed by its newly available edges in ascending index.
    """
    if sorted(vertex_order) != list(range(g.p)):
        raise ValueError("vertex order must be a permutation of the vertices")
    placed = [False] * g.p
    ends = g.edge_list
    codes = []
    for v in vertex_order:
        placed[v] = True
        codes.append(v)
        for i in g.incident[v]:
            u, w = ends[i]
            if placed[u] and placed[w]:
                codes.append(g.p + i)
    return codes


def greedy_cost(g: Graph, vertex_order: Sequence[int]) -> tuple[int, ConstructionSequence]:
    """Cost and sequence of the greedy construction with this vertex order."""
    seq = ConstructionSequence(g, greedy_codes(g, vertex_order))
    return cost(seq), seq


def _step_costs(pc_plus_ein, nb_count, deg_v):
    # position of the new vertex, then its k edges right behind it
    L = pc_plus_ein + 1
    k = nb_count
    return 2 * (k * L + k * (k + 1) // 2) - deg_v * L


def min_cost_exact(g: Graph, cap: int = DP_CAP) -> SearchResult:
    """Minimum cost by dynamic programming over placed-vertex subsets.

    The witness is the lexicographically smallest optimal vertex order.

    Raises:
        CapExceeded: for more than ``cap`` vertices; use
            :func:`min_cost_branch_bound` instead.
    """
    p = g.p
    if p > cap:
        raise CapExceeded("subset DP", p, cap, "use min_cost_branch_bound")
    start = time.perf_counter()
    if p == 0:
        seq = ConstructionSequence(g, [])
        return SearchResult(0, seq, [], {"states": 1, "table_size": 1, "elapsed": 0.0})

    n_states = 1 << p
    adj = np.array(g.adjacency_masks, dtype=np.uint32)
    deg = g.degrees.tolist()
    masks = np.arange(n_states, dtype=np.uint32)
    pc = np.bitwise_count(masks).astype(np.int64)
    ein = np.zeros(n_states, dtype=np.int64)
    for v in range(p):
        half = 1 << v
        ein[half: 2 * half] = ein[:half] + np.bitwise_count(masks[:half] & adj[v])
    base = pc + ein

    togo = np.zeros(n_states, dtype=np.int64)
    for size in range(p - 1, -1, -1):
        layer = masks[pc == size]
        best = np.full(layer.size, np.iinfo(np.int64).max, dtype=np.int64)
        for v in range(p):
            bit = np.uint32(1 << v)
            free = (layer & bit) == 0
            S = layer[free]
            k = np.bitwise_count(S & adj[v]).astype(np.int64)
            cand = _step_costs(base[S], k, deg[v]) + togo[S | bit]
            best[free] = np.minimum(best[free], cand)
        togo[layer] = best

    order = []
    S = 0
    adj_int = g.adjacency_masks
    for _ in range(p):
        for v in range(p):
            if S >> v & 1:
                continue
            k = (S & adj_int[v]).bit_count()
            step = int(_step_costs(int(base[S]), k, deg[v]))
            if step + int(togo[S | 1 << v]) == int(togo[S]):
                order.append(v)
                S |= 1 << v
                break
    optimum = int(togo[0])
    value, witness = greedy_cost(g, order)
    assert value == optimum, (value, optimum)
    stats = {"states": n_states, "table_size": n_states, "elapsed": time.perf_counter() - start}
    return SearchResult(optimum, witness, order, stats)


def _grow_from(g: Graph, start: int) -> list[int]:
    # connected growth: next vertex has the most placed neighbours, then the
    # fewest unplaced ones, so edges close as early as possible
    S = 1 << start
    order = [start]
    deg = g.degrees.tolist()
    adj = g.adjacency_masks
    while len(order) < g.p:
        best_v, best_key = -1, None
        for v in range(g.p):
            if S >> v & 1:
                continue
            k = (S & adj[v]).bit_count()
            key = (-k, deg[v] - k, v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        S |= 1 << best_v
        order.append(best_v)
    return order


def _heuristic_order(g: Graph, starts: int = 16) -> list[int]:
    """Best connected-growth order over a few low-degree start vertices."""
    if g.p == 0:
        return []
    deg = g.degrees.tolist()
    candidates = sorted(range(g.p), key=lambda v: (deg[v], v))[:starts]
    best_order, best_cost = [], None
    for v in candidates:
        order = _grow_from(g, v)
        c, _ = greedy_cost(g, order)
        if best_cost is None or c < best_cost:
            best_order, best_cost = order, c
    return best_order


def _batch_bound(r: int, m: int, after_vertex: bool) -> int:
    """Least cost of ``m`` edges closed by ``r`` future vertex placements.

    With ``nz`` placements closing at least one edge, the batch sizes are
    spread as evenly as possible.  A batch whose vertex directly follows
    another vertex (one that closed nothing) saves ``k``; there are at most
    ``r - nz`` such vertices, plus the current last element.
    """
    if m == 0:
        return 0
    best = None
    for nz in range(1, min(r, m) + 1):
        a, extra = divmod(m, nz)
        value = 3 * (extra * (a + 1) * (a + 2) + (nz - extra) * a * (a + 1)) // 2
        value += max(0, nz - (r - nz) - int(after_vertex))
        if best is None or value < best:
            best = value
    return best if best is not None else 0


def min_cost_branch_bound(
    g: Graph,
    max_nodes: int | None = NODE_BUDGET,
    time_limit: float | None = None,
    bound: str = "basic",
) -> SearchResult:
    """Depth-first search over greedy vertex orders with pruning.

    Two prunes are used.  The lower bound adds 3 per unplaced edge to the
    delays already fixed (no edge can cost less than 3); ``bound="pending"``
    additionally charges each half-placed edge for the distance to its
    placed endpoint.  ``bound="batch"`` instead charges future vertices for
    their edge batches: a vertex closing ``k`` edges costs at least
    ``3k(k+1)/2``, plus ``k`` unless the element just before it is a vertex
    that closed no edge.  A transposition table keyed by the placed vertex set
    keeps the best partial cost in position-identity form, whose remaining
    cost depends only on that set.

    ``proven`` is False when the node or time budget ran out; the result is
    then the best sequence found.
    """
    if bound not in ("basic", "pending", "batch"):
        raise ValueError(f"unknown bound {bound!r}")
    start = time.perf_counter()
    p, q = g.p, g.q
    adj = g.adjacency_masks
    deg = g.degrees.tolist()
    ends = g.edge_list
    incident = g.incident

    incumbent_order = _heuristic_order(g)
    best_cost, _ = greedy_cost(g, incumbent_order)
    best_order = list(incumbent_order)
    full = (1 << p) - 1
    memo: dict[int, int] = {}
    pos = [0] * p
    order: list[int] = []
    nodes = 0
    exhausted = False

    def lower_bound(S: int, t: int, fixed: int, placed_edges: int, after_vertex: bool) -> int:
        if bound == "batch":
            return fixed + _batch_bound(p - len(order), q - placed_edges, after_vertex)
        lb = fixed + 3 * (q - placed_edges)
        if bound == "pending":
            for i, (u, w) in enumerate(ends):
                a, b = S >> u & 1, S >> w & 1
                if a != b:
                    pu = pos[u] if a else pos[w]
                    # other endpoint at >= t+1, edge at >= t+2
                    lb += (t + 2 - pu) + 1 - 3
        return lb

    def rec(S: int, t: int, fixed: int, ident: int, placed_edges: int, after_vertex: bool) -> None:
        nonlocal best_cost, best_order, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if (max_nodes is not None and nodes > max_nodes) or (
            time_limit is not None and nodes % 1024 == 0 and time.perf_counter() - start > time_limit
        ):
            exhausted = True
            return
        if S == full:
            if fixed < best_cost:
                best_cost, best_order = fixed, list(order)
            return
        if lower_bound(S, t, fixed, placed_edges, after_vertex) >= best_cost:
            return
        seen = memo.get(S)
        if seen is not None and ident >= seen:
            return
        memo[S] = ident
        moves = []
        for v in range(p):
            if S >> v & 1:
                continue
            k = (S & adj[v]).bit_count()
            moves.append((_step_costs(t, k, deg[v]), v, k))
        moves.sort()
        for step, v, k in moves:
            L = t + 1
            pos[v] = L
            delay = 0
            j = 0
            for i in incident[v]:
                u, w = ends[i]
                other = w if u == v else u
                if S >> other & 1:
                    j += 1
                    delay += (L + j - pos[other]) + j
            order.append(v)
            rec(S | 1 << v, t + 1 + k, fixed + delay, ident + step, placed_edges + k, k == 0)
            order.pop()

    rec(0, 0, 0, 0, 0, False)
    value, witness = greedy_cost(g, best_order)
    assert value == best_cost
    stats = {
        "states": nodes,
        "table_size": len(memo),
        "elapsed": time.perf_counter() - start,
    }
    return SearchResult(best_cost, witness, best_order, stats, proven=not exhausted)


def min_cost(g: Graph, dp_cap: int = DP_CAP, **bb_options) -> SearchResult:
    """Exact DP up to ``dp_cap`` vertices, budgeted branch-and-bound beyond."""
    if g.p <= dp_cap:
        return min_cost_exact(g, cap=dp_cap)
    return min_cost_branch_bound(g, **bb_options)
