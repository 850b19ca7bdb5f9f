"""Construction sequences: validation, cost and classification.

A construction sequence (c-sequence) lists every vertex and edge of a graph
exactly once, each edge after both of its endpoints.  Positions are 1-based.
The cost of an edge ``e = uw`` is ``(pos(e) - pos(u)) + (pos(e) - pos(w))``
and the cost of the sequence is the sum over its edges.  Regrouping that sum
by element gives the position identity

    cost = 2 * sum_e pos(e) - sum_v deg(v) * pos(v),

which is what the exact solver uses incrementally.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import GraphError, IsomorphismError, SequenceError
from .graph import Element, Graph, UnionFind, _trusted, edge, vertex

_INT64_MAX = 2**63 - 1


def _as_element(item) -> Element:
    if isinstance(item, Element):
        return item
    kind, idx = item
    return Element(str(kind), int(idx))


class ConstructionSequence:
    """A validated construction sequence of ``graph``.

    Build instances with :func:`validate`.  ``codes`` holds element codes
    (vertex ``v`` -> ``v``, edge ``i`` -> ``p + i``) in sequence order and
    ``positions[c]`` is the 1-based position of code ``c``.
    """

    __slots__ = ("graph", "codes", "positions", "__dict__")

    def __init__(self, graph: Graph, codes: Sequence[int]):
        self.graph = graph
        self.codes = tuple(int(c) for c in codes)
        pos = np.empty(graph.ell, dtype=np.int64)
        pos[list(self.codes)] = np.arange(1, len(self.codes) + 1)
        pos.setflags(write=False)
        self.positions = pos

    @classmethod
    def from_codes(cls, graph: Graph, codes: Sequence[int]) -> ConstructionSequence:
        return validate(graph, [graph.element(c) for c in codes])

    @property
    def order(self) -> tuple[Element, ...]:
        return tuple(self.graph.element(c) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def position(self, el: Element | tuple[str, int]) -> int:
        return int(self.positions[self.graph.code(_as_element(el))])

    @cached_property
    def vertex_positions(self) -> np.ndarray:
        return self.positions[: self.graph.p]

    @cached_property
    def edge_positions(self) -> np.ndarray:
        return self.positions[self.graph.p:]

    @cached_property
    def vertex_order(self) -> tuple[int, ...]:
        p = self.graph.p
        return tuple(c for c in self.codes if c < p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConstructionSequence):
            return NotImplemented
        return self.graph == other.graph and self.codes == other.codes

    def __hash__(self) -> int:
        return hash(self.codes)

    def __repr__(self) -> str:
        return "ConstructionSequence(" + " ".join(map(repr, self.order)) + ")"


@dataclass(frozen=True)
class CostBreakdown:
    per_edge: dict[int, int]
    total: int


def _describe_edge(g: Graph, i: int) -> str:
    u, w = g.edge_list[i]
    return f"e{i} ({u}-{w})"


def validate(g: Graph, order: Iterable[Element | tuple[str, int]]) -> ConstructionSequence:
    """Check that ``order`` is a construction sequence of ``g``.

    The first violation in scan order is reported.

    Raises:
        SequenceError: unknown, duplicate or missing elements, or an edge
            placed before one of its endpoints.
    """
    seen = np.zeros(g.ell, dtype=bool)
    codes = []
    for t, item in enumerate(order, start=1):
        el = _as_element(item)
        try:
            c = g.code(el)
        except GraphError as exc:
            raise SequenceError(f"position {t}: {exc}") from None
        if seen[c]:
            raise SequenceError(f"position {t}: duplicate element {el!r}")
        if el.kind == "e":
            u, w = g.edge_list[el.index]
            for end in (u, w):
                if not seen[end]:
                    raise SequenceError(
                        f"position {t}: edge {_describe_edge(g, el.index)} "
                        f"placed before its endpoint v{end}"
                    )
        seen[c] = True
        codes.append(c)
    if len(codes) != g.ell:
        missing = [repr(g.element(c)) for c in np.flatnonzero(~seen)[:5]]
        raise SequenceError(
            f"not a permutation: {g.ell - len(codes)} element(s) missing, e.g. {', '.join(missing)}"
        )
    return ConstructionSequence(g, codes)


def _check_range(g: Graph) -> None:
    # every per-edge delay is < 2*ell, so the total is < 2*ell*q
    if 2 * g.ell * max(g.q, 1) > _INT64_MAX:
        raise OverflowError(f"cost of a graph with ell={g.ell}, q={g.q} may exceed 64 bits")


def _edge_costs(s: ConstructionSequence) -> np.ndarray:
    g = s.graph
    _check_range(g)
    pos = s.positions
    return 2 * s.edge_positions - pos[g.edges[:, 0]] - pos[g.edges[:, 1]]


def edge_cost(s: ConstructionSequence, e: int | Element) -> int:
    """Delay of edge ``e`` from its two endpoints."""
    g = s.graph
    idx = e.index if isinstance(e, Element) else int(e)
    if isinstance(e, Element) and e.kind != "e":
        raise SequenceError(f"{e!r} is not an edge")
    if not 0 <= idx < g.q:
        raise SequenceError(f"unknown edge {idx}")
    u, w = g.edge_list[idx]
    pos = s.positions
    pe = int(pos[g.p + idx])
    return (pe - int(pos[u])) + (pe - int(pos[w]))


def total_cost(s: ConstructionSequence) -> CostBreakdown:
    costs = _edge_costs(s).tolist()
    return CostBreakdown(per_edge=dict(enumerate(costs)), total=sum(costs))


def cost(s: ConstructionSequence) -> int:
    """Shorthand for ``total_cost(s).total``."""
    return int(_edge_costs(s).sum())


def cost_by_position_identity(s: ConstructionSequence) -> int:
    """``2 * sum_e pos(e) - sum_v deg(v) * pos(v)``; equals the total cost."""
    _check_range(s.graph)
    return int(2 * s.edge_positions.sum() - (s.graph.degrees * s.vertex_positions).sum())


def is_easy(s: ConstructionSequence) -> bool:
    """Every vertex precedes every edge."""
    g = s.graph
    if g.q == 0 or g.p == 0:
        return True
    return int(s.vertex_positions.max()) < int(s.edge_positions.min())


def is_greedy(s: ConstructionSequence) -> bool:
    """No vertex sits strictly between an edge and the later of its endpoints."""
    g = s.graph
    if g.q == 0:
        return True
    pos = s.positions
    later = np.maximum(pos[g.edges[:, 0]], pos[g.edges[:, 1]])
    vpos = np.sort(s.vertex_positions)
    between = np.searchsorted(vpos, s.edge_positions, "left") - np.searchsorted(vpos, later, "right")
    return not bool(np.any(between > 0))


def component_profile(s: ConstructionSequence) -> list[int]:
    """Component count of every initial subgraph ``G_1 .. G_ell``."""
    g = s.graph
    uf = UnionFind(g.p)
    uf.components = 0
    out = []
    for c in s.codes:
        if c < g.p:
            uf.components += 1
        else:
            u, w = g.edge_list[c - g.p]
            uf.union(u, w)
        out.append(uf.components)
    return out


def is_nearly_connected(s: ConstructionSequence) -> bool:
    """Every initial subgraph has at most two components."""
    return max(component_profile(s), default=0) <= 2


def consecutive_vertex_pairs(s: ConstructionSequence) -> int:
    """Number of positions ``i`` where both ``x_i`` and ``x_{i+1}`` are vertices."""
    p = s.graph.p
    c = s.codes
    return sum(1 for a, b in zip(c, c[1:]) if a < p and b < p)


def prefix_subgraph(s: ConstructionSequence, i: int) -> Graph:
    """Graph induced by the first ``i`` elements of ``s``.

    Its vertices are the placed vertices renumbered in ascending original
    order; ``labels`` records the original vertex numbers.
    """
    return prefix(s, i).graph


def prefix(s: ConstructionSequence, i: int) -> ConstructionSequence:
    """The first ``i`` elements of ``s`` as a c-sequence of its prefix subgraph."""
    g = s.graph
    if not 1 <= i <= len(s):
        raise SequenceError(f"prefix length {i} outside [1, {len(s)}]")
    head = s.codes[:i]
    verts = sorted(c for c in head if c < g.p)
    new_id = {v: k for k, v in enumerate(verts)}
    edge_codes = sorted(c for c in head if c >= g.p)
    pairs = [(new_id[g.edge_list[c - g.p][0]], new_id[g.edge_list[c - g.p][1]]) for c in edge_codes]
    sub = _trusted(len(verts), pairs)
    sub.labels = tuple(str(v) for v in verts)
    new_code = {v: k for k, v in enumerate(verts)}
    new_code.update({c: len(verts) + k for k, c in enumerate(edge_codes)})
    return ConstructionSequence(sub, [new_code[c] for c in head])


def map_sequence(s: ConstructionSequence, iso: Mapping[int, int] | Sequence[int], target: Graph) -> ConstructionSequence:
    """Carry ``s`` along the vertex bijection ``iso`` onto ``target``.

    Raises:
        IsomorphismError: if ``iso`` is not a bijection or does not map the
            edge set of ``s.graph`` onto that of ``target``.
    """
    g = s.graph
    phi = [int(iso[v]) for v in range(g.p)]
    if g.p != target.p or g.q != target.q or sorted(phi) != list(range(target.p)):
        raise IsomorphismError("vertex map is not a bijection between graphs of equal size")
    edge_image = []
    for u, w in g.edge_list:
        a, b = phi[u], phi[w]
        key = (a, b) if a < b else (b, a)
        j = target.edge_index.get(key)
        if j is None:
            raise IsomorphismError(f"edge {u}-{w} maps to non-edge {a}-{b}")
        edge_image.append(j)
    out = []
    for c in s.codes:
        out.append(vertex(phi[c]) if c < g.p else edge(edge_image[c - g.p]))
    return validate(target, out)


def swap_adjacent(s: ConstructionSequence, i: int) -> ConstructionSequence:
    """Exchange the elements at 1-based positions ``i`` and ``i + 1``."""
    codes = list(s.codes)
    if not 1 <= i < len(codes):
        raise SequenceError(f"cannot swap at position {i}")
    codes[i - 1], codes[i] = codes[i], codes[i - 1]
    return ConstructionSequence.from_codes(s.graph, codes)
