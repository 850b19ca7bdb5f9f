"""Simple undirected graphs, the named graph families, and structural helpers.

Vertices are the integers ``0 .. p-1``.  Edges are identified by their index
``0 .. q-1`` in construction order and store their endpoints as ``(min, max)``.
Every element of a graph (vertex or edge) also has an integer *code*: vertex
``v`` has code ``v`` and edge ``i`` has code ``p + i``.  Codes are what the
sequence, oracle and solver modules work with internally.

Family labelings are fixed so that witnesses are reproducible:

=================  =========================================================
path(n)            ``0 - 1 - ... - n-1``
cycle(n)           path plus the closing edge ``(0, n-1)``
star(n)            hub ``0``, leaves ``1..n``
complete(n)        ``0..n-1``, edges in lexicographic order
complete_bipartite sides ``0..n-1`` and ``n..2n-1``
hypercube(d)       binary words ``0..2^d-1``, edges flip one bit
wheel(n)           hub ``0``, rim ``1..n``; spokes first, then rim edges
double_star(n)     hubs ``0, 1``; leaves ``2..n+1`` on 0, ``n+2..2n+1`` on 1
gear(n)            hub ``0``, rim ``1..n``, subdivision vertex ``n+i`` sits
                   between rim ``i`` and rim ``i+1`` (cyclically)
friendship(n)      hub ``0``, triangle ``k`` uses ``2k+1, 2k+2``
suspension_cycle   apexes ``0, 1``, cycle ``2..n+1``
two_wheel_axle(m)  hubs ``0, 1`` joined by the axle; rims ``2..m+1`` and
                   ``m+2..2m+1`` (``m`` is the rim size of each wheel)
=================  =========================================================
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import CapExceeded, GraphError

TREE_CAP = 10


class Element(NamedTuple):
    """A vertex (``kind == "v"``) or an edge (``kind == "e"``) of a graph."""

    kind: str
    index: int

    def __repr__(self) -> str:
        return f"{self.kind}{self.index}"


def vertex(i: int) -> Element:
    return Element("v", int(i))


def edge(i: int) -> Element:
    return Element("e", int(i))


class Graph:
    """Finite simple undirected graph.

    Instances are treated as immutable; the edge array is flagged read-only
    and every derived structure is cached on first use.

    Attributes:
        p: number of vertices.
        edges: ``(q, 2)`` int64 array, row ``i`` holds the endpoints of edge
            ``i`` with the smaller vertex first.
        labels: optional display names for the vertices.
    """

    def __init__(self, p: int, edges: np.ndarray, labels: Sequence[str] | None = None):
        self.p = int(p)
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        edges.setflags(write=False)
        self.edges = edges
        self.labels = tuple(labels) if labels is not None else None

    @property
    def q(self) -> int:
        return self.edges.shape[0]

    @property
    def ell(self) -> int:
        """Number of elements, ``p + q``."""
        return self.p + self.q

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.bincount(self.edges.ravel(), minlength=self.p).astype(np.int64)
        deg.setflags(write=False)
        return deg

    @cached_property
    def edge_list(self) -> list[tuple[int, int]]:
        return [(int(u), int(w)) for u, w in self.edges.tolist()]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {uw: i for i, uw in enumerate(self.edge_list)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex tuple of incident edge indices, ascending."""
        inc: list[list[int]] = [[] for _ in range(self.p)]
        for i, (u, w) in enumerate(self.edge_list):
            inc[u].append(i)
            inc[w].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.p)]
        for u, w in self.edge_list:
            nb[u].append(w)
            nb[w].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a Python int bitmask."""
        masks = [0] * self.p
        for u, w in self.edge_list:
            masks[u] |= 1 << w
            masks[w] |= 1 << u
        return tuple(masks)

    def find_edge(self, u: int, w: int) -> int:
        key = (u, w) if u < w else (w, u)
        try:
            return self.edge_index[key]
        except KeyError:
            raise GraphError(f"no edge {u}-{w}") from None

    def element(self, code: int) -> Element:
        return vertex(code) if code < self.p else edge(code - self.p)

    def code(self, el: Element) -> int:
        kind, idx = el
        if kind == "v":
            if not 0 <= idx < self.p:
                raise GraphError(f"vertex {idx} out of range [0, {self.p})")
            return idx
        if kind == "e":
            if not 0 <= idx < self.q:
                raise GraphError(f"edge {idx} out of range [0, {self.q})")
            return self.p + idx
        raise GraphError(f"unknown element kind {kind!r}")

    def is_regular(self) -> bool:
        return self.p == 0 or bool(np.all(self.degrees == self.degrees[0]))

    def same_as(self, other: Graph) -> bool:
        """Equal vertex count and equal edge set (edge order ignored)."""
        return self.p == other.p and set(self.edge_list) == set(other.edge_list)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.edges, other.edges)

    def __hash__(self) -> int:
        return hash((self.p, self.edges.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q})"


def _trusted(p: int, pairs) -> Graph:
    # generator output: loop-free and duplicate-free by construction
    arr = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    arr = np.sort(arr, axis=1)
    return Graph(p, arr)


def build_graph(p: int, edge_pairs: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Graph:
    """Build a graph, checking that it is simple.

    Edges keep the input order as their index.

    Raises:
        GraphError: on a loop, a repeated pair or a vertex outside ``[0, p)``.
    """
    if p < 0:
        raise GraphError(f"vertex count must be non-negative, got {p}")
    if labels is not None and len(labels) != p:
        raise GraphError(f"expected {p} labels, got {len(labels)}")
    seen: set[tuple[int, int]] = set()
    rows = []
    for pair in edge_pairs:
        u, w = (int(x) for x in pair)
        if not (0 <= u < p and 0 <= w < p):
            raise GraphError(f"edge ({u}, {w}): vertex out of range [0, {p})")
        if u == w:
            raise GraphError(f"edge ({u}, {w}): loop")
        key = (u, w) if u < w else (w, u)
        if key in seen:
            raise GraphError(f"edge ({u}, {w}): duplicate edge")
        seen.add(key)
        rows.append(key)
    return Graph(p, np.array(rows, dtype=np.int64).reshape(-1, 2), labels or None)


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    HYPERCUBE = "hypercube"
    WHEEL = "wheel"
    DOUBLE_STAR = "double_star"
    GEAR = "gear"
    FRIENDSHIP = "friendship"
    SUSPENSION_CYCLE = "suspension_cycle"
    TWO_WHEEL_AXLE = "two_wheel_axle"


MIN_PARAMETER = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.STAR: 1,
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE: 1,
    Family.HYPERCUBE: 0,
    Family.WHEEL: 3,
    Family.DOUBLE_STAR: 1,
    Family.GEAR: 3,
    Family.FRIENDSHIP: 1,
    Family.SUSPENSION_CYCLE: 3,
    Family.TWO_WHEEL_AXLE: 3,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance, e.g. ``FamilySpec("wheel", 5)``.

    ``n`` is the family parameter: vertex count for path/cycle/complete, leaf
    count for stars, rim size for wheels, gears and the two-wheel axle graph,
    triangle count for friendship graphs and the dimension ``d`` for
    hypercubes.
    """

    family: Family
    n: int

    def __post_init__(self):
        try:
            fam = Family(self.family)
        except ValueError:
            raise GraphError(f"unknown family {self.family!r}") from None
        object.__setattr__(self, "family", fam)
        lo = MIN_PARAMETER[fam]
        if int(self.n) != self.n or self.n < lo:
            raise GraphError(f"{fam.value}: parameter {self.n} below minimum {lo}")
        object.__setattr__(self, "n", int(self.n))

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``"family:n"``."""
        name, sep, param = text.partition(":")
        if not sep:
            raise GraphError(f"expected family:n, got {text!r}")
        return cls(name.strip(), int(param))

    def __str__(self) -> str:
        return f"{self.family.value}:{self.n}"


def _cycle_pairs(first: int, n: int) -> np.ndarray:
    idx = np.arange(n)
    return np.stack([first + idx, first + (idx + 1) % n], axis=1)


def _spokes(hub: int, first: int, n: int) -> np.ndarray:
    return np.stack([np.full(n, hub), first + np.arange(n)], axis=1)


def generate(spec: FamilySpec | str) -> Graph:
    """Canonical labelled instance of a family (see the module docstring)."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    fam, n = spec.family, spec.n
    if fam is Family.PATH:
        idx = np.arange(n - 1)
        return _trusted(n, np.stack([idx, idx + 1], axis=1))
    if fam is Family.CYCLE:
        idx = np.arange(n - 1)
        pairs = np.concatenate([np.stack([idx, idx + 1], axis=1), [[0, n - 1]]])
        return _trusted(n, pairs)
    if fam is Family.STAR:
        return _trusted(n + 1, _spokes(0, 1, n))
    if fam is Family.COMPLETE:
        iu, iw = np.triu_indices(n, 1)
        return _trusted(n, np.stack([iu, iw], axis=1))
    if fam is Family.COMPLETE_BIPARTITE:
        a, b = np.meshgrid(np.arange(n), n + np.arange(n), indexing="ij")
        return _trusted(2 * n, np.stack([a.ravel(), b.ravel()], axis=1))
    if fam is Family.HYPERCUBE:
        words = np.arange(1 << n)
        blocks = []
        for bit in range(n):
            lo = words[(words >> bit) & 1 == 0]
            blocks.append(np.stack([lo, lo | (1 << bit)], axis=1))
        pairs = np.concatenate(blocks) if blocks else np.empty((0, 2))
        order = np.lexsort((pairs[:, 1], pairs[:, 0])) if blocks else []
        return _trusted(1 << n, pairs[order])
    if fam is Family.WHEEL:
        return _trusted(n + 1, np.concatenate([_spokes(0, 1, n), _cycle_pairs(1, n)]))
    if fam is Family.DOUBLE_STAR:
        pairs = np.concatenate([[[0, 1]], _spokes(0, 2, n), _spokes(1, n + 2, n)])
        return _trusted(2 * n + 2, pairs)
    if fam is Family.GEAR:
        rim = 1 + np.arange(n)
        sub = n + 1 + np.arange(n)
        nxt = 1 + (np.arange(n) + 1) % n
        pairs = np.concatenate([
            _spokes(0, 1, n),
            np.stack([rim, sub], axis=1),
            np.stack([sub, nxt], axis=1),
        ])
        return _trusted(2 * n + 1, pairs)
    if fam is Family.FRIENDSHIP:
        a = 1 + 2 * np.arange(n)
        pairs = np.concatenate([_spokes(0, 1, 2 * n), np.stack([a, a + 1], axis=1)])
        return _trusted(2 * n + 1, pairs)
    if fam is Family.SUSPENSION_CYCLE:
        pairs = np.concatenate([_spokes(0, 2, n), _spokes(1, 2, n), _cycle_pairs(2, n)])
        return _trusted(n + 2, pairs)
    if fam is Family.TWO_WHEEL_AXLE:
        pairs = np.concatenate([
            [[0, 1]],
            _spokes(0, 2, n), _cycle_pairs(2, n),
            _spokes(1, n + 2, n), _cycle_pairs(n + 2, n),
        ])
        return _trusted(2 * n + 2, pairs)
    raise GraphError(f"no generator for {fam}")  # pragma: no cover


def family_degrees(spec: FamilySpec | str) -> np.ndarray:
    """Degree multiset of a family instance, read off its definition.

    Used where building the graph is too expensive (dense families at large
    ``n``); it must agree with ``degree_sequence(generate(spec))``.
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    fam, n = spec.family, spec.n

    def blocks(*parts: tuple[int, int]) -> np.ndarray:
        return np.concatenate([np.full(count, deg, dtype=np.int64) for deg, count in parts])

    if fam is Family.PATH:
        return blocks((1, 2), (2, n - 2)) if n >= 2 else blocks((0, 1))
    if fam is Family.CYCLE:
        return blocks((2, n))
    if fam is Family.STAR:
        return blocks((n, 1), (1, n))
    if fam is Family.COMPLETE:
        return blocks((n - 1, n))
    if fam is Family.COMPLETE_BIPARTITE:
        return blocks((n, 2 * n))
    if fam is Family.HYPERCUBE:
        return blocks((n, 1 << n))
    if fam is Family.WHEEL:
        return blocks((n, 1), (3, n))
    if fam is Family.DOUBLE_STAR:
        return blocks((n + 1, 2), (1, 2 * n))
    if fam is Family.GEAR:
        return blocks((n, 1), (3, n), (2, n))
    if fam is Family.FRIENDSHIP:
        return blocks((2 * n, 1), (2, 2 * n))
    if fam is Family.SUSPENSION_CYCLE:
        return blocks((n, 2), (4, n))
    if fam is Family.TWO_WHEEL_AXLE:
        return blocks((n + 1, 2), (3, 2 * n))
    raise GraphError(f"no degree data for {fam}")  # pragma: no cover


def degree_sequence(g: Graph, order: str = "descending") -> list[int]:
    if order not in ("ascending", "descending"):
        raise ValueError(f"order must be 'ascending' or 'descending', not {order!r}")
    return sorted(g.degrees.tolist(), reverse=order == "descending")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` followed by ``g2`` with its vertices shifted by ``g1.p``."""
    edges = np.concatenate([g1.edges, g2.edges + g1.p])
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = g1.labels + g2.labels
    return Graph(g1.p + g2.p, edges, labels)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex bijection ``v -> perm[v]``.

    Edge ``i`` of the result is the image of edge ``i`` of ``g``.
    """
    perm_arr = np.asarray(perm, dtype=np.int64)
    if sorted(perm_arr.tolist()) != list(range(g.p)):
        raise GraphError("relabeling is not a permutation of the vertices")
    return _trusted(g.p, perm_arr[g.edges])


def _bfs_distances(g: Graph, source: int, limit: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    nb = g.neighbors
    while queue:
        u = queue.popleft()
        if dist[u] == limit:
            continue
        for w in nb[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_power(g: Graph, k: int) -> Graph:
    """Graph on the same vertices joining every pair at distance ``1..k``."""
    if k < 1:
        raise ValueError(f"power must be positive, got {k}")
    pairs = []
    for u in range(g.p):
        for w, d in _bfs_distances(g, u, k).items():
            if w > u and d >= 1:
                pairs.append((u, w))
    pairs.sort()
    return _trusted(g.p, pairs)


def random_graph(p: int, q: int, seed: int | None = None) -> Graph:
    """Uniform random simple graph with ``p`` vertices and ``q`` edges."""
    pairs = [(u, w) for u in range(p) for w in range(u + 1, p)]
    if not 0 <= q <= len(pairs):
        raise GraphError(f"cannot place {q} edges on {p} vertices")
    rng = np.random.default_rng(seed)
    pick = np.sort(rng.choice(len(pairs), size=q, replace=False))
    return _trusted(p, [pairs[i] for i in pick.tolist()])


class UnionFind:
    """Disjoint-set forest tracking the number of components."""

    def __init__(self, n: int = 0):
        self.parent = list(range(n))
        self.components = n

    def add(self) -> int:
        self.parent.append(len(self.parent))
        self.components += 1
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        self.components -= 1
        return True


def component_count(g: Graph) -> int:
    uf = UnionFind(g.p)
    for u, w in g.edge_list:
        uf.union(u, w)
    return uf.components


# ---------------------------------------------------------------- trees

def _rooted_code(nb: Sequence[Sequence[int]], root: int) -> str:
    # iterative AHU encoding
    order, parent = [root], {root: -1}
    for u in order:
        for w in nb[u]:
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    codes: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(codes[w] for w in nb[u] if w != parent[u])
        codes[u] = "(" + "".join(kids) + ")"
    return codes[root]


def tree_centers(g: Graph) -> list[int]:
    if g.p <= 2:
        return list(range(g.p))
    deg = g.degrees.tolist()
    leaves = [v for v in range(g.p) if deg[v] <= 1]
    remaining = g.p
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for v in leaves:
            for w in g.neighbors[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        leaves = nxt
    return sorted(leaves)


def tree_canonical_form(g: Graph) -> str:
    """Isomorphism-invariant string for a tree (AHU code at the centre)."""
    if g.q != g.p - 1 or component_count(g) != 1:
        raise GraphError("not a tree")
    return min(_rooted_code(g.neighbors, c) for c in tree_centers(g))


def enumerate_trees(n: int, cap: int = TREE_CAP) -> Iterator[Graph]:
    """All free trees on ``n`` vertices, one per isomorphism class.

    Trees on ``n`` vertices are grown from those on ``n - 1`` by attaching a
    leaf at every vertex; duplicates are rejected by canonical form.
    """
    if n < 1:
        raise ValueError(f"tree order must be positive, got {n}")
    if n > cap:
        raise CapExceeded("tree enumeration", n, cap)
    level = [_trusted(1, [])]
    for size in range(2, n + 1):
        seen: set[str] = set()
        nxt = []
        for t in level:
            for v in range(t.p):
                grown = Graph(size, np.concatenate([t.edges, [[v, size - 1]]]))
                key = tree_canonical_form(grown)
                if key not in seen:
                    seen.add(key)
                    nxt.append(grown)
        level = nxt
    yield from level
