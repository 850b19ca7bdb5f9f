"""Closed forms for maximum and minimum construction cost.

Maximum cost is attained by an easy sequence (all vertices, then all edges)
that lists vertices by non-increasing degree, and the edge order inside the
edge block does not matter.  For such a sequence with vertex degrees
``d_1 >= d_2 >= ... >= d_p`` the cost is

    q * (2p + q + 1) - sum_j j * d_j,

so the maximum cost of *any* graph is a function of its degree sequence
alone.  :func:`max_cost_any` evaluates it; the family formulas below are
specialisations and are checked against it.

Minimum costs are only known in closed form for complete graphs, paths,
cycles and stars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Family, FamilySpec, Graph

# smallest parameter for which each published max formula is claimed
MAX_FORMULA_RANGE = {
    Family.PATH: 2,
    Family.CYCLE: 3,
    Family.STAR: 2,
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE: 1,
    Family.HYPERCUBE: 0,
    Family.WHEEL: 4,
    Family.DOUBLE_STAR: 1,
    Family.GEAR: 4,
    Family.FRIENDSHIP: 1,
    Family.SUSPENSION_CYCLE: 4,
    Family.TWO_WHEEL_AXLE: 3,
}

MIN_FORMULA_RANGE = {
    Family.COMPLETE: 1,
    Family.PATH: 3,
    Family.CYCLE: 3,
    Family.STAR: 2,
}


@dataclass(frozen=True)
class CostFormulaResult:
    value: int
    formula_id: str
    validity_note: str = ""

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class StarSplit:
    """Cost of the greedy star sequence with ``b`` leaves placed before the hub."""

    n: int
    cost_by_b: dict[int, int]
    optimal_b: frozenset[int]
    optimal_cost: int


def _note(spec: FamilySpec, lo: int) -> str:
    if spec.n < lo:
        return f"{spec.family.value}: formula stated for n >= {lo}, evaluated at n = {spec.n}"
    return ""


def max_cost_degrees(degrees: Sequence[int] | np.ndarray) -> int:
    """Maximum construction cost of any graph with this degree multiset."""
    d = np.sort(np.asarray(degrees, dtype=np.int64))[::-1]
    p = int(d.size)
    total = int(d.sum())
    if total % 2:
        raise ValueError("degree sum is odd")
    q = total // 2
    if p == 0:
        return 0
    if p * p * int(d[0]) < 2**62:
        weighted = int(np.dot(np.arange(1, p + 1, dtype=np.int64), d))
    else:
        weighted = sum(j * int(x) for j, x in enumerate(d.tolist(), start=1))
    return q * (2 * p + q + 1) - weighted


def max_cost_any(g: Graph) -> CostFormulaResult:
    """Exact maximum cost of ``g`` from its sorted degree sequence."""
    return CostFormulaResult(max_cost_degrees(g.degrees), "degree-sequence")


def max_cost_regular(p: int, r: int) -> CostFormulaResult:
    """Maximum cost ``q(p + q)`` of an ``r``-regular graph on ``p`` vertices."""
    if p < 1 or not 0 <= r < p or (p * r) % 2:
        raise ValueError(f"no {r}-regular simple graph on {p} vertices")
    q = p * r // 2
    return CostFormulaResult(q * (p + q), "regular")


def _max_value(fam: Family, n: int) -> int:
    if fam is Family.PATH:
        return 2 * n * n - 2 * n - 1
    if fam is Family.CYCLE:
        return 2 * n * n
    if fam is Family.STAR:
        return (5 * n * n + n) // 2
    if fam is Family.COMPLETE:
        return (n**4 - n**2) // 4
    if fam is Family.COMPLETE_BIPARTITE:
        return 2 * n**3 + n**4
    if fam is Family.HYPERCUBE:
        # (2d + d^2) 4^(d-1), kept integral at d = 0
        return (2 * n + n * n) * 4**n // 4
    if fam is Family.WHEEL:
        return (13 * n * n + n) // 2
    if fam is Family.DOUBLE_STAR:
        return 10 * n * n + 10 * n + 3
    if fam is Family.GEAR:
        return 16 * n * n + (n * n + n) // 2
    if fam is Family.FRIENDSHIP:
        return 17 * n * n + n
    if fam is Family.SUSPENSION_CYCLE:
        return 13 * n * n + 2 * n
    if fam is Family.TWO_WHEEL_AXLE:
        # published in terms of wheel order; here n is the rim size
        return 26 * n * n + 14 * n + 3
    raise ValueError(f"no published max formula for {fam.value}")  # pragma: no cover


def max_cost_family(spec: FamilySpec | str) -> CostFormulaResult:
    """Published maximum-cost closed form for a family instance.

    Parameters below the published range are still evaluated; the result then
    carries a ``validity_note``.

    Raises:
        ValueError: if the closed form is meaningless at this parameter
            (a negative value).
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    value = _max_value(spec.family, spec.n)
    if value < 0:
        raise ValueError(f"{spec}: max formula undefined (evaluates to {value})")
    return CostFormulaResult(value, f"{spec.family.value}-max", _note(spec, MAX_FORMULA_RANGE[spec.family]))


def max_cost_disjoint_union(g1: Graph, g2: Graph) -> CostFormulaResult:
    """Maximum cost of ``g1 ⊔ g2`` for two regular graphs.

    With degrees ``r1 > r2`` the denser graph's vertices come first and its
    edges last, so each of its ``q1`` edges is pushed ``p2 + q2`` further from
    both endpoints.  Equal degrees give a regular union.
    """
    if not (g1.is_regular() and g2.is_regular()):
        raise ValueError("both graphs must be regular")
    r1 = int(g1.degrees[0]) if g1.p else 0
    r2 = int(g2.degrees[0]) if g2.p else 0
    if r1 < r2:
        g1, g2, r1, r2 = g2, g1, r2, r1
    p1, q1, p2, q2 = g1.p, g1.q, g2.p, g2.q
    if r1 == r2:
        return CostFormulaResult((q1 + q2) * (p1 + p2 + q1 + q2), "regular-union-equal-degree")
    value = q1 * (p1 + q1) + q2 * (p2 + q2) + 2 * q1 * (p2 + q2)
    return CostFormulaResult(value, "regular-union")


def star_split(n: int) -> StarSplit:
    """Greedy star costs as a function of the number ``b`` of leading leaves.

    With ``b`` leaves, then the hub and its ``b`` edges, then each remaining
    leaf followed by its edge, the cost is ``(3b^2 - b(1 + 2n) + 2n^2 + 4n) / 2``.
    """
    if n < 1:
        raise ValueError(f"star needs at least one leaf, got {n}")
    costs = {b: (3 * b * b - b * (1 + 2 * n) + 2 * n * n + 4 * n) // 2 for b in range(1, n + 1)}
    best = min(costs.values())
    return StarSplit(n, costs, frozenset(b for b, c in costs.items() if c == best), best)


def star_min_closed_form(n: int) -> Fraction:
    """``(5n^2 + 11n) / 6``; integral, and equal to the minimum, when ``3 | n``."""
    return Fraction(5 * n * n + 11 * n, 6)


def min_cost_family(spec: FamilySpec | str) -> CostFormulaResult:
    """Published minimum cost for complete graphs, paths, cycles and stars."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    fam, n = spec.family, spec.n
    if fam not in MIN_FORMULA_RANGE:
        raise ValueError(f"no published min formula for {fam.value}")
    if fam is Family.COMPLETE:
        value = (n - 1) * n * (n + 1) * (n + 4) // 12
    elif fam is Family.PATH:
        value = 4 * n - 5
    elif fam is Family.CYCLE:
        value = 6 * n - 4
    else:
        value = star_split(n).optimal_cost
    if value < 0:
        raise ValueError(f"{spec}: min formula undefined (evaluates to {value})")
    return CostFormulaResult(value, f"{fam.value}-min", _note(spec, MIN_FORMULA_RANGE[fam]))


def complete_graph_layer_cost(k: int) -> int:
    """Total cost of the ``k - 1`` edges placed right after vertex ``k`` in the
    canonical greedy sequence of a complete graph: ``k(k-1)(2k+5)/6``."""
    if k < 2:
        raise ValueError(f"layer index must be at least 2, got {k}")
    return k * (k - 1) * (2 * k + 5) // 6


def easy_count(p: int, q: int) -> int:
    """Number of easy sequences: vertices in any order, then edges in any order."""
    return math.factorial(p) * math.factorial(q)


def tree_max_bounds(n: int) -> tuple[int, int]:
    """``(max cost of P_n, max cost of K_{1,n-1})``, bounding every ``n``-vertex tree."""
    if n < 2:
        raise ValueError(f"tree bounds need n >= 2, got {n}")
    return _max_value(Family.PATH, n), _max_value(Family.STAR, n - 1)


def max_min_ratio(spec: FamilySpec | str) -> Fraction:
    """Exact ratio of maximum to minimum cost for a family with both formulas."""
    return Fraction(max_cost_family(spec).value, min_cost_family(spec).value)


def tangent_numbers(count: int) -> list[int]:
    """First ``count`` tangent numbers 1, 2, 16, 272, 7936, ...

    Built with the Seidel boustrophedon for the zigzag numbers ``E_k``; the
    tangent numbers are the odd-indexed ones.
    """
    row = [1]
    zigzag = [1]
    while len(zigzag) < 2 * count:
        nxt = [0]
        for x in reversed(row):
            nxt.append(nxt[-1] + x)
        row = nxt
        zigzag.append(row[-1])
    return zigzag[1::2][:count]

