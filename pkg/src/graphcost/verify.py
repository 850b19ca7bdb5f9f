"""Checks of the published closed forms, tables and graph discrimination.

Three verification tiers compare a published value against an independent
computation:

``a``
    max-cost formula vs. the degree-sequence formula on the generated graph.
``b``
    min-cost formula vs. the subset-DP solver; path counts vs. memoised
    counting.
``c``
    any formula vs. exhaustive enumeration of all construction sequences.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import formulas, oracle, solver
from .errors import CapExceeded
from .graph import Family, FamilySpec, Graph, degree_sequence, enumerate_trees, family_degrees, generate, graph_power

TIERS = ("a", "b", "c")
ORACLE_CAP = 10
# beyond this many edges tier a reads degrees off the family definition
EDGE_BUDGET = 100_000


@dataclass(frozen=True)
class VerificationRow:
    family: str
    parameter: int
    claimed: int
    computed: int
    verdict: str
    claimed_source: str
    computed_source: str


def _row(family: str, n: int, claimed: int, computed: int, csrc: str, vsrc: str) -> VerificationRow:
    verdict = "match" if claimed == computed else "mismatch"
    return VerificationRow(family, n, int(claimed), int(computed), verdict, csrc, vsrc)


def generic_max(spec: FamilySpec) -> tuple[int, str]:
    """Degree-sequence max cost of a family instance and where the degrees came from."""
    degrees = family_degrees(spec)
    if int(degrees.sum()) // 2 > EDGE_BUDGET:
        return formulas.max_cost_degrees(degrees), "degree-sequence(definition)"
    return formulas.max_cost_any(generate(spec)).value, "degree-sequence"


def parse_range(text: str) -> range:
    """``"5"``, ``"2..10"`` or ``"2:10"`` (inclusive)."""
    for sep in ("..", ":", "-"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return range(int(lo), int(hi) + 1)
    n = int(text)
    return range(n, n + 1)


def parse_scope(scope: str) -> tuple[str, str]:
    """Split ``"star-max"`` into ``("star", "max")``."""
    name, sep, what = scope.rpartition("-")
    if not sep or what not in ("max", "min", "count"):
        raise ValueError(f"scope must look like <family>-max, <family>-min or path-count, not {scope!r}")
    if what == "count" and name != "path":
        raise ValueError("only path-count is supported")
    Family(name)
    return name, what


def verify(scope: str, params: Iterable[int], tier: str = "a", cap: int | None = None) -> list[VerificationRow]:
    """Compare published values against an independent computation.

    Raises:
        ValueError: unknown scope or a scope/tier combination with no
            independent side (e.g. max cost has no solver).
        CapExceeded: an instance is too large for the requested tier.
    """
    family, what = parse_scope(scope)
    if tier not in TIERS:
        raise ValueError(f"tier must be one of {TIERS}, not {tier!r}")
    if what == "max" and tier == "b":
        raise ValueError("max cost has no search tier; use tier a or c")
    if what == "min" and tier == "a":
        raise ValueError("min cost has no degree formula; use tier b or c")
    if what == "count" and tier == "a":
        raise ValueError("counts are checked at tier b (memoised) or c (enumeration)")
    rows = []
    for n in params:
        spec = FamilySpec(family, n)
        if what == "max":
            claimed = formulas.max_cost_family(spec).value
            if tier == "a":
                computed, src = generic_max(spec)
            else:
                g = generate(spec)
                computed = oracle.brute_extremes(g, cap=cap or ORACLE_CAP).max_cost
                src = "enumeration"
            rows.append(_row(family, n, claimed, computed, f"{family}-max", src))
        elif what == "min":
            claimed = formulas.min_cost_family(spec).value
            g = generate(spec)
            if tier == "b":
                computed = solver.min_cost_exact(g, cap=cap or solver.DP_CAP).optimal_cost
                src = "subset-dp"
            else:
                computed = oracle.brute_extremes(g, cap=cap or ORACLE_CAP).min_cost
                src = "enumeration"
            rows.append(_row(family, n, claimed, computed, f"{family}-min", src))
        else:
            claimed = formulas.tangent_numbers(n)[n - 1]
            g = generate(spec)
            if tier == "b":
                if cap is not None and g.ell > cap:
                    raise CapExceeded("counting", g.ell, cap)
                computed, src = oracle.count_by_memo(g), "memoised-count"
            else:
                if g.ell > (cap or ORACLE_CAP):
                    raise CapExceeded("enumeration", g.ell, cap or ORACLE_CAP)
                computed = sum(1 for _ in oracle.enumerate_csequences(g, cap=None))
                src = "enumeration"
            rows.append(_row(family, n, claimed, computed, "tangent-number", src))
    return rows


def rows_to_csv(rows: Sequence[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    fields: list[str] = []
    for r in rows:
        fields += [k for k in r if k not in fields]
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_json(rows: Sequence[dict]) -> str:
    return json.dumps(list(rows), sort_keys=True, indent=1)


def verification_dicts(rows: Iterable[VerificationRow]) -> list[dict]:
    return [asdict(r) for r in rows]


# ---------------------------------------------------------------- tables

def _min_value(spec: FamilySpec, g: Graph) -> tuple[int, str]:
    if spec.family in formulas.MIN_FORMULA_RANGE:
        return formulas.min_cost_family(spec).value, "formula"
    return solver.min_cost_exact(g).optimal_cost, "subset-dp"


def table(what: str, specs: Iterable[str]) -> list[dict]:
    """Rows for ``maxcost``, ``mincost``, ``count`` or ``ratio`` tables.

    ``specs`` are ``family:n`` or ``family:lo..hi`` strings; for ``maxcost``
    the pseudo-family ``tree`` gives the max-cost envelope of ``n``-vertex
    trees.  Ratios are exact fractions with a rounded decimal beside them.
    """
    if what not in ("maxcost", "mincost", "count", "ratio"):
        raise ValueError(f"unknown table {what!r}")
    out = []
    for text in specs:
        name, _, rng = text.partition(":")
        for n in parse_range(rng):
            if name == "tree":
                if what != "maxcost":
                    raise ValueError("the tree envelope is a maxcost table")
                lo, hi = formulas.tree_max_bounds(n)
                out.append({"family": "tree", "n": n, "path_max": lo, "star_max": hi})
                continue
            spec = FamilySpec(name, n)
            if what == "maxcost":
                row = {"family": name, "n": n}
                try:
                    row["max_formula"] = formulas.max_cost_family(spec).value
                except ValueError:
                    row["max_formula"] = ""
                row["max_generic"] = generic_max(spec)[0]
                out.append(row)
                continue
            g = generate(spec)
            if what == "mincost":
                value, src = _min_value(spec, g)
                out.append({"family": name, "n": n, "p": g.p, "q": g.q, "min": value, "source": src})
            elif what == "count":
                out.append({"family": name, "n": n, "ell": g.ell, "count": oracle.construction_number(g, cap=None)})
            else:
                hi = formulas.max_cost_family(spec).value
                lo, _ = _min_value(spec, g)
                r = Fraction(hi, lo)
                out.append({
                    "family": name, "n": n, "max": hi, "min": lo,
                    "ratio": f"{r.numerator}/{r.denominator}",
                    "ratio_decimal": f"{float(r):.6f}",
                })
    return out


# ---------------------------------------------------------------- discrimination

@dataclass
class DiscriminationReport:
    max_cost: tuple[int, int]
    max_cost_square: tuple[int, int]
    min_cost: tuple[int, int] | None
    note: str = ""

    @property
    def separated_by_max(self) -> bool:
        return self.max_cost[0] != self.max_cost[1]

    @property
    def separated_by_square(self) -> bool:
        return self.max_cost_square[0] != self.max_cost_square[1]

    @property
    def separated_by_min(self) -> bool | None:
        return None if self.min_cost is None else self.min_cost[0] != self.min_cost[1]

    def as_dict(self) -> dict:
        return {
            "max_cost": list(self.max_cost),
            "max_cost_square": list(self.max_cost_square),
            "min_cost": list(self.min_cost) if self.min_cost else None,
            "separated_by_max": self.separated_by_max,
            "separated_by_square": self.separated_by_square,
            "separated_by_min": self.separated_by_min,
            "note": self.note,
        }


def discriminate(g1: Graph, g2: Graph, dp_cap: int = solver.DP_CAP) -> DiscriminationReport:
    """Max cost, max cost of the square, and min cost of two graphs side by side."""
    mx = (formulas.max_cost_any(g1).value, formulas.max_cost_any(g2).value)
    sq = (formulas.max_cost_any(graph_power(g1, 2)).value, formulas.max_cost_any(graph_power(g2, 2)).value)
    if max(g1.p, g2.p) > dp_cap:
        return DiscriminationReport(mx, sq, None, f"min cost omitted: more than {dp_cap} vertices")
    mn = (solver.min_cost_exact(g1, dp_cap).optimal_cost, solver.min_cost_exact(g2, dp_cap).optimal_cost)
    return DiscriminationReport(mx, sq, mn)


def find_min_separated_trees(max_n: int = 8) -> tuple[Graph, Graph, DiscriminationReport] | None:
    """First pair of non-isomorphic trees with equal degree sequences but
    different minimum cost, searching orders ``4 .. max_n``."""
    for n in range(4, max_n + 1):
        by_degrees: dict[tuple[int, ...], list[tuple[Graph, int]]] = {}
        for t in enumerate_trees(n):
            key = tuple(degree_sequence(t))
            by_degrees.setdefault(key, []).append((t, solver.min_cost_exact(t).optimal_cost))
        for group in by_degrees.values():
            for i, (t1, m1) in enumerate(group):
                for t2, m2 in group[i + 1:]:
                    if m1 != m2:
                        return t1, t2, discriminate(t1, t2)
    return None
