"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
mismatch, 4 resource cap exceeded.

Graph arguments are file paths (text or JSON format), ``-`` for stdin, or a
family spec such as ``wheel:5``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import formulas, io as gio, oracle, solver, verify as vf
from .errors import CapExceeded, GraphError, SequenceError
from .graph import FamilySpec, generate, random_graph
from .sequence import is_easy, is_greedy, is_nearly_connected, total_cost, validate

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_MISMATCH, EXIT_CAP = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(arg: str, format: str | None = None):
    if arg == "-":
        return gio.parse_graph(sys.stdin.read(), format)
    if os.path.exists(arg):
        with open(arg) as fh:
            return gio.parse_graph(fh.read(), format)
    if ":" in arg:
        return generate(FamilySpec.parse(arg))
    raise GraphError(f"{arg!r} is neither a file nor a family spec")


def _emit(rows: list[dict], fmt: str, out) -> None:
    out.write(vf.rows_to_json(rows) + "\n" if fmt == "json" else vf.rows_to_csv(rows))


def cmd_cost(args, out) -> int:
    g = load_graph(args.graph, args.graph_format)
    tokens = args.sequence if len(args.sequence) != 1 else args.sequence[0].split()
    s = validate(g, gio.parse_sequence(tokens, g))
    bd = total_cost(s)
    report = {
        "per_edge": {f"{u}-{w}": bd.per_edge[i] for i, (u, w) in enumerate(g.edge_list)},
        "total": bd.total,
        "easy": is_easy(s),
        "greedy": is_greedy(s),
        "nearly_connected": is_nearly_connected(s),
    }
    if args.format == "json":
        out.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        for key, delay in report["per_edge"].items():
            out.write(f"edge {key}: {delay}\n")
        out.write(f"total: {bd.total}\n")
        for flag in ("easy", "greedy", "nearly_connected"):
            out.write(f"{flag}: {str(report[flag]).lower()}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rows = vf.verify(args.scope, vf.parse_range(args.range), tier=args.tier, cap=args.cap)
    _emit(vf.verification_dicts(rows), args.format, out)
    return EXIT_OK if all(r.verdict == "match" for r in rows) else EXIT_MISMATCH


def cmd_table(args, out) -> int:
    _emit(vf.table(args.what, args.specs), args.format, out)
    return EXIT_OK


def cmd_discriminate(args, out) -> int:
    if args.search is not None:
        found = vf.find_min_separated_trees(args.search)
        if found is None:
            out.write(json.dumps({"found": False}) + "\n")
            return EXIT_OK
        t1, t2, rep = found
        doc = {"found": True, "g1": json.loads(gio.serialize_graph(t1, "json")),
               "g2": json.loads(gio.serialize_graph(t2, "json")), **rep.as_dict()}
    else:
        if args.g1 is None or args.g2 is None:
            raise argparse.ArgumentTypeError("two graphs or --search N required")
        rep = vf.discriminate(load_graph(args.g1, args.graph_format), load_graph(args.g2, args.graph_format))
        doc = rep.as_dict()
    out.write(json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    g = load_graph(args.graph, args.graph_format)
    rep = oracle.brute_extremes(g, want_histogram=args.histogram, witness_cap=args.witnesses, cap=args.cap)
    doc = {
        "count": rep.count,
        "min_cost": rep.min_cost, "min_count": rep.min_count,
        "max_cost": rep.max_cost, "max_count": rep.max_count,
        "min_witnesses": [gio.format_sequence(s) for s in rep.min_witnesses],
        "max_witnesses": [gio.format_sequence(s) for s in rep.max_witnesses],
    }
    if rep.histogram is not None:
        doc["histogram"] = {str(k): v for k, v in rep.histogram.items()}
    out.write(json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    g = load_graph(args.graph, args.graph_format)
    out.write(f"{oracle.construction_number(g, cap=args.cap)}\n")
    return EXIT_OK


def cmd_solve(args, out) -> int:
    g = load_graph(args.graph, args.graph_format)
    res = solver.min_cost(g, dp_cap=args.cap, max_nodes=args.budget, bound=args.bound)
    doc = {
        "min_cost": res.optimal_cost,
        "proven": res.proven,
        "vertex_order": res.vertex_order,
        "witness": gio.format_sequence(res.witness),
        "max_cost": formulas.max_cost_any(g).value,
        "states": res.stats["states"],
    }
    out.write(json.dumps(doc, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_generate(args, out) -> int:
    if args.random is not None:
        g = random_graph(args.random[0], args.random[1], seed=args.seed)
    elif args.spec is not None:
        g = generate(FamilySpec.parse(args.spec))
    else:
        raise ValueError("give a family spec or --random P Q")
    out.write(gio.serialize_graph(g, args.format))
    if args.format == "json":
        out.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="graphcost", description="Construction-sequence costs of graphs.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_opts(p):
        p.add_argument("--graph-format", choices=("text", "json"), default=None,
                       help="input graph format (sniffed by default)")

    p = sub.add_parser("cost", help="cost and classification of one sequence")
    p.add_argument("graph")
    p.add_argument("sequence", nargs="+", help="tokens v:<id> and e:<u>-<w>")
    p.add_argument("--format", choices=("text", "json"), default="text")
    graph_opts(p)
    p.set_defaults(func=cmd_cost)

    p = sub.add_parser("verify", help="check published values against computation")
    p.add_argument("scope", help="<family>-max, <family>-min or path-count")
    p.add_argument("--range", required=True, help="parameter range, e.g. 2..100")
    p.add_argument("--tier", choices=vf.TIERS, default="a")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="maxcost / mincost / count / ratio tables")
    p.add_argument("what", choices=("maxcost", "mincost", "count", "ratio"))
    p.add_argument("specs", nargs="+", help="family:n or family:lo..hi; tree:n for the tree envelope")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("discriminate", help="compare two graphs by max, squared max and min cost")
    p.add_argument("g1", nargs="?")
    p.add_argument("g2", nargs="?")
    p.add_argument("--search", type=int, metavar="N", default=None,
                   help="search trees up to N vertices for a min-cost-separated pair")
    graph_opts(p)
    p.set_defaults(func=cmd_discriminate)

    p = sub.add_parser("enumerate", help="exhaustive min/max over all sequences")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=oracle.ENUMERATION_CAP)
    p.add_argument("--witnesses", type=int, default=oracle.WITNESS_CAP)
    p.add_argument("--histogram", action="store_true")
    graph_opts(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="construction number")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=oracle.COUNTING_CAP)
    graph_opts(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("solve", help="exact minimum cost")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=solver.DP_CAP, help="largest vertex count for the DP")
    p.add_argument("--budget", type=int, default=solver.NODE_BUDGET, help="branch-and-bound node budget")
    p.add_argument("--bound", choices=("basic", "pending", "batch"), default="basic",
                   help="branch-and-bound lower bound")
    graph_opts(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="write a family instance or random graph")
    p.add_argument("spec", nargs="?", help="family:n")
    p.add_argument("--random", type=int, nargs=2, metavar=("P", "Q"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_generate)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, SequenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
