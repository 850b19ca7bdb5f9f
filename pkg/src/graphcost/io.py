"""Graph and sequence file formats.

Text format, one directive per line, ``#`` starts a comment::

    p 3          # vertex count, must come first
    e 0 1        # an edge
    e 1 2
    v 0 a        # optional label for vertex 0

JSON mirror: ``{"p": 3, "edges": [[0, 1], [1, 2]], "labels": ["a", "b", "c"]}``
(``labels`` optional; when present it lists every vertex).

Sequences are whitespace-separated tokens ``v:<id>`` and ``e:<u>-<w>``.  If
the graph carries labels, ids are matched against the labels, otherwise
they are vertex numbers.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .errors import GraphError, SequenceError
from .graph import Element, Graph, build_graph, edge, vertex
from .sequence import ConstructionSequence


class GraphFormatError(GraphError):
    """Syntax error in a graph document, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def _int_token(tok: str, line: int, col: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {tok!r}", line, col) from None
    if value < 0:
        raise GraphFormatError(f"expected a non-negative integer, got {value}", line, col)
    return value


def parse_graph_text(text: str) -> Graph:
    p = None
    pairs: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        tokens = []
        col = 0
        for tok in body.split():
            col = body.index(tok, col)
            tokens.append((tok, col + 1))
            col += len(tok)
        head, head_col = tokens[0]
        args = tokens[1:]
        if head == "p":
            if p is not None:
                raise GraphFormatError("repeated 'p' header", lineno, head_col)
            if len(args) != 1:
                raise GraphFormatError("'p' takes exactly one argument", lineno, head_col)
            p = _int_token(args[0][0], lineno, args[0][1])
        elif head == "e":
            if p is None:
                raise GraphFormatError("'e' before the 'p' header", lineno, head_col)
            if len(args) != 2:
                raise GraphFormatError("'e' takes exactly two vertices", lineno, head_col)
            pairs.append(tuple(_int_token(t, lineno, c) for t, c in args))
        elif head == "v":
            if p is None:
                raise GraphFormatError("'v' before the 'p' header", lineno, head_col)
            if len(args) != 2:
                raise GraphFormatError("'v' takes a vertex and a label", lineno, head_col)
            v = _int_token(args[0][0], lineno, args[0][1])
            labels[v] = args[1][0]
        else:
            raise GraphFormatError(f"unknown directive {head!r}", lineno, head_col)
    if p is None:
        raise GraphFormatError("missing 'p' header", 1, 1)
    label_list = None
    if labels:
        if sorted(labels) != list(range(p)):
            raise GraphError("labels must be given for every vertex or for none")
        label_list = [labels[v] for v in range(p)]
    return build_graph(p, pairs, label_list)


def parse_graph_json(doc: str | dict[str, Any]) -> Graph:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "p" not in doc:
        raise GraphFormatError("expected an object with a 'p' field", 1, 1)
    p = doc["p"]
    edges = doc.get("edges", [])
    if not isinstance(p, int) or not isinstance(edges, list):
        raise GraphFormatError("'p' must be an integer and 'edges' a list", 1, 1)
    for pair in edges:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
            raise GraphFormatError(f"bad edge entry {pair!r}", 1, 1)
    labels = doc.get("labels")
    return build_graph(p, edges, [str(x) for x in labels] if labels is not None else None)


def parse_graph(document: str, format: str | None = None) -> Graph:
    """Parse a text or JSON graph document (format sniffed when not given)."""
    if format is None:
        format = "json" if document.lstrip().startswith("{") else "text"
    if format == "json":
        return parse_graph_json(document)
    if format == "text":
        return parse_graph_text(document)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "text") -> str:
    if format == "json":
        doc: dict[str, Any] = {"p": g.p, "edges": [list(uw) for uw in g.edge_list]}
        if g.labels is not None:
            doc["labels"] = list(g.labels)
        return json.dumps(doc, sort_keys=True)
    if format == "text":
        lines = [f"p {g.p}"]
        lines += [f"e {u} {w}" for u, w in g.edge_list]
        if g.labels is not None:
            lines += [f"v {v} {name}" for v, name in enumerate(g.labels)]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format {format!r}")


def _vertex_lookup(g: Graph) -> dict[str, int]:
    if g.labels is not None:
        return {name: v for v, name in enumerate(g.labels)}
    return {str(v): v for v in range(g.p)}


def parse_sequence(tokens: str | Iterable[str], g: Graph) -> list[Element]:
    """Turn ``v:<id>`` / ``e:<u>-<w>`` tokens into elements of ``g``.

    Only token syntax and element existence are checked here; ordering is
    left to :func:`graphcost.sequence.validate`.
    """
    if isinstance(tokens, str):
        tokens = tokens.split()
    lookup = _vertex_lookup(g)

    def vid(name: str, tok: str) -> int:
        try:
            return lookup[name]
        except KeyError:
            raise SequenceError(f"token {tok!r}: unknown vertex {name!r}") from None

    out = []
    for tok in tokens:
        kind, sep, rest = tok.partition(":")
        if not sep:
            raise SequenceError(f"token {tok!r}: expected v:<id> or e:<u>-<w>")
        if kind == "v":
            out.append(vertex(vid(rest, tok)))
        elif kind == "e":
            a, dash, b = rest.partition("-")
            if not dash:
                raise SequenceError(f"token {tok!r}: expected e:<u>-<w>")
            u, w = vid(a, tok), vid(b, tok)
            key = (u, w) if u < w else (w, u)
            if key not in g.edge_index:
                raise SequenceError(f"token {tok!r}: unknown edge")
            out.append(edge(g.edge_index[key]))
        else:
            raise SequenceError(f"token {tok!r}: unknown element kind {kind!r}")
    return out


def format_sequence(s: ConstructionSequence) -> str:
    g = s.graph
    names = list(g.labels) if g.labels is not None else [str(v) for v in range(g.p)]
    out = []
    for kind, idx in s.order:
        if kind == "v":
            out.append(f"v:{names[idx]}")
        else:
            u, w = g.edge_list[idx]
            out.append(f"e:{names[u]}-{names[w]}")
    return " ".join(out)
