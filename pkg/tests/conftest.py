import pytest

from graphcost.graph import edge, vertex

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _acceptance.append((marker.args[0], rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for label, outcome, duration in _acceptance:
        tag = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{tag}] {label}  ({duration:.2f}s)")


def compact_sequence(g, text, shift=0):
    """Elements from the compact notation used in worked examples.

    Single-character tokens are vertices, two-character tokens are the edge
    between the two digits.  ``shift`` is subtracted from every vertex so
    1-based examples map onto 0-based graphs.
    """
    out = []
    for tok in text.split():
        if len(tok) == 1:
            out.append(vertex(int(tok) - shift))
        else:
            u, w = int(tok[0]) - shift, int(tok[1]) - shift
            out.append(edge(g.find_edge(u, w)))
    return out


def random_csequence(g, rng):
    """Random valid construction sequence: repeatedly pick a uniformly random
    element among those whose prerequisites are already placed."""
    placed = [False] * g.p
    avail = list(range(g.p))
    codes = []
    while avail:
        c = avail.pop(int(rng.integers(len(avail))))
        codes.append(c)
        if c < g.p:
            placed[c] = True
            for i in g.incident[c]:
                u, w = g.edge_list[i]
                if placed[u] and placed[w]:
                    avail.append(g.p + i)
    return codes
