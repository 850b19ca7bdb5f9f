import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from graphcost.errors import CapExceeded, GraphError
from graphcost.graph import (
    Family,
    FamilySpec,
    MIN_PARAMETER,
    build_graph,
    component_count,
    degree_sequence,
    disjoint_union,
    enumerate_trees,
    family_degrees,
    generate,
    graph_power,
    random_graph,
    relabel,
    tree_canonical_form,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edge_list)
    return h


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert (g.p, g.q, g.ell) == (3, 2, 5)
    assert g.edge_list == [(0, 1), (1, 2)]


def test_build_single_vertex():
    g = build_graph(1, [])
    assert g.ell == 1


@pytest.mark.parametrize("p,pairs,needle", [
    (2, [(0, 1), (1, 0)], "duplicate"),
    (2, [(1, 1)], "loop"),
    (3, [(0, 5)], "out of range"),
])
def test_build_rejects(p, pairs, needle):
    with pytest.raises(GraphError, match=needle) as exc:
        build_graph(p, pairs)
    assert str(pairs[-1]) in str(exc.value)


def test_edges_keep_input_order_and_normalise():
    g = build_graph(3, [(2, 1), (1, 0)])
    assert g.edge_list == [(1, 2), (0, 1)]
    assert g.find_edge(0, 1) == 1


@pytest.mark.parametrize("spec,p,q", [
    ("path:3", 3, 2),
    ("gear:4", 9, 12),
    ("double_star:1", 4, 3),
    ("wheel:4", 5, 8),
    ("friendship:3", 7, 9),
    ("suspension_cycle:5", 7, 15),
    ("two_wheel_axle:4", 10, 17),
    ("hypercube:3", 8, 12),
    ("hypercube:0", 1, 0),
    ("complete_bipartite:3", 6, 9),
    ("complete:1", 1, 0),
])
def test_generate_counts(spec, p, q):
    g = generate(spec)
    assert (g.p, g.q) == (p, q)


def test_double_star_one_is_p4():
    assert nx.is_isomorphic(to_nx(generate("double_star:1")), nx.path_graph(4))


def test_family_isomorphism_against_networkx():
    cases = {
        "path:6": nx.path_graph(6),
        "cycle:7": nx.cycle_graph(7),
        "star:5": nx.star_graph(5),
        "complete:5": nx.complete_graph(5),
        "complete_bipartite:3": nx.complete_bipartite_graph(3, 3),
        "hypercube:4": nx.hypercube_graph(4),
        "wheel:6": nx.wheel_graph(7),
    }
    for spec, ref in cases.items():
        assert nx.is_isomorphic(to_nx(generate(spec)), ref), spec


def test_suspension_of_triangle_like_definition():
    # join of C_n with two non-adjacent vertices
    for n in range(3, 8):
        ref = nx.complement(nx.disjoint_union(nx.complement(nx.cycle_graph(n)), nx.complete_graph(2)))
        assert nx.is_isomorphic(to_nx(generate(f"suspension_cycle:{n}")), ref)


def test_gear_subdivides_wheel_rim():
    g = to_nx(generate("gear:5"))
    assert sorted(d for _, d in g.degree()) == [2] * 5 + [3] * 5 + [5]
    assert nx.is_connected(g) and g.number_of_edges() == 15


def test_two_wheel_axle_structure():
    g = generate("two_wheel_axle:5")
    h = to_nx(g)
    h.remove_edge(0, 1)
    parts = [h.subgraph(c) for c in nx.connected_components(h)]
    assert len(parts) == 2
    assert all(nx.is_isomorphic(part, nx.wheel_graph(6)) for part in parts)


def test_friendship_pairs_share_one_neighbour():
    h = to_nx(generate("friendship:4"))
    for u, w in itertools.combinations(h.nodes, 2):
        assert len(set(h[u]) & set(h[w])) == 1


def test_canonical_labels_hubs_first():
    assert generate("wheel:5").degrees[0] == 5
    assert generate("star:4").degrees[0] == 4
    assert list(generate("double_star:3").degrees[:2]) == [4, 4]
    assert list(generate("suspension_cycle:5").degrees[:2]) == [5, 5]


@pytest.mark.parametrize("family", list(Family))
def test_generators_are_simple_and_match_degree_data(family):
    lo = MIN_PARAMETER[family]
    top = lo + (5 if family is Family.HYPERCUBE else 12)
    for n in range(lo, top):
        spec = FamilySpec(family, n)
        g = generate(spec)
        rebuilt = build_graph(g.p, g.edge_list)  # raises on loops/duplicates
        assert rebuilt.q == g.q
        assert int(g.degrees.sum()) == 2 * g.q
        assert sorted(family_degrees(spec).tolist()) == sorted(g.degrees.tolist())


def test_family_degrees_dense_spot_checks():
    for spec in ("complete:700", "complete_bipartite:400"):
        assert sorted(family_degrees(spec).tolist()) == sorted(generate(spec).degrees.tolist())


def test_closed_form_counts():
    for n in range(1, 30):
        assert (generate(f"double_star:{n}").p, generate(f"double_star:{n}").q) == (2 * n + 2, 2 * n + 1)
        assert (generate(f"friendship:{n}").p, generate(f"friendship:{n}").q) == (2 * n + 1, 3 * n)
        kb = generate(f"complete_bipartite:{n}")
        assert (kb.p, kb.q) == (2 * n, n * n) and kb.is_regular() and kb.degrees[0] == n
    for n in range(3, 30):
        g = generate(f"gear:{n}")
        assert (g.p, g.q) == (2 * n + 1, 3 * n)


@pytest.mark.parametrize("spec,lo", [("cycle:2", 3), ("wheel:2", 3), ("path:0", 1), ("hypercube:-1", 0)])
def test_parameter_below_minimum(spec, lo):
    with pytest.raises(GraphError, match=f"minimum {lo}"):
        generate(spec)


def test_unknown_family():
    with pytest.raises(GraphError):
        FamilySpec("banana", 3)


def test_degree_sequence():
    assert degree_sequence(generate("path:3")) == [2, 1, 1]
    assert degree_sequence(generate("path:3"), "ascending") == [1, 1, 2]
    assert degree_sequence(generate("complete:4")) == [3, 3, 3, 3]
    assert degree_sequence(generate("wheel:4")) == [4, 3, 3, 3, 3]


def test_disjoint_union():
    p2 = generate("path:2")
    g = disjoint_union(p2, p2)
    assert (g.p, g.q) == (4, 2) and component_count(g) == 2
    g = disjoint_union(generate("complete:3"), generate("complete:1"))
    assert (g.p, g.q) == (4, 3)
    g = disjoint_union(generate("cycle:3"), generate("cycle:4"))
    assert (g.p, g.q) == (7, 7)
    assert g.edge_list[3:] == [(3, 4), (4, 5), (5, 6), (3, 6)]


def test_graph_power():
    sq = graph_power(generate("path:4"), 2)
    assert sq.q == 5 and degree_sequence(sq) == [3, 3, 2, 2]
    k3 = generate("complete:3")
    assert graph_power(k3, 2).same_as(k3)
    c = generate("cycle:6")
    assert graph_power(c, 1).same_as(c)
    with pytest.raises(ValueError):
        graph_power(c, 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.data())
def test_graph_power_properties(p, data):
    q = data.draw(st.integers(0, p * (p - 1) // 2))
    g = random_graph(p, q, seed=data.draw(st.integers(0, 10**6)))
    h = to_nx(g)
    assert graph_power(g, 1).same_as(g)
    prev = set()
    for k in range(1, 5):
        edges = set(graph_power(g, k).edge_list)
        assert prev <= edges
        prev = edges
        ref = nx.power(h, k) if q else h
        assert edges == {tuple(sorted(e)) for e in ref.edges}


def test_component_count():
    assert component_count(generate("path:3")) == 1
    assert component_count(build_graph(3, [])) == 3


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.data())
def test_union_component_counts_add(p1, p2, data):
    g1 = random_graph(p1, data.draw(st.integers(0, p1 * (p1 - 1) // 2)), seed=data.draw(st.integers(0, 999)))
    g2 = random_graph(p2, data.draw(st.integers(0, p2 * (p2 - 1) // 2)), seed=data.draw(st.integers(0, 999)))
    a, b = disjoint_union(g1, g2), disjoint_union(g2, g1)
    assert component_count(a) == component_count(b) == component_count(g1) + component_count(g2)
    assert nx.is_isomorphic(to_nx(a), to_nx(b))


def test_relabel_is_isomorphic():
    g = generate("gear:4")
    perm = np.random.default_rng(3).permutation(g.p)
    assert nx.is_isomorphic(to_nx(relabel(g, perm)), to_nx(g))
    with pytest.raises(GraphError):
        relabel(g, [0] * g.p)


def test_random_graph_is_seeded():
    assert random_graph(6, 7, seed=5) == random_graph(6, 7, seed=5)
    with pytest.raises(GraphError):
        random_graph(3, 4)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23), (9, 47), (10, 106)])
def test_tree_counts(n, count):
    trees = list(enumerate_trees(n))
    assert len(trees) == count
    assert all(t.q == n - 1 and component_count(t) == 1 for t in trees)


def test_tree_enumeration_against_isomorphism_rejection():
    # independent route: all labelled trees from Pruefer codes, deduplicated
    # with networkx isomorphism tests
    n = 7
    reps = []
    for code in itertools.product(range(n), repeat=n - 2):
        t = nx.from_prufer_sequence(list(code))
        if not any(nx.is_isomorphic(t, r) for r in reps):
            reps.append(t)
    ours = [to_nx(t) for t in enumerate_trees(n)]
    assert len(ours) == len(reps) == 11
    for t in ours:
        assert sum(nx.is_isomorphic(t, r) for r in reps) == 1


def test_tree_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_trees(11))
    assert len(list(enumerate_trees(11, cap=11))) == 235


def test_canonical_form_rejects_non_trees():
    with pytest.raises(GraphError):
        tree_canonical_form(generate("cycle:4"))
