import itertools

import pytest
from hypothesis import given, settings, strategies as st

from graphcost.errors import CapExceeded
from graphcost.graph import build_graph, disjoint_union, generate, random_graph
from graphcost.oracle import brute_extremes
from graphcost.sequence import cost, is_greedy, is_nearly_connected
from graphcost.solver import (
    greedy_codes,
    greedy_cost,
    min_cost,
    min_cost_branch_bound,
    min_cost_exact,
)


def test_greedy_cost_examples():
    p3 = generate("path:3")
    value, seq = greedy_cost(p3, [0, 1, 2])
    assert value == 7 and seq.codes == (0, 1, 3, 2, 4)
    assert greedy_cost(p3, [1, 2, 0])[0] == 8
    k2 = generate("complete:2")
    assert greedy_cost(k2, [0, 1])[0] == greedy_cost(k2, [1, 0])[0] == 3
    with pytest.raises(ValueError):
        greedy_codes(p3, [0, 0, 1])


@pytest.mark.parametrize("spec,value", [("complete:4", 40), ("cycle:5", 26), ("star:4", 21), ("path:3", 7)])
def test_min_cost_exact_examples(spec, value):
    res = min_cost_exact(generate(spec))
    assert res.optimal_cost == value == cost(res.witness)
    assert is_greedy(res.witness) and res.proven


@pytest.mark.parametrize("spec,value", [("path:6", 19), ("star:6", 41)])
def test_branch_bound_examples(spec, value):
    res = min_cost_branch_bound(generate(spec))
    assert res.optimal_cost == value and res.proven


@pytest.mark.parametrize("bound", ["basic", "pending", "batch"])
@pytest.mark.parametrize("spec", ["double_star:2", "wheel:6", "gear:4", "friendship:3", "hypercube:3"])
def test_branch_bound_agrees_with_dp(spec, bound):
    g = generate(spec)
    res = min_cost_branch_bound(g, bound=bound)
    assert res.proven
    assert res.optimal_cost == min_cost_exact(g).optimal_cost == cost(res.witness)


def test_branch_bound_budget_flag():
    res = min_cost_branch_bound(generate("complete_bipartite:5"), max_nodes=5)
    assert not res.proven
    assert res.optimal_cost >= min_cost_exact(generate("complete_bipartite:5")).optimal_cost
    assert cost(res.witness) == res.optimal_cost
    with pytest.raises(ValueError):
        min_cost_branch_bound(generate("path:3"), bound="nope")


@pytest.mark.parametrize("n", [20, 30, 40])
def test_batch_bound_proves_long_paths(n):
    res = min_cost_branch_bound(generate(f"path:{n}"), bound="batch", max_nodes=10_000)
    assert res.proven and res.optimal_cost == 4 * n - 5


def test_dispatch_and_trivial_cases():
    assert min_cost(generate("path:3")).optimal_cost == 7
    k3 = generate("complete:3")
    assert min_cost(disjoint_union(k3, k3)).optimal_cost == 28
    single = min_cost(generate("complete:1"))
    assert single.optimal_cost == 0 and single.witness.codes == (0,)
    empty = min_cost(build_graph(0, []))
    assert empty.optimal_cost == 0
    big = min_cost(generate("path:26"), max_nodes=200_000, bound="batch")
    assert big.proven and big.optimal_cost == 4 * 26 - 5


def test_dp_cap():
    with pytest.raises(CapExceeded, match="branch"):
        min_cost_exact(generate("path:25"))


def test_witness_is_lexicographically_smallest_optimal_order():
    g = generate("path:4")
    res = min_cost_exact(g)
    best = min(greedy_cost(g, o)[0] for o in itertools.permutations(range(4)))
    first = next(list(o) for o in itertools.permutations(range(4)) if greedy_cost(g, o)[0] == best)
    assert res.vertex_order == first


@pytest.mark.parametrize("n", range(2, 17))
def test_path_optimal_orders_are_nearly_connected(n):
    g = generate(f"path:{n}")
    res = min_cost_exact(g)
    assert is_nearly_connected(res.witness)
    if n <= 8:
        for order in itertools.permutations(range(n)):
            value, seq = greedy_cost(g, order)
            if value == res.optimal_cost:
                assert is_nearly_connected(seq)


@pytest.mark.parametrize("n", range(4, 10))
def test_star_has_optimum_that_is_not_nearly_connected(n):
    g = generate(f"star:{n}")
    opt = min_cost_exact(g).optimal_cost
    # leaves 1..b, then the hub, then the remaining leaves
    found = False
    for b in range(1, n + 1):
        value, seq = greedy_cost(g, list(range(1, b + 1)) + [0] + list(range(b + 1, n + 1)))
        if value == opt and not is_nearly_connected(seq):
            found = True
    assert found


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 6), st.data())
def test_dp_equals_brute_min(p, data):
    q = data.draw(st.integers(0, min(p * (p - 1) // 2, 10 - p)))
    g = random_graph(p, q, seed=data.draw(st.integers(0, 10**6)))
    res = min_cost_exact(g)
    assert res.optimal_cost == brute_extremes(g).min_cost
    assert greedy_cost(g, res.vertex_order)[0] == res.optimal_cost


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 10), st.data())
def test_branch_bound_equals_dp(p, data):
    q = data.draw(st.integers(0, p * (p - 1) // 2))
    g = random_graph(p, q, seed=data.draw(st.integers(0, 10**6)))
    bound = data.draw(st.sampled_from(["basic", "pending", "batch"]))
    assert min_cost_branch_bound(g, bound=bound).optimal_cost == min_cost_exact(g).optimal_cost


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 10), st.data())
def test_adding_an_edge_never_lowers_min(p, data):
    q = data.draw(st.integers(1, p * (p - 1) // 2))
    g = random_graph(p, q, seed=data.draw(st.integers(0, 10**6)))
    drop = data.draw(st.integers(0, q - 1))
    h = build_graph(p, [e for i, e in enumerate(g.edge_list) if i != drop])
    assert min_cost_exact(h).optimal_cost <= min_cost_exact(g).optimal_cost


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.data())
def test_batch_edge_order_irrelevant(p, data):
    q = data.draw(st.integers(0, p * (p - 1) // 2))
    g = random_graph(p, q, seed=data.draw(st.integers(0, 10**6)))
    order = data.draw(st.permutations(range(p)))
    value, seq = greedy_cost(g, order)
    # reverse every batch of edges following a vertex
    codes, batch = [], []
    for c in seq.codes:
        if c < g.p:
            codes += batch[::-1] + [c]
            batch = []
        else:
            batch.append(c)
    codes += batch[::-1]
    from graphcost.sequence import ConstructionSequence
    assert cost(ConstructionSequence.from_codes(g, codes)) == value
