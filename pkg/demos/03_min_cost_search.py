"""
Minimum cost by search
======================

Cheapest sequences are greedy, so only the vertex order matters.  The
subset dynamic program solves graphs up to 24 vertices; branch-and-bound
takes over beyond that with a node budget.
"""

from graphcost import generate, min_cost_exact, min_cost_branch_bound, min_cost_family, disjoint_union
from graphcost.io import format_sequence

res = min_cost_exact(generate("star:6"))
print(res.optimal_cost, res.vertex_order)
print(format_sequence(res.witness))
print(min_cost_family("star:6"))

# no closed form for gears: the solver is the reference
print(min_cost_exact(generate("gear:5")).optimal_cost)

# the minimum adds up over disjoint pieces
k3 = generate("complete:3")
print(min_cost_exact(disjoint_union(k3, k3)).optimal_cost, 2 * min_cost_exact(k3).optimal_cost)

# a 40-vertex path is out of reach for the table, the batch bound proves it at once
bb = min_cost_branch_bound(generate("path:40"), bound="batch")
print(bb.optimal_cost, bb.proven, bb.stats["states"])

# without a proof the best order found is still reported, flagged as unproven
bb = min_cost_branch_bound(generate("wheel:30"), max_nodes=20_000)
print(bb.optimal_cost, bb.proven)
