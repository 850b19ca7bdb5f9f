"""
Telling trees apart
===================

Trees with the same degree sequence always share their maximum cost.  The
maximum cost of the square, or the minimum cost, can still separate them.
"""

from graphcost import enumerate_trees, degree_sequence, max_cost_any, graph_power
from graphcost.verify import find_min_separated_trees, discriminate

trees = list(enumerate_trees(7))
print(len(trees))
for t in trees[:4]:
    print(degree_sequence(t), max_cost_any(t).value, max_cost_any(graph_power(t, 2)).value)

t1, t2, rep = find_min_separated_trees(8)
print(t1.edge_list)
print(t2.edge_list)
print(rep.as_dict())

# a graph compared with itself agrees everywhere
print(discriminate(t1, t1).as_dict())
