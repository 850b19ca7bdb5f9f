"""
Costs of construction sequences
===============================

Build the path on three vertices, lay it down in a few different orders and
look at what each order costs.
"""

from graphcost import generate, validate, total_cost, is_easy, is_greedy, is_nearly_connected
from graphcost.io import parse_sequence, format_sequence

# the path 0 - 1 - 2
g = generate("path:3")
print(g, g.edge_list)

# all vertices first, then the edges: an "easy" sequence
s = validate(g, parse_sequence("v:0 v:1 v:2 e:0-1 e:1-2", g))
print(format_sequence(s), total_cost(s))

# put each edge down as soon as both ends are there: a greedy sequence
t = validate(g, parse_sequence("v:0 v:1 e:0-1 v:2 e:1-2", g))
print(format_sequence(t), total_cost(t).total)

for seq in (s, t):
    print(is_easy(seq), is_greedy(seq), is_nearly_connected(seq))

# an edge before its endpoint is rejected with the position of the problem
try:
    validate(g, parse_sequence("v:0 e:0-1 v:1 v:2 e:1-2", g))
except ValueError as err:
    print("rejected:", err)
