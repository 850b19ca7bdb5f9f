"""
Maximum cost from the degree sequence
=====================================

The most expensive sequence places every vertex first, in non-increasing
order of degree, then every edge.  Its cost only needs the sorted degrees.
"""

import numpy as np

from graphcost import generate, max_cost_any, max_cost_family, degree_sequence
from graphcost.formulas import max_cost_degrees

g = generate("wheel:6")
print(degree_sequence(g))
print(max_cost_any(g))           # from the degrees of the built graph
print(max_cost_family("wheel:6"))  # the family closed form

# the same number straight from a degree list
print(max_cost_degrees([6, 3, 3, 3, 3, 3, 3]))

# closed forms stay exact far past int64
print(max_cost_family("hypercube:40").value)

# compare closed form and degree formula over a whole range of gears
ns = np.arange(4, 200)
same = [max_cost_family(f"gear:{n}").value == max_cost_any(generate(f"gear:{n}")).value for n in ns]
print(all(same))
