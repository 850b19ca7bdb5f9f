"""
Counting and enumerating sequences
==================================

Small graphs can be checked against every one of their construction
sequences.
"""

from graphcost import generate, brute_extremes, construction_number
from graphcost.formulas import tangent_numbers

# paths are counted by the tangent numbers
print([construction_number(generate(f"path:{n}")) for n in range(1, 8)])
print(tangent_numbers(7))

rep = brute_extremes(generate("cycle:4"), want_histogram=True)
print(rep.count, rep.min_cost, rep.max_cost)
print(rep.min_count, rep.max_count)
print(rep.histogram)
