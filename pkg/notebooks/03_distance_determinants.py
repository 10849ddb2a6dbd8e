"""Exact determinants of distance matrices.

Trees have a determinant that depends only on their order, even cycles are
singular, and odd-cycle unicyclic graphs follow a closed form in the cycle
length and the number of hanging vertices.
"""

import random

from supertokens import cycle_graph, determinant, distance_matrix
from supertokens.graphs import random_tree, random_unicyclic, tree_det_formula, unicyclic_odd_det_formula

rng = random.Random(3)
for n in range(2, 10):
    t = random_tree(n, rng)
    print(f"random tree n={n}: det {determinant(distance_matrix(t)):>6}  formula {tree_det_formula(n):>6}")

print()
for n in range(3, 13):
    print(f"C{n}: det {determinant(distance_matrix(cycle_graph(n)))}")

print()
for k in (1, 2, 3):
    for m in range(4):
        g = random_unicyclic(2 * k + 1, m, rng)
        print(f"cycle {2 * k + 1} + {m} hanging: det {determinant(distance_matrix(g)):>6}  formula {unicyclic_odd_det_formula(k, m)}")
