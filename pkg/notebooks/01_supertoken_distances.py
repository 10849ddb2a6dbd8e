"""Distances between token placements without building the big graph.

Moving k tokens from placement x to placement y costs as much as a cheapest
pairing of x's surplus tokens with y's empty slots, priced by base-graph
distance. This script walks one instance on the 6-cycle, then checks the
shortcut against BFS on the explicit graph.
"""

from supertokens import build_supertoken, cycle_graph
from supertokens.graphs import bfs_distances
from supertokens.supertoken import apply_moves, format_config, parse_config, supertoken_distance, supertoken_matching

g = cycle_graph(6)
x, y = parse_config("310212"), parse_config("201132")

inst, cost, assignment = supertoken_matching(g, x, y)
print("tokens to move from:", inst.surplus)
print("slots to fill:      ", inst.deficit)
print("cost matrix:")
for row in cost:
    print("   ", row)
print("optimal pairing:", [(inst.surplus[i], inst.deficit[j]) for i, j in assignment.pairs()])

weight, moves = supertoken_distance(g, x, y)
print(f"\ndistance {format_config(x)} -> {format_config(y)} = {weight}")
cur = x
for a, b in moves:
    cur = apply_moves(g, cur, [(a, b)])
    print(f"  move {a}->{b}: {format_config(cur)}")

# the explicit graph has C(14, 9) = 2002 vertices; BFS agrees
st = build_supertoken(g, 9)
print("\nBFS on the explicit graph:", bfs_distances(st.graph, st.index(x))[st.index(y) - 1])
