"""Landmarks for token placements.

Taking the n placements that stack every token on one vertex as landmarks,
the position of x is the product x D. When D is invertible the position gives
x back, and a vector is a genuine position exactly when rho D^-1 is a
non-negative integer vector with k entries in total.
"""

from supertokens import complete_graph, cycle_graph, distance_matrix, metric_dimension
from supertokens.resolving import feasibility, position_via_matrix, verify_supertoken_dim_bound
from supertokens.supertoken import build_supertoken, format_config

c5 = cycle_graph(5)
d = distance_matrix(c5)
st = build_supertoken(c5, 2)
for x in st.configs:
    print(format_config(x), position_via_matrix(x, d))

rep = verify_supertoken_dim_bound(c5, 2)
print(f"\ncanonical landmarks resolve: {rep.canonical_resolves}; dropping one still resolves: {rep.reduced_resolves}")
dim, wit = metric_dimension(st.graph)
print(f"exhaustive dimension {dim}, witness {[st.labels()[v - 1] for v in wit]}")

rep6 = verify_supertoken_dim_bound(cycle_graph(6), 2)
print(f"\nC6: det {rep6.det}, colliding placements {rep6.collisions}")

k3 = complete_graph(3)
for rho in [(2, 4, 4), (1, 3, 3)]:
    res = feasibility(rho, k3, 5)
    print(f"\nK3, k=5, rho={rho}: feasible {res.feasible}, rho D^-1 = {[str(v) for v in res.witness]}")
