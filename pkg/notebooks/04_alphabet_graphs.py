"""Words over [1, d] joined when every letter differs by at most one.

Distances are Chebyshev distances. Adding one extra vertex per coordinate
gives G+(d, c), whose order d**c + c is the largest a c-landmark graph of
diameter d can have. Small cases show where that extremal bound is and is not
met by an actual resolving set.
"""

from supertokens.alphabet import (
    build_gdc,
    build_gdc_plus,
    gdc_plus_labels,
    gdc_plus_w_distance,
    lower_bound_dim,
    w_vertex,
)
from supertokens.graphs import bfs_distances, diameter
from supertokens.resolving import is_resolving, metric_dimension

for d, c in [(3, 2), (4, 2), (3, 3)]:
    print(f"G({d},{c}): order {d**c}, diameter {diameter(build_gdc(d, c))}")

for d in (3, 4):
    g = build_gdc_plus(d, 2)
    labels = gdc_plus_labels(d, 2)
    w = [w_vertex(d, 2, 1), w_vertex(d, 2, 2)]
    dim, wit = metric_dimension(g)
    print(f"\nG+({d},2): order {g.n}, diameter {diameter(g)}, lower bound {lower_bound_dim(g.n, d)}")
    print(f"  dimension {dim}, witness {[labels[v - 1] for v in wit]}, {{w1, w2}} resolves: {is_resolving(g, w)}")

g = build_gdc_plus(4, 2)
dist = bfs_distances(g, w_vertex(4, 2, 1))
print("\nDistance to w1 in G+(4,2) goes through w2 when that is shorter:")
for word in [(4, 1), (3, 1), (2, 3)]:
    v = (word[0] - 1) * 4 + word[1]
    print(f"  {word}: BFS {dist[v - 1]}, formula {gdc_plus_w_distance(word, 1)}, first letter {word[0]}")
