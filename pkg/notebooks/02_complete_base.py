"""Placements of tokens on a complete graph.

On K_n every token can jump anywhere in one move, so the distance is half the
L1 gap between count vectors and the eccentricity is k minus the smallest
count. The radius is reached by the most even spread.
"""

from supertokens import complete_graph
from supertokens.supertoken import (
    diam_complete,
    dist_complete,
    ecc_complete,
    rad_complete,
    rad_complete_printed,
    supertoken_diameter,
    supertoken_radius,
)

print("dist(203, 140) =", dist_complete((2, 0, 3), (1, 4, 0)))
print("ecc(122)       =", ecc_complete((1, 2, 2)))

print("\n n  k  diam(BFS) diam  rad(BFS) rad  n-n//k")
for n in range(2, 5):
    for k in range(1, 6):
        g = complete_graph(n)
        print(
            f"{n:2} {k:2}  {supertoken_diameter(g, k):9} {diam_complete(n, k):4}"
            f"  {supertoken_radius(g, k):8} {rad_complete(n, k):3}  {rad_complete_printed(n, k):6}"
        )
print("\nThe last column is the other reading of the radius formula; it disagrees with BFS in several rows.")
