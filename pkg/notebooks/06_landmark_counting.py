"""How few landmarks could possibly suffice on a complete base graph.

Positions of placements on K_n sum to (n-1)k, so the last landmark is
redundant. Fewer than n-2 landmarks run out of distinct vectors whenever
k**(n-2) + n - 2 < C(n+k-1, k); the table shows where that inequality holds.
"""

from supertokens.resolving import check_inequality_kn

for n in range(3, 8):
    fails = [k for k in range(1, 201) if not check_inequality_kn(n, k)]
    span = f"[{fails[0]}, {fails[-1]}]" if fails else "none"
    print(f"n={n}: inequality fails for k in {span} ({len(fails)} values up to 200)")
