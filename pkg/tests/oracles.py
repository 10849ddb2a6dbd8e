"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from collections import deque
from itertools import permutations


def cofactor_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def bfs_all(n, edges):
    """Distance matrix from an edge list over vertices 1..n, as a dict of dicts."""
    adj = {v: set() for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    out = {}
    for s in adj:
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        out[s] = dist
    return out


def min_assignment(cost):
    n = len(cost)
    if n == 0:
        return 0
    return min(sum(cost[i][p[i]] for i in range(n)) for p in permutations(range(n)))


def multiset_moves_distance(x, y, dmat):
    """Earth-mover distance between two token configurations by explicit expansion."""
    xs = [i for i, c in enumerate(x) for _ in range(c)]
    ys = [j for j, c in enumerate(y) for _ in range(c)]
    return min(sum(dmat[a][b] for a, b in zip(xs, p)) for p in set(permutations(ys)))
