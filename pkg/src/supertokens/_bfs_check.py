"""Compiled all-pairs BFS comparison for the larger G(d, c) sweeps.

Only used by the exhaustive Chebyshev check; imported lazily because numba
compilation costs about a second.
"""

from __future__ import annotations

import numba
import numpy as np

from .graphs import Graph


def csr_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    indices = []
    for v in range(g.n):
        nbrs = g._adj[v]
        indices.extend(nbrs)
        indptr[v + 1] = indptr[v] + len(nbrs)
    return indptr, np.asarray(indices, dtype=np.int64)


@numba.njit(cache=True)
def _first_mismatch(indptr, indices, words):
    n = indptr.shape[0] - 1
    c = words.shape[1]
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        dist[:] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            for p in range(indptr[u], indptr[u + 1]):
                w = indices[p]
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        for v in range(n):
            m = 0
            for i in range(c):
                a = abs(words[s, i] - words[v, i])
                if a > m:
                    m = a
            if dist[v] != m:
                return s, v
    return -1, -1


def chebyshev_mismatch(g: Graph, words: list[tuple[int, ...]]) -> tuple[int, int] | None:
    """First (source, target) pair, 1-based, whose BFS distance in ``g`` differs from
    the Chebyshev distance of their words, or ``None`` when all pairs agree."""
    indptr, indices = csr_arrays(g)
    s, v = _first_mismatch(indptr, indices, np.asarray(words, dtype=np.int64).reshape(g.n, -1))
    return None if s < 0 else (int(s) + 1, int(v) + 1)
