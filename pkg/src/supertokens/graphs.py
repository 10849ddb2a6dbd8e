"""Simple connected graphs, BFS distances, exact distance matrices and determinants.

Vertices are labelled ``1..n`` on every public interface; internally the
adjacency lists are 0-based.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "SizeCapError",
    "DEFAULT_MAX_VERTICES",
    "bfs_distances",
    "distance_matrix",
    "eccentricity",
    "diameter",
    "radius",
    "determinant",
    "tree_det_formula",
    "unicyclic_odd_det_formula",
    "distance_degree_sequence",
    "row_sum_lambda",
    "builtin",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "is_isomorphism",
    "random_tree",
    "random_unicyclic",
    "connected_graphs",
    "read_graph",
    "write_graph",
    "format_graph",
    "parse_graph",
]


DEFAULT_MAX_VERTICES = 10**6


class GraphError(ValueError):
    """Invalid graph data or an invalid vertex id."""


class SizeCapError(ValueError):
    """A construction or search would exceed its configured size cap."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected connected graph on vertices ``1..n``."""

    n: int
    edges: frozenset[tuple[int, int]]
    _adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        for e in edges:
            i, j = e
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise GraphError(f"edge {{{i},{j}}} has a vertex outside 1..{n}")
            pair = (i, j) if i < j else (j, i)
            if pair in normalized:
                raise GraphError(f"duplicate edge {{{pair[0]},{pair[1]}}}")
            normalized.add(pair)
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in normalized:
            adj[i - 1].append(j - 1)
            adj[j - 1].append(i - 1)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        if n > 0 and len(_bfs0(self._adj, 0)) != n:
            raise GraphError("graph is disconnected")

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        """Sorted 1-based neighbours of ``v``."""
        self._check(v)
        return [u + 1 for u in self._adj[v - 1]]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v - 1])

    def has_edge(self, i: int, j: int) -> bool:
        return ((i, j) if i < j else (j, i)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise GraphError(f"invalid vertex {v!r} (graph has vertices 1..{self.n})")


def _bfs0(adj: Sequence[Sequence[int]], source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Shortest-path lengths from ``source``; entry ``v-1`` is ``dist(source, v)``."""
    g._check(source)
    dist = _bfs0(g._adj, source - 1)
    return [dist[v] for v in range(g.n)]


def bfs_parents(g: Graph, root: int) -> list[int]:
    """Parent of each vertex in the BFS tree rooted at ``root`` (1-based; root maps to itself).

    Neighbours are scanned in increasing order, so the tree is deterministic.
    Following parents from any vertex walks a shortest path to ``root``.
    """
    g._check(root)
    parent = [0] * g.n
    parent[root - 1] = root
    queue = deque([root - 1])
    seen = {root - 1}
    while queue:
        u = queue.popleft()
        for w in g._adj[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u + 1
                queue.append(w)
    return parent


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs distance matrix as a list of rows, indexed 0-based."""
    return [bfs_distances(g, v) for v in range(1, g.n + 1)]


def eccentricity(g: Graph, v: int) -> int:
    return max(bfs_distances(g, v))


def diameter(g: Graph) -> int:
    return max(max(row) for row in distance_matrix(g))


def radius(g: Graph) -> int:
    return min(max(row) for row in distance_matrix(g))


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by Bareiss fraction-free elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def tree_det_formula(n: int) -> int:
    """Distance-matrix determinant of any tree on ``n`` vertices."""
    if n < 2:
        raise ValueError(f"tree formula needs n >= 2, got {n}")
    return (-1) ** (n - 1) * (n - 1) * 2 ** (n - 2)


def unicyclic_odd_det_formula(k: int, m: int) -> Fraction:
    """Distance-matrix determinant of a unicyclic graph whose cycle has 2k+1 edges
    and which has ``m`` further vertices outside the cycle."""
    if k < 1 or m < 0:
        raise ValueError(f"need k >= 1 and m >= 0, got k={k}, m={m}")
    return (-2) ** m * (Fraction(k * (k + 1)) + Fraction(2 * k + 1, 2) * m)


def distance_degree_sequence(g: Graph) -> tuple[int, ...] | None:
    """The common sequence (k_0, ..., k_d) of vertex counts at each distance,
    or ``None`` if the graph is not degree-regular."""
    common = None
    for row in distance_matrix(g):
        counts = [0] * (max(row) + 1)
        for d in row:
            counts[d] += 1
        if common is None:
            common = tuple(counts)
        elif tuple(counts) != common:
            return None
    return common


def row_sum_lambda(seq: Sequence[int]) -> int:
    """Constant row sum of the distance matrix of a degree-regular graph."""
    if not seq or seq[0] != 1 or any(c < 1 for c in seq):
        raise ValueError(f"not a distance-degree sequence: {tuple(seq)}")
    return sum(i * c for i, c in enumerate(seq))


def complete_graph(n: int) -> Graph:
    return builtin("complete", n)


def cycle_graph(n: int) -> Graph:
    return builtin("cycle", n)


def path_graph(n: int) -> Graph:
    return builtin("path", n)


def builtin(family: str, n: int) -> Graph:
    """K_n, C_n or P_n with the canonical labelling 1..n."""
    if family == "complete":
        if n < 1:
            raise ValueError(f"complete graph needs n >= 1, got {n}")
        return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])
    if family == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])
    if family == "path":
        if n < 1:
            raise ValueError(f"path needs n >= 1, got {n}")
        return Graph(n, [(i, i + 1) for i in range(1, n)])
    raise ValueError(f"unknown family {family!r}")


def is_isomorphism(g: Graph, h: Graph, mapping: Mapping[int, int]) -> bool:
    """Check that ``mapping`` (vertex of g -> vertex of h) is a bijection preserving
    adjacency and non-adjacency."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(mapping) != list(range(1, g.n + 1)):
        return False
    if sorted(mapping.values()) != list(range(1, h.n + 1)):
        return False
    return all(h.has_edge(mapping[i], mapping[j]) for i, j in g.edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n == 2:
        return Graph(2, [(1, 2)])
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(1, n + 1) if degree[x] == 1)
    edges.append((u, w))
    return Graph(n, edges)


def random_unicyclic(cycle_len: int, extra: int, rng: random.Random) -> Graph:
    """Cycle ``1..cycle_len`` with ``extra`` further vertices, each hung from a random earlier vertex."""
    edges = [(i, i + 1) for i in range(1, cycle_len)] + [(cycle_len, 1)]
    for v in range(cycle_len + 1, cycle_len + extra + 1):
        edges.append((rng.randint(1, v - 1), v))
    return Graph(cycle_len + extra, edges)


def connected_graphs(n: int, labelled: bool = False) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices: every labelled one, or by default one
    representative per isomorphism class."""
    pairs = list(combinations(range(1, n + 1), 2))
    perms = list(permutations(range(1, n + 1)))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for b, p in enumerate(pairs) if mask >> b & 1]
        if len(edges) < n - 1:
            continue
        if not labelled:
            key = min(
                tuple(sorted(tuple(sorted((perm[i - 1], perm[j - 1]))) for i, j in edges)) for perm in perms
            )
            if key in seen:
                continue
            seen.add(key)
        try:
            yield Graph(n, edges)
        except GraphError:
            continue


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("first line must be 'n m'")
    try:
        n, m = map(int, rows[0])
        edges = [tuple(map(int, r)) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token in graph file: {exc}") from None
    if any(len(e) != 2 for e in edges):
        raise GraphError("edge lines must be 'i j'")
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())
