"""Supertoken graphs F_k(G), token graphs F_k(G) (at most one token per vertex),
and distances between token configurations.

A configuration is a tuple ``(u_1, ..., u_n)`` of non-negative token counts.
Distances between configurations reduce to a minimum-weight perfect matching
between surplus and deficit tokens, so they never need the explicit graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .assignment import Assignment, solve_assignment
from .graphs import (
    DEFAULT_MAX_VERTICES,
    Graph,
    SizeCapError,
    bfs_parents,
    diameter,
    distance_matrix,
)

__all__ = [
    "Config",
    "MatchingInstance",
    "SupertokenGraph",
    "TokenGraph",
    "config_count",
    "enumerate_configs",
    "build_supertoken",
    "build_token_graph",
    "dist_complete",
    "ecc_complete",
    "diam_complete",
    "rad_complete",
    "rad_complete_printed",
    "build_matching_instance",
    "matching_cost_matrix",
    "supertoken_distance",
    "supertoken_matching",
    "apply_moves",
    "supertoken_eccentricities",
    "supertoken_ecc",
    "supertoken_diameter",
    "supertoken_radius",
    "antipodal_witnesses",
    "format_config",
    "parse_config",
]

Config = tuple[int, ...]


def _check_config(x: Sequence[int], n: int | None = None, k: int | None = None) -> Config:
    x = tuple(int(v) for v in x)
    if any(v < 0 for v in x):
        raise ValueError(f"token counts must be non-negative: {x}")
    if n is not None and len(x) != n:
        raise ValueError(f"configuration {x} has length {len(x)}, expected {n}")
    if k is not None and sum(x) != k:
        raise ValueError(f"configuration {x} holds {sum(x)} tokens, expected {k}")
    return x


def _check_pair(x: Sequence[int], y: Sequence[int]) -> tuple[Config, Config]:
    x = _check_config(x)
    y = _check_config(y, n=len(x), k=sum(x))
    return x, y


def format_config(x: Sequence[int]) -> str:
    """Compact digit string when every count fits in one digit, else comma-separated."""
    if all(v <= 9 for v in x):
        return "".join(map(str, x))
    return ",".join(map(str, x))


def parse_config(text: str, n: int | None = None, k: int | None = None) -> Config:
    text = text.strip()
    if not text:
        raise ValueError("empty configuration")
    try:
        if "," in text:
            values = [int(t) for t in text.split(",")]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        raise ValueError(f"malformed configuration {text!r}") from None
    return _check_config(values, n, k)


# -- enumeration and explicit construction ---------------------------------


def config_count(n: int, k: int) -> int:
    return comb(n + k - 1, k)


def _configs(n: int, k: int) -> Iterator[Config]:
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _configs(n - 1, k - first):
            yield (first,) + rest


def enumerate_configs(n: int, k: int) -> list[Config]:
    """All placements of ``k`` tokens on ``n`` vertices, in reverse-lexicographic
    order of the count vector (``k0...0`` first, ``0...0k`` last)."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    return list(_configs(n, k))


@dataclass(frozen=True)
class SupertokenGraph:
    """Explicit F_k(base); vertex ``i`` of ``graph`` is ``configs[i-1]``."""

    base: Graph
    k: int
    configs: tuple[Config, ...]
    graph: Graph

    def index(self, x: Sequence[int]) -> int:
        return self._index[tuple(x)]

    @property
    def _index(self) -> dict[Config, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {c: i + 1 for i, c in enumerate(self.configs)}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def labels(self) -> list[str]:
        return [format_config(c) for c in self.configs]


def build_supertoken(g: Graph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> SupertokenGraph:
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    size = config_count(g.n, k)
    if size > max_vertices:
        raise SizeCapError(f"F_{k} of a {g.n}-vertex graph has {size} vertices (cap {max_vertices})")
    configs = enumerate_configs(g.n, k)
    index = {c: i + 1 for i, c in enumerate(configs)}
    edges = []
    for a, c in enumerate(configs, start=1):
        for i, j in g.edges:
            # each unordered pair of configs is produced once: from the side
            # that loses a token at the smaller base vertex
            if c[i - 1] > 0:
                moved = list(c)
                moved[i - 1] -= 1
                moved[j - 1] += 1
                edges.append((a, index[tuple(moved)]))
    return SupertokenGraph(g, k, tuple(configs), Graph(size, edges))


@dataclass(frozen=True)
class TokenGraph:
    """Explicit token graph; vertex ``i`` of ``graph`` is the k-subset ``subsets[i-1]``."""

    base: Graph
    k: int
    subsets: tuple[tuple[int, ...], ...]
    graph: Graph

    def labels(self) -> list[str]:
        sep = "" if self.base.n <= 9 else ","
        return [sep.join(map(str, s)) for s in self.subsets]


def build_token_graph(g: Graph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> TokenGraph:
    """Token graph on the k-subsets of V(g) in lexicographic order; two subsets
    are adjacent when their symmetric difference is an edge of g."""
    if not 1 <= k <= g.n:
        raise ValueError(f"need 1 <= k <= {g.n}, got {k}")
    size = comb(g.n, k)
    if size > max_vertices:
        raise SizeCapError(f"F_{k} has {size} vertices (cap {max_vertices})")
    subsets = list(combinations(range(1, g.n + 1), k))
    index = {s: i + 1 for i, s in enumerate(subsets)}
    edges = set()
    for a, s in enumerate(subsets, start=1):
        members = set(s)
        for v in s:
            for w in g.neighbors(v):
                if w not in members:
                    b = index[tuple(sorted(members - {v} | {w}))]
                    edges.add((min(a, b), max(a, b)))
    return TokenGraph(g, k, tuple(subsets), Graph(size, edges))


# -- complete base graph: closed forms --------------------------------------


def dist_complete(x: Sequence[int], y: Sequence[int]) -> int:
    x, y = _check_pair(x, y)
    return sum(abs(a - b) for a, b in zip(x, y)) // 2


def ecc_complete(x: Sequence[int]) -> int:
    x = _check_config(x)
    return sum(x) - min(x)


def diam_complete(n: int, k: int) -> int:
    # a single vertex has no room to move tokens
    return k if n > 1 else 0


def rad_complete(n: int, k: int) -> int:
    """Radius of F_k(K_n): the most even spread keeps ``k // n`` tokens everywhere."""
    return k - k // n if n > 1 else 0


def rad_complete_printed(n: int, k: int) -> int:
    """The alternative reading ``n - n // k``; disagrees with brute force in general.
    Kept so reports can show it next to the verified value."""
    return n - n // k


# -- general base graph: matching reduction ---------------------------------


@dataclass(frozen=True)
class MatchingInstance:
    """Surplus tokens of x and deficit positions of y, as sorted multisets of base vertices."""

    surplus: tuple[int, ...]
    deficit: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.surplus)

    @property
    def surplus_support(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.surplus)))

    @property
    def deficit_support(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.deficit)))


def build_matching_instance(x: Sequence[int], y: Sequence[int]) -> MatchingInstance:
    x, y = _check_pair(x, y)
    surplus = []
    deficit = []
    for v, (a, b) in enumerate(zip(x, y), start=1):
        if a > b:
            surplus.extend([v] * (a - b))
        elif b > a:
            deficit.extend([v] * (b - a))
    return MatchingInstance(tuple(surplus), tuple(deficit))


@lru_cache(maxsize=256)
def _dmat(g: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in distance_matrix(g))


@lru_cache(maxsize=256)
def _parent_trees(g: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(bfs_parents(g, r)) for r in range(1, g.n + 1))


def matching_cost_matrix(g: Graph, inst: MatchingInstance) -> list[list[int]]:
    d = _dmat(g)
    return [[d[i - 1][j - 1] for j in inst.deficit] for i in inst.surplus]


def supertoken_matching(g: Graph, x: Sequence[int], y: Sequence[int]) -> tuple[MatchingInstance, list[list[int]], Assignment]:
    """The matching instance between x and y, its cost matrix, and the optimal assignment."""
    x, y = _check_pair(x, y)
    if len(x) != g.n:
        raise ValueError(f"configurations have length {len(x)}, base graph has {g.n} vertices")
    inst = build_matching_instance(x, y)
    cost = matching_cost_matrix(g, inst)
    return inst, cost, solve_assignment(cost)


def supertoken_distance(g: Graph, x: Sequence[int], y: Sequence[int]) -> tuple[int, list[tuple[int, int]]]:
    """Distance between configurations in F_k(g) and a witness list of single-edge moves.

    Each move ``(a, b)`` takes one token from base vertex ``a`` to the adjacent
    vertex ``b``. Matched pairs are processed in row order; each token walks
    the BFS tree rooted at its target.
    """
    inst, _, assignment = supertoken_matching(g, x, y)
    parents = _parent_trees(g)
    moves = []
    for row, col in assignment.pairs():
        src, dst = inst.surplus[row], inst.deficit[col]
        tree = parents[dst - 1]
        while src != dst:
            nxt = tree[src - 1]
            moves.append((src, nxt))
            src = nxt
    return assignment.total_weight, moves


def apply_moves(g: Graph, x: Sequence[int], moves: Sequence[tuple[int, int]]) -> Config:
    """Replay single-token moves, checking each one is an edge of F_k(g)."""
    cur = list(_check_config(x, n=g.n))
    for a, b in moves:
        if not g.has_edge(a, b):
            raise ValueError(f"move {a}->{b} is not along an edge")
        if cur[a - 1] == 0:
            raise ValueError(f"move {a}->{b} from an empty vertex")
        cur[a - 1] -= 1
        cur[b - 1] += 1
    return tuple(cur)


def _bfs_ecc(graph: Graph, source: int) -> int:
    seen = {source: 0}
    queue = deque([source])
    last = 0
    while queue:
        u = queue.popleft()
        last = seen[u]
        for w in graph.neighbors(u):
            if w not in seen:
                seen[w] = last + 1
                queue.append(w)
    return last


def supertoken_eccentricities(g: Graph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> dict[Config, int]:
    """Eccentricity of every configuration, by BFS over the explicit graph."""
    st = build_supertoken(g, k, max_vertices)
    return {c: _bfs_ecc(st.graph, i) for i, c in enumerate(st.configs, start=1)}


def supertoken_ecc(g: Graph, k: int, x: Sequence[int], max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    st = build_supertoken(g, k, max_vertices)
    return _bfs_ecc(st.graph, st.index(_check_config(x, g.n, k)))


def supertoken_diameter(g: Graph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    return max(supertoken_eccentricities(g, k, max_vertices).values())


def supertoken_radius(g: Graph, k: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    return min(supertoken_eccentricities(g, k, max_vertices).values())


def antipodal_witnesses(g: Graph, k: int, vertices: Sequence[int]) -> list[Config]:
    """Configurations stacking all ``k`` tokens on each of the given mutually
    antipodal base vertices; they are pairwise at distance ``k * diam(g)``."""
    d = _dmat(g)
    diam = diameter(g)
    for a, b in combinations(vertices, 2):
        if a == b or d[a - 1][b - 1] != diam:
            raise ValueError(f"vertices {a} and {b} are not antipodal (diameter {diam})")
    out = []
    for v in vertices:
        c = [0] * g.n
        c[v - 1] = k
        out.append(tuple(c))
    return out
