"""Resolving sets, metric dimension, and the canonical landmark set of F_k(G).

For F_k(G) with landmarks ``z_j = k e_j`` the position of a configuration x is
the vector-matrix product ``x D`` with D the distance matrix of the base graph,
so when D is invertible a position determines its configuration.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .graphs import (
    Graph,
    SizeCapError,
    bfs_distances,
    determinant,
    diameter,
    distance_degree_sequence,
    distance_matrix,
    row_sum_lambda,
)
from .supertoken import Config, build_supertoken, enumerate_configs, format_config

__all__ = [
    "DEFAULT_SEARCH_VERTICES",
    "SingularMatrixError",
    "SearchExhausted",
    "FeasibilityResult",
    "DimBoundReport",
    "positions",
    "is_resolving",
    "metric_dimension",
    "colex_subsets",
    "canonical_landmarks",
    "position_via_matrix",
    "inverse_matrix",
    "feasibility",
    "inverse_complete_distance",
    "verify_supertoken_dim_bound",
    "check_inequality_kn",
]

DEFAULT_SEARCH_VERTICES = 20


class SingularMatrixError(ValueError):
    """The distance matrix has determinant zero."""


class SearchExhausted(Exception):
    """No resolving set of size <= ``max_size``; the dimension is at least ``lower_bound``."""

    def __init__(self, lower_bound: int, max_size: int):
        super().__init__(f"no resolving set of size <= {max_size}; dimension >= {lower_bound}")
        self.lower_bound = lower_bound
        self.max_size = max_size


def _check_landmarks(g: Graph, landmarks: Sequence[int]) -> list[int]:
    landmarks = list(landmarks)
    if not landmarks:
        raise ValueError("landmark set is empty")
    if len(set(landmarks)) != len(landmarks):
        raise ValueError(f"repeated landmark in {landmarks}")
    for z in landmarks:
        g._check(z)
    return landmarks


def positions(g: Graph, landmarks: Sequence[int]) -> list[tuple[int, ...]]:
    """Position vector of every vertex (entry ``v-1``) with respect to the landmarks."""
    landmarks = _check_landmarks(g, landmarks)
    cols = [bfs_distances(g, z) for z in landmarks]
    return [tuple(col[v] for col in cols) for v in range(g.n)]


def is_resolving(g: Graph, landmarks: Sequence[int]) -> bool:
    pos = positions(g, landmarks)
    return len(set(pos)) == len(pos)


def colex_subsets(n: int, size: int, below: int | None = None):
    """``size``-subsets of ``range(below)`` (default ``range(n)``) in colexicographic order."""
    top_limit = n if below is None else below
    if size == 0:
        yield ()
        return
    for top in range(size - 1, top_limit):
        for rest in colex_subsets(n, size - 1, top):
            yield rest + (top,)


def metric_dimension(
    g: Graph,
    max_size: int | None = None,
    max_vertices: int = DEFAULT_SEARCH_VERTICES,
) -> tuple[int, list[int]]:
    """Exhaustive metric dimension and the colex-first minimum resolving set.

    Subsets are explored landmark by landmark, from the largest vertex down, as
    a refinement of the partition of V by partial position vectors. A branch is
    cut when some class is larger than the ``(diam + 1) ** r`` cells that the
    ``r`` remaining landmarks could split it into.
    """
    if g.n > max_vertices:
        raise SizeCapError(f"{g.n} vertices exceeds the search cap {max_vertices}")
    if g.n == 1:
        return 0, []
    dist = distance_matrix(g)
    diam = max(max(row) for row in dist)
    limit = g.n - 1 if max_size is None else min(max_size, g.n - 1)

    def search(r: int, below: int, classes: list[list[int]], chosen: list[int]):
        if r == 0:
            return list(chosen) if not classes else None
        cap = (diam + 1) ** r
        if any(len(cls) > cap for cls in classes):
            return None
        for z in range(r - 1, below):
            row = dist[z]
            refined = []
            for cls in classes:
                parts = defaultdict(list)
                for v in cls:
                    parts[row[v]].append(v)
                refined.extend(p for p in parts.values() if len(p) > 1)
            chosen.append(z)
            found = search(r - 1, z, refined, chosen)
            chosen.pop()
            if found is not None:
                return found
        return None

    # a vertex set chosen top-down with ascending loops is visited in colex order
    for size in range(1, limit + 1):
        found = search(size, g.n, [list(range(g.n))], [])
        if found is not None:
            return size, sorted(v + 1 for v in found)
    raise SearchExhausted(limit + 1, limit)


def canonical_landmarks(n: int, k: int) -> list[Config]:
    """The n configurations that put all k tokens on one vertex, ordered by vertex."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    out = []
    for j in range(n):
        c = [0] * n
        c[j] = k
        out.append(tuple(c))
    return out


def position_via_matrix(x: Sequence[int], dmat: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Row vector times matrix: the position of x with respect to the canonical landmarks."""
    n = len(dmat)
    if len(x) != n:
        raise ValueError(f"configuration of length {len(x)} against a {n}x{n} matrix")
    return tuple(sum(x[i] * dmat[i][j] for i in range(n)) for j in range(n))


def inverse_matrix(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [v / p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    config: Config | None
    witness: tuple[Fraction, ...]


def feasibility(rho: Sequence[int], g: Graph, k: int) -> FeasibilityResult:
    """Decide whether ``rho`` is the canonical position of a configuration of F_k(g)."""
    dmat = distance_matrix(g)
    if len(rho) != g.n:
        raise ValueError(f"vector of length {len(rho)} for a {g.n}-vertex graph")
    if determinant(dmat) == 0:
        raise SingularMatrixError("distance matrix is singular; positions need not determine configurations")
    inv = inverse_matrix(dmat)
    x = tuple(sum(Fraction(rho[i]) * inv[i][j] for i in range(g.n)) for j in range(g.n))
    ok = all(v.denominator == 1 and v >= 0 for v in x) and sum(x) == k
    return FeasibilityResult(ok, tuple(int(v) for v in x) if ok else None, x)


def inverse_complete_distance(n: int) -> list[list[Fraction]]:
    """Inverse of the distance matrix of K_n: ``(2 - n)/(n - 1)`` on the diagonal, ``1/(n - 1)`` elsewhere."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    diag = Fraction(2 - n, n - 1)
    off = Fraction(1, n - 1)
    return [[diag if i == j else off for j in range(n)] for i in range(n)]


@dataclass
class DimBoundReport:
    """Outcome of checking the canonical landmark sets of F_k(g)."""

    n: int
    k: int
    det: int
    order: int
    canonical_resolves: bool
    collisions: list[list[str]] = field(default_factory=list)
    degree_regular: bool = False
    row_sum: int | None = None
    sums_constant: bool | None = None
    reduced_resolves: bool | None = None
    matrix_agrees_with_bfs: bool | None = None

    @property
    def singular(self) -> bool:
        return self.det == 0

    @property
    def bound(self) -> int | None:
        """Best upper bound on dim(F_k(g)) certified by this report."""
        if self.reduced_resolves:
            return self.n - 1
        if self.canonical_resolves:
            return self.n
        return None


def verify_supertoken_dim_bound(g: Graph, k: int, max_vertices: int = 10**5, check_bfs: bool = True) -> DimBoundReport:
    """Check that the canonical landmarks resolve F_k(g) and, for degree-regular g,
    that the last one can be dropped.

    Positions come from ``x D``; with ``check_bfs`` they are also compared with
    BFS distances in the explicit F_k(g). A singular D is reported, not refused:
    the colliding configurations are listed.
    """
    dmat = distance_matrix(g)
    det = determinant(dmat)
    configs = enumerate_configs(g.n, k)
    if len(configs) > max_vertices:
        raise SizeCapError(f"F_{k} has {len(configs)} vertices (cap {max_vertices})")
    pos = {x: position_via_matrix(x, dmat) for x in configs}
    groups = defaultdict(list)
    for x, p in pos.items():
        groups[p].append(format_config(x))
    collisions = [grp for grp in groups.values() if len(grp) > 1]
    report = DimBoundReport(
        n=g.n,
        k=k,
        det=det,
        order=len(configs),
        canonical_resolves=not collisions,
        collisions=collisions,
    )
    seq = distance_degree_sequence(g)
    if seq is not None:
        lam = row_sum_lambda(seq)
        report.degree_regular = True
        report.row_sum = lam
        report.sums_constant = all(sum(p) == lam * k for p in pos.values())
        reduced = {p[:-1] for p in pos.values()}
        report.reduced_resolves = len(reduced) == len(pos)
    if check_bfs:
        st = build_supertoken(g, k, max_vertices)
        cols = [bfs_distances(st.graph, st.index(z)) for z in canonical_landmarks(g.n, k)]
        report.matrix_agrees_with_bfs = all(
            pos[x] == tuple(col[i] for col in cols) for i, x in enumerate(st.configs)
        )
    return report


def check_inequality_kn(n: int, k: int) -> bool:
    """Strict ``k**(n-2) + n - 2 < C(n+k-1, k)``: when it holds, n-2 landmarks
    cannot resolve F_k(K_n)."""
    if n < 3 or k < 1:
        raise ValueError(f"need n >= 3 and k >= 1, got n={n}, k={k}")
    return k ** (n - 2) + n - 2 < comb(n + k - 1, k)
