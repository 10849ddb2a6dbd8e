"""Minimum-weight perfect matching on square non-negative integer cost matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

__all__ = ["Assignment", "solve_assignment", "brute_force_assignment", "BRUTE_FORCE_MAX"]

BRUTE_FORCE_MAX = 9


@dataclass(frozen=True)
class Assignment:
    """``permutation[i]`` is the (0-based) column matched to row ``i``."""

    permutation: tuple[int, ...]
    total_weight: int

    def pairs(self) -> list[tuple[int, int]]:
        return list(enumerate(self.permutation))

    def indicator(self) -> list[list[int]]:
        """0/1 matrix x_ij of the matching."""
        n = len(self.permutation)
        return [[int(self.permutation[i] == j) for j in range(n)] for i in range(n)]


def _validate(cost: Sequence[Sequence[int]]) -> int:
    n = len(cost)
    for row in cost:
        if len(row) != n:
            raise ValueError("cost matrix must be square")
        for w in row:
            if int(w) != w or w < 0:
                raise ValueError(f"costs must be non-negative integers, got {w!r}")
    return n


def _hungarian(cost: list[list[int]]) -> list[int]:
    # shortest augmenting path with row/column potentials, 1-based sentinels
    n = len(cost)
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    match_col = [0] * (n + 1)  # match_col[j] = row matched to column j
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        match_col[0] = i
        j0 = 0
        minv = [None] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match_col[j0]
            delta = None
            j1 = 0
            row = cost[i0 - 1]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = row[j - 1] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[match_col[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match_col[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match_col[j0] = match_col[j1]
            j0 = j1
    perm = [0] * n
    for j in range(1, n + 1):
        perm[match_col[j] - 1] = j - 1
    return perm


def solve_assignment(cost: Sequence[Sequence[int]]) -> Assignment:
    """Optimal assignment in O(n^3) exact integer arithmetic.

    Among all optimal matchings the lexicographically smallest permutation is
    returned. Each weight is scaled by ``B**n`` (``B = n + 1``) and column ``j``
    of row ``i`` gets the tie-break ``j * B**(n-1-i)``; the tie-break terms sum
    to less than ``B**n``, so they only order permutations of equal cost, and
    they order them by the base-``B`` number whose digits are the permutation.
    """
    n = _validate(cost)
    if n == 0:
        return Assignment((), 0)
    base = n + 1
    scale = base**n
    weights = [base ** (n - 1 - i) for i in range(n)]
    perturbed = [[int(cost[i][j]) * scale + j * weights[i] for j in range(n)] for i in range(n)]
    perm = _hungarian(perturbed)
    return Assignment(tuple(perm), sum(int(cost[i][perm[i]]) for i in range(n)))


def brute_force_assignment(cost: Sequence[Sequence[int]]) -> Assignment:
    """Exhaustive oracle; ``permutations`` yields lexicographic order so the first
    optimum found is the lexicographically smallest."""
    n = _validate(cost)
    if n > BRUTE_FORCE_MAX:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX}, got {n}")
    best = None
    best_perm: tuple[int, ...] = ()
    for perm in permutations(range(n)):
        w = sum(int(cost[i][perm[i]]) for i in range(n))
        if best is None or w < best:
            best, best_perm = w, perm
    return Assignment(best_perm, best or 0)
