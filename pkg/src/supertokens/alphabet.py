"""Graphs on alphabets: G(d, c), G+(d, c), and metric-dimension lower bounds.

Words ``x_1...x_c`` over ``[1, d]`` are enumerated lexicographically with x_1
most significant, so word ``x`` is vertex ``1 + sum((x_i - 1) * d**(c - i))``.
In G+(d, c) the extra vertices w_1..w_c follow as ``d**c + 1 .. d**c + c``.
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Sequence

from .graphs import DEFAULT_MAX_VERTICES, Graph, SizeCapError, distance_degree_sequence

__all__ = [
    "words",
    "word_index",
    "word_label",
    "build_gdc",
    "build_gdc_plus",
    "gdc_labels",
    "gdc_plus_labels",
    "w_vertex",
    "gdc_distance",
    "gdc_plus_w_distance",
    "gdc_eccentricity",
    "gdc_eccentricity_printed",
    "gdc_diameter",
    "gdc_plus_diameter",
    "lower_bound_dim",
    "count_bounded_sequences",
    "degree_regular_dim_bound",
]


def _check_params(d: int, c: int, max_vertices: int) -> None:
    if d < 2 or c < 1:
        raise ValueError(f"need d >= 2 and c >= 1, got d={d}, c={c}")
    if d**c > max_vertices:
        raise SizeCapError(f"G({d},{c}) has {d**c} vertices (cap {max_vertices})")


def words(d: int, c: int) -> list[tuple[int, ...]]:
    return list(product(range(1, d + 1), repeat=c))


def word_index(x: Sequence[int], d: int) -> int:
    idx = 0
    for letter in x:
        if not 1 <= letter <= d:
            raise ValueError(f"letter {letter} outside [1,{d}]")
        idx = idx * d + (letter - 1)
    return idx + 1


def word_label(x: Sequence[int]) -> str:
    if all(v <= 9 for v in x):
        return "".join(map(str, x))
    return ",".join(map(str, x))


def w_vertex(d: int, c: int, i: int) -> int:
    """Vertex id of w_i in G+(d, c)."""
    if not 1 <= i <= c:
        raise ValueError(f"w index {i} outside [1,{c}]")
    return d**c + i


def build_gdc(d: int, c: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Distinct words are adjacent when every coordinate differs by at most one."""
    _check_params(d, c, max_vertices)
    return Graph(d**c, _gdc_edges(d, c))


def _gdc_edges(d: int, c: int) -> list[tuple[int, int]]:
    strides = [d ** (c - 1 - i) for i in range(c)]
    edges = []
    for x in product(range(1, d + 1), repeat=c):
        a = word_index(x, d)
        steps = [[o * s for o in (-1, 0, 1) if 1 <= v + o <= d] for v, s in zip(x, strides)]
        for combo in product(*steps):
            b = a + sum(combo)
            if b > a:
                edges.append((a, b))
    return edges


def build_gdc_plus(d: int, c: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """G(d, c) plus w_1..w_c, with w_i adjacent to every word whose i-th letter is 1."""
    _check_params(d, c, max_vertices - c)
    edges = _gdc_edges(d, c)
    for x in product(range(1, d + 1), repeat=c):
        for i in range(c):
            if x[i] == 1:
                edges.append((word_index(x, d), d**c + i + 1))
    return Graph(d**c + c, edges)


def gdc_labels(d: int, c: int) -> list[str]:
    return [word_label(x) for x in words(d, c)]


def gdc_plus_labels(d: int, c: int) -> list[str]:
    return gdc_labels(d, c) + [f"w{i}" for i in range(1, c + 1)]


def gdc_distance(x: Sequence[int], y: Sequence[int]) -> int:
    """Chebyshev distance between two words of equal length."""
    if len(x) != len(y):
        raise ValueError(f"words of different length: {len(x)} vs {len(y)}")
    return max((abs(a - b) for a, b in zip(x, y)), default=0)


def gdc_plus_w_distance(x: Sequence[int], i: int) -> int:
    """Distance from word x to w_i in G+(d, c).

    Either walk straight to a word with letter ``i`` equal to 1 (``x_i`` steps
    including the last hop), or reach some w_j in ``x_j`` steps and cross to
    w_i through the word ``11...1`` in two more.
    """
    if not 1 <= i <= len(x):
        raise ValueError(f"w index {i} outside [1,{len(x)}]")
    detour = min((x[j] + 2 for j in range(len(x)) if j != i - 1), default=x[i - 1])
    return min(x[i - 1], detour)


def gdc_eccentricity(x: Sequence[int], d: int) -> int:
    """Furthest word differs by ``x_i - 1`` (towards letter 1) or ``d - x_i``."""
    if any(not 1 <= v <= d for v in x):
        raise ValueError(f"word {tuple(x)} has letters outside [1,{d}]")
    return max(max(v - 1, d - v) for v in x)


def gdc_eccentricity_printed(x: Sequence[int], d: int) -> int:
    """``max_i max(x_i, d - x_i)``: off by one whenever a letter exceeds d/2."""
    return max(max(v, d - v) for v in x)


def gdc_diameter(d: int, c: int) -> int:
    return d - 1


def gdc_plus_diameter(d: int, c: int) -> int:
    return d


def lower_bound_dim(n: int, d: int) -> int:
    """Smallest c with n <= d**c + c."""
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    c = 1
    while d**c + c < n:
        c += 1
    return c


def count_bounded_sequences(mu: int, counts: Sequence[int], include_zero: bool = False) -> int:
    """Number of length-``mu`` sequences in which letter ``i`` occurs at most ``counts[i]`` times.

    ``counts`` is a distance-degree sequence ``(k_0, k_1, ..., k_d)``. Letters
    are ``1..d`` unless ``include_zero`` also admits letter 0 up to ``k_0`` times.
    Sequences are position-ordered; the count is a DP over letters, choosing
    how many of the remaining positions each letter fills.
    """
    if mu < 0:
        raise ValueError(f"mu must be non-negative, got {mu}")
    letters = list(counts) if include_zero else list(counts[1:])
    # ways[j] = ordered fillings of j positions using the letters seen so far
    ways = [1] + [0] * mu
    for cap in letters:
        nxt = [0] * (mu + 1)
        for used, w in enumerate(ways):
            if not w:
                continue
            for t in range(0, min(cap, mu - used) + 1):
                nxt[used + t] += w * comb(used + t, t)
        ways = nxt
    return ways[mu]


def degree_regular_dim_bound(g: Graph, mu: int) -> bool:
    """Whether ``mu`` landmarks could possibly resolve the degree-regular graph ``g``.

    A position vector has at most ``k_i`` entries equal to ``i``, and a single
    0 when the vertex is itself a landmark; ``False`` rules ``mu`` out.
    """
    seq = distance_degree_sequence(g)
    if seq is None:
        raise ValueError("graph is not degree-regular")
    return g.n <= count_bounded_sequences(mu, seq, include_zero=True)
