"""Independent reference implementations used by the tests.

Nothing here touches the representative-set code, so agreement with it is
meaningful.
"""
from __future__ import annotations

import itertools
import math
import random

import numpy as np
from hypothesis import assume, strategies as st

from stabkit.geom_core import PointSet, is_general_position, segments_properly_cross


#: "criterion N PASS/FAIL ..." lines, echoed in the terminal summary by conftest.
ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str) -> bool:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def random_points(rng: random.Random, n: int, span: int = 1000) -> PointSet:
    while True:
        P = PointSet((rng.randint(-span, span), rng.randint(-span, span)) for _ in range(n))
        if is_general_position(P):
            return P


def random_edges(rng: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    return [e for e in itertools.combinations(range(n), 2) if rng.random() < p]


def random_forest(rng: random.Random, n: int, keep: float = 0.8) -> list[tuple[int, int]]:
    """Random recursive tree on a shuffled labelling, with some edges dropped."""
    order = list(range(n))
    rng.shuffle(order)
    edges = []
    for t in range(1, n):
        u, v = order[t], order[rng.randrange(t)]
        if rng.random() < keep:
            edges.append((min(u, v), max(u, v)))
    return edges


def _cut(proj: np.ndarray, edges: np.ndarray, c: float) -> int:
    s = proj - c
    return int(np.count_nonzero(s[edges[:, 0]] * s[edges[:, 1]] < 0))


def sweep_stabbing_number(P: PointSet, edges) -> int:
    """Stabbing number by sweeping lines in floating point.

    The combinatorial type of a line only changes at directions parallel to
    a point pair, so lines just off each such direction, placed between
    every two consecutive projections, cover every realizable split.
    """
    if not edges:
        return 0
    pts = np.array(P.coords(), dtype=float)
    e = np.asarray(edges, dtype=np.intp)
    best = 0
    for i, j in itertools.combinations(range(len(P)), 2):
        base = math.atan2(*(pts[j] - pts[i])[::-1])
        for a in (base + 1e-9, base - 1e-9):
            normal = np.array([-math.sin(a), math.cos(a)])
            proj = pts @ normal
            srt = np.sort(proj)
            for c in (srt[1:] + srt[:-1]) / 2:
                best = max(best, _cut(proj, e, c))
    return best


def sampled_line_lower_bound(P: PointSet, edges, rng: random.Random, samples: int = 2000) -> int:
    """Max edges crossed over uniformly random lines through the bounding box."""
    if not edges:
        return 0
    pts = np.array(P.coords(), dtype=float)
    e = np.asarray(edges, dtype=np.intp)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    best = 0
    for _ in range(samples):
        a = rng.uniform(0, math.pi)
        normal = np.array([-math.sin(a), math.cos(a)])
        x = np.array([rng.uniform(lo[0], hi[0]), rng.uniform(lo[1], hi[1])])
        best = max(best, _cut(pts @ normal, e, float(x @ normal)))
    return best


def brute_force_triangulation_count(P: PointSet) -> int:
    """Maximal non-crossing edge sets, by checking every subset of edges."""
    n = len(P)
    all_edges = list(itertools.combinations(range(n), 2))
    m = len(all_edges)
    conflict = [0] * m
    for a, b in itertools.combinations(range(m), 2):
        (u, v), (w, x) = all_edges[a], all_edges[b]
        if segments_properly_cross(P[u], P[v], P[w], P[x]):
            conflict[a] |= 1 << b
            conflict[b] |= 1 << a
    count = 0
    for mask in range(1 << m):
        ok = True
        for a in range(m):
            if mask >> a & 1:
                if conflict[a] & mask:
                    ok = False
                    break
            elif not conflict[a] & mask:
                ok = False  # could add edge a without a crossing: not maximal
                break
        count += ok
    return count


@st.composite
def general_position_sets(draw, min_n: int = 3, max_n: int = 7, span: int = 200):
    n = draw(st.integers(min_n, max_n))
    coord = st.tuples(st.integers(-span, span), st.integers(-span, span))
    pts = draw(st.lists(coord, min_size=n, max_size=n, unique=True))
    P = PointSet(pts)
    assume(is_general_position(P))
    return P
