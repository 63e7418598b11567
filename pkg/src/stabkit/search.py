"""Minimum-stabbing spanning structures: trees, paths, matchings, triangulations.

Exhaustive modes enumerate every structure in a fixed order and evaluate
them in numpy batches against the cut matrix of the representative set.
The branch-and-bound modes grow structures edge by edge, keep running cut
counts per partition and abandon a branch as soon as some partition is cut
as often as the best complete structure found so far.
"""
from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .geom_core import Point, PointSet, segments_properly_cross
from .geom_graph import GeometricGraph, stabbing_number
from .stab_lines import MAX_POINTS, RepresentativeSet, representative_partitions

EXHAUSTIVE = "exhaustive"
BRANCH_AND_BOUND = "branch_and_bound"
_MODE_ALIASES = {"exhaustive": EXHAUSTIVE, "bnb": BRANCH_AND_BOUND, "branch_and_bound": BRANCH_AND_BOUND}

DEFAULT_WITNESS_CAP = 16
MAX_EXHAUSTIVE_TREE_N = 12
_BATCH = 1 << 17

Edge = tuple[int, int]


class SearchError(ValueError):
    pass


@dataclass
class SearchOutcome:
    optimum: int
    witnesses: list[list[Edge]]
    explored: int
    elapsed: float
    mode: str = EXHAUSTIVE
    graph_class: str = "tree"
    extra: dict = field(default_factory=dict)

    @property
    def witness(self) -> list[Edge] | None:
        return self.witnesses[0] if self.witnesses else None

    def to_dict(self) -> dict:
        return {
            "class": self.graph_class,
            "mode": self.mode,
            "optimum": self.optimum,
            "witness_edges": [list(map(list, w)) for w in self.witnesses],
            "explored": self.explored,
            "seconds": round(self.elapsed, 6),
        }


def _mode(mode: str) -> str:
    try:
        return _MODE_ALIASES[mode]
    except KeyError:
        raise SearchError(f"unknown search mode {mode!r}") from None


def _edge_index(n: int) -> tuple[np.ndarray, list[Edge]]:
    """Edge-id lookup table for K_n with ids in lexicographic (u < v) order."""
    edges = list(itertools.combinations(range(n), 2))
    table = np.full((n, n), -1, dtype=np.intp)
    for k, (u, v) in enumerate(edges):
        table[u, v] = table[v, u] = k
    return table, edges


class _Evaluator:
    """Batched stabbing-number evaluation of edge-id arrays."""

    def __init__(self, H: RepresentativeSet):
        self.table, self.edges = _edge_index(H.n)
        self.cut = H.cut_matrix(self.edges)  # (E, m) uint8

    def stab(self, ids: np.ndarray) -> np.ndarray:
        """ids: (B, k) edge ids -> (B,) stabbing numbers."""
        if ids.shape[1] == 0:
            return np.zeros(ids.shape[0], dtype=np.int64)
        return self.cut[ids].sum(axis=1, dtype=np.uint8).max(axis=1)


class _Incumbent:
    """Running optimum plus the first ``cap`` witnesses, keyed by enumeration rank."""

    def __init__(self, cap: int):
        self.cap = cap
        self.best = None
        self.items: list[tuple[int, np.ndarray]] = []

    def offer(self, values: np.ndarray, ranks: np.ndarray, structures: np.ndarray) -> None:
        if not len(values):
            return
        low = int(values.min())
        if self.best is None or low < self.best:
            self.best = low
            self.items = []
        if low != self.best or len(self.items) >= self.cap:
            return
        hit = np.flatnonzero(values == low)[: self.cap - len(self.items)]
        self.items.extend((int(ranks[h]), structures[h].copy()) for h in hit)

    def merge(self, other: "_Incumbent") -> None:
        if other.best is None:
            return
        if self.best is None or other.best < self.best:
            self.best, self.items = other.best, list(other.items)
        elif other.best == self.best:
            self.items = sorted(self.items + other.items, key=lambda t: t[0])[: self.cap]


def _canon_edges(pairs) -> list[Edge]:
    return sorted(tuple(sorted((int(u), int(v)))) for u, v in pairs)


# ---------------------------------------------------------------------------
# spanning trees
# ---------------------------------------------------------------------------


def prufer_block(n: int, start: int, stop: int) -> np.ndarray:
    """Prüfer sequences with lexicographic ranks in [start, stop) as (B, n-2)."""
    codes = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(codes), n - 2), dtype=np.intp)
    for pos in range(n - 3, -1, -1):
        codes, out[:, pos] = np.divmod(codes, n)
    return out


def decode_prufer(seqs: np.ndarray, n: int) -> np.ndarray:
    """Vectorized Prüfer decoding: (B, n-2) -> (B, n-1, 2) edge endpoints."""
    B = seqs.shape[0]
    rows = np.arange(B)
    deg = np.ones((B, n), dtype=np.int16)
    for pos in range(n - 2):
        np.add.at(deg, (rows, seqs[:, pos]), 1)
    edges = np.empty((B, n - 1, 2), dtype=np.intp)
    for pos in range(n - 2):
        leaf = np.argmax(deg == 1, axis=1)
        parent = seqs[:, pos]
        edges[:, pos, 0] = leaf
        edges[:, pos, 1] = parent
        deg[rows, leaf] = 0
        deg[rows, parent] -= 1
    last = np.argsort(deg != 1, axis=1, kind="stable")[:, :2]
    edges[:, n - 2, 0] = last[:, 0]
    edges[:, n - 2, 1] = last[:, 1]
    return edges


def spanning_trees(n: int) -> Iterator[list[Edge]]:
    """Every labeled spanning tree of K_n, once each, in lexicographic Prüfer order."""
    if n < 3:
        raise SearchError("spanning_trees needs n >= 3")
    if n > MAX_POINTS:
        raise SearchError(f"n > {MAX_POINTS} not supported")
    total = n ** (n - 2)
    for start in range(0, total, _BATCH):
        block = decode_prufer(prufer_block(n, start, min(total, start + _BATCH)), n)
        for tree in block:
            yield _canon_edges(tree)


def _tree_block_worker(args) -> tuple[int, _Incumbent]:
    coords, masks, start, stop, cap = args
    P = PointSet(coords)
    H = RepresentativeSet(tuple(masks), P)
    return _scan_trees(H, start, stop, cap)


def _scan_trees(H: RepresentativeSet, start: int, stop: int, cap: int) -> tuple[int, _Incumbent]:
    n = H.n
    ev = _Evaluator(H)
    inc = _Incumbent(cap)
    for lo in range(start, stop, _BATCH):
        hi = min(stop, lo + _BATCH)
        trees = decode_prufer(prufer_block(n, lo, hi), n)
        ids = ev.table[trees[:, :, 0], trees[:, :, 1]]
        inc.offer(ev.stab(ids), np.arange(lo, hi), trees)
    return stop - start, inc


def _trivial_outcome(n: int, cls: str, mode: str, t0: float) -> SearchOutcome:
    wit = [[(0, 1)]] if n == 2 else [[]]
    return SearchOutcome(1 if n == 2 else 0, wit, 1, time.perf_counter() - t0, mode, cls)


def min_stab_tree(
    P: Sequence[Point],
    mode: str = EXHAUSTIVE,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    threads: int = 1,
    H: RepresentativeSet | None = None,
) -> SearchOutcome:
    """Minimum stabbing number over all spanning trees of P."""
    t0 = time.perf_counter()
    mode = _mode(mode)
    P = P if isinstance(P, PointSet) else PointSet(P)
    n = len(P)
    if n <= 2:
        return _trivial_outcome(n, "tree", mode, t0)
    if mode == EXHAUSTIVE and n > MAX_EXHAUSTIVE_TREE_N:
        raise SearchError(
            f"exhaustive tree search is limited to n <= {MAX_EXHAUSTIVE_TREE_N} "
            f"({n}^{n - 2} trees); use branch-and-bound mode"
        )
    H = H or representative_partitions(P)
    if mode == BRANCH_AND_BOUND:
        return _bnb_tree(P, H, t0)

    total = n ** (n - 2)
    inc = _Incumbent(witness_cap)
    explored = 0
    if threads > 1:
        step = -(-total // (threads * 4))
        jobs = [
            (P.coords(), H.partitions, lo, min(total, lo + step), witness_cap)
            for lo in range(0, total, step)
        ]
        with ProcessPoolExecutor(threads) as pool:
            for count, part in pool.map(_tree_block_worker, jobs):
                explored += count
                inc.merge(part)
    else:
        explored, inc = _scan_trees(H, 0, total, witness_cap)
    witnesses = [_canon_edges(t) for _, t in sorted(inc.items, key=lambda t: t[0])]
    witnesses.sort()
    return SearchOutcome(inc.best, witnesses, explored, time.perf_counter() - t0, mode, "tree")


def _edge_cutlists(H: RepresentativeSet) -> tuple[list[Edge], list[list[int]]]:
    """Edges of K_n ordered by how many partitions cut them (then lexicographically)."""
    _, edges = _edge_index(H.n)
    cut = H.cut_matrix(edges)
    lists = [np.flatnonzero(cut[k]).tolist() for k in range(len(edges))]
    order = sorted(range(len(edges)), key=lambda k: (len(lists[k]), edges[k]))
    return [edges[k] for k in order], [lists[k] for k in order]


def _bnb_tree(P: PointSet, H: RepresentativeSet, t0: float) -> SearchOutcome:
    n = P.__len__()
    edges, cutlists = _edge_cutlists(H)
    E = len(edges)
    counts = [0] * len(H)
    parent = list(range(n))
    best = [n, None]  # no tree has n crossings on one line
    chosen: list[int] = []
    nodes = 0

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def can_span(k: int) -> bool:
        # do the chosen edges plus edges k.. still connect everything
        uf = list(range(n))

        def f(x):
            while uf[x] != x:
                uf[x] = uf[uf[x]]
                x = uf[x]
            return x

        comps = n
        for e in chosen:
            a, b = f(edges[e][0]), f(edges[e][1])
            if a != b:
                uf[a] = b
                comps -= 1
        for e in range(k, E):
            a, b = f(edges[e][0]), f(edges[e][1])
            if a != b:
                uf[a] = b
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def dfs(k: int, cur_max: int) -> None:
        nonlocal nodes
        nodes += 1
        if len(chosen) == n - 1:
            best[0] = cur_max
            best[1] = list(chosen)
            return
        if E - k < n - 1 - len(chosen):
            return
        u, v = edges[k]
        ru, rv = find(u), find(v)
        if ru != rv:
            new_max = cur_max
            for idx in cutlists[k]:
                counts[idx] += 1
                if counts[idx] > new_max:
                    new_max = counts[idx]
            if new_max < best[0]:
                # union without path compression so it can be undone
                parent[ru] = rv
                chosen.append(k)
                dfs(k + 1, new_max)
                chosen.pop()
                parent[ru] = ru
            for idx in cutlists[k]:
                counts[idx] -= 1
        if can_span(k + 1):
            dfs(k + 1, cur_max)

    dfs(0, 0)
    witness = _canon_edges(edges[e] for e in best[1])
    return SearchOutcome(best[0], [witness], nodes, time.perf_counter() - t0, BRANCH_AND_BOUND, "tree")


# ---------------------------------------------------------------------------
# Hamiltonian paths
# ---------------------------------------------------------------------------


def hamiltonian_paths(n: int) -> Iterator[tuple[int, ...]]:
    """Vertex orderings of K_n up to reversal (first label < last label)."""
    if n < 2:
        raise SearchError("hamiltonian_paths needs n >= 2")
    for perm in itertools.permutations(range(n)):
        if perm[0] < perm[-1]:
            yield perm


def _path_array(n: int) -> np.ndarray:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
    return perms[perms[:, 0] < perms[:, -1]]


def min_stab_path(
    P: Sequence[Point],
    mode: str = EXHAUSTIVE,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    H: RepresentativeSet | None = None,
) -> SearchOutcome:
    """Minimum stabbing number over all spanning paths of P."""
    t0 = time.perf_counter()
    mode = _mode(mode)
    P = P if isinstance(P, PointSet) else PointSet(P)
    n = len(P)
    if n <= 2:
        return _trivial_outcome(n, "path", mode, t0)
    if mode == EXHAUSTIVE and n > 10:
        raise SearchError("exhaustive path search is limited to n <= 10")
    H = H or representative_partitions(P)
    if mode == BRANCH_AND_BOUND:
        return _bnb_path(P, H, t0)
    ev = _Evaluator(H)
    paths = _path_array(n)
    ids = ev.table[paths[:, :-1], paths[:, 1:]]
    inc = _Incumbent(witness_cap)
    inc.offer(ev.stab(ids), np.arange(len(paths)), paths)
    witnesses = sorted(_canon_edges(zip(p[:-1], p[1:])) for _, p in inc.items)
    return SearchOutcome(inc.best, witnesses, len(paths), time.perf_counter() - t0, mode, "path")


def _bnb_path(P: PointSet, H: RepresentativeSet, t0: float) -> SearchOutcome:
    n = len(P)
    ev = _Evaluator(H)
    cutlists = [np.flatnonzero(row).tolist() for row in ev.cut]
    counts = [0] * len(H)
    best = [n, None]
    order: list[int] = []
    used = [False] * n
    nodes = 0

    def dfs(cur_max: int) -> None:
        nonlocal nodes
        nodes += 1
        if len(order) == n:
            if order[0] < order[-1]:
                best[0], best[1] = cur_max, list(order)
            return
        last = order[-1]
        for w in range(n):
            if used[w]:
                continue
            cl = cutlists[ev.table[last, w]]
            new_max = cur_max
            for idx in cl:
                counts[idx] += 1
                if counts[idx] > new_max:
                    new_max = counts[idx]
            if new_max < best[0]:
                used[w] = True
                order.append(w)
                dfs(new_max)
                order.pop()
                used[w] = False
            for idx in cl:
                counts[idx] -= 1

    for s in range(n):
        used[s] = True
        order.append(s)
        dfs(0)
        order.pop()
        used[s] = False
    witness = _canon_edges(zip(best[1][:-1], best[1][1:]))
    return SearchOutcome(best[0], [witness], nodes, time.perf_counter() - t0, BRANCH_AND_BOUND, "path")


# ---------------------------------------------------------------------------
# perfect matchings
# ---------------------------------------------------------------------------


def perfect_matchings(n: int) -> Iterator[list[Edge]]:
    """Perfect matchings of K_n in lexicographic order (lowest free vertex first)."""
    if n < 2 or n % 2:
        raise SearchError(f"perfect matchings need an even n >= 2, got {n}")

    def rec(free: list[int]) -> Iterator[list[Edge]]:
        if not free:
            yield []
            return
        a = free[0]
        for t in range(1, len(free)):
            rest = free[1:t] + free[t + 1 :]
            for m in rec(rest):
                yield [(a, free[t])] + m

    yield from rec(list(range(n)))


def double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2)) if k > 0 else 1


def min_stab_matching(
    P: Sequence[Point],
    mode: str = EXHAUSTIVE,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    H: RepresentativeSet | None = None,
) -> SearchOutcome:
    """Minimum stabbing number over all perfect matchings of P."""
    t0 = time.perf_counter()
    mode = _mode(mode)
    P = P if isinstance(P, PointSet) else PointSet(P)
    n = len(P)
    if n % 2:
        raise SearchError(f"perfect matchings need an even number of points, got {n}")
    if n == 0:
        return SearchOutcome(0, [[]], 1, time.perf_counter() - t0, mode, "matching")
    if mode == EXHAUSTIVE and n > 16:
        raise SearchError("exhaustive matching search is limited to n <= 16")
    if n == 2:
        return SearchOutcome(1, [[(0, 1)]], 1, time.perf_counter() - t0, mode, "matching")
    H = H or representative_partitions(P)
    if mode == BRANCH_AND_BOUND:
        return _bnb_matching(P, H, t0)
    ev = _Evaluator(H)
    arr = np.array(list(perfect_matchings(n)), dtype=np.intp)
    ids = ev.table[arr[:, :, 0], arr[:, :, 1]]
    inc = _Incumbent(witness_cap)
    inc.offer(ev.stab(ids), np.arange(len(arr)), arr)
    witnesses = sorted(_canon_edges(m) for _, m in inc.items)
    return SearchOutcome(inc.best, witnesses, len(arr), time.perf_counter() - t0, mode, "matching")


def _bnb_matching(P: PointSet, H: RepresentativeSet, t0: float) -> SearchOutcome:
    n = len(P)
    ev = _Evaluator(H)
    cutlists = [np.flatnonzero(row).tolist() for row in ev.cut]
    counts = [0] * len(H)
    best = [n, None]
    pairs: list[Edge] = []
    free = [True] * n
    nodes = 0

    def dfs(cur_max: int) -> None:
        nonlocal nodes
        nodes += 1
        try:
            a = free.index(True)
        except ValueError:
            best[0], best[1] = cur_max, list(pairs)
            return
        free[a] = False
        for b in range(a + 1, n):
            if not free[b]:
                continue
            cl = cutlists[ev.table[a, b]]
            new_max = cur_max
            for idx in cl:
                counts[idx] += 1
                if counts[idx] > new_max:
                    new_max = counts[idx]
            if new_max < best[0]:
                free[b] = False
                pairs.append((a, b))
                dfs(new_max)
                pairs.pop()
                free[b] = True
            for idx in cl:
                counts[idx] -= 1
        free[a] = True

    dfs(0)
    return SearchOutcome(
        best[0], [_canon_edges(best[1])], nodes, time.perf_counter() - t0, BRANCH_AND_BOUND, "matching"
    )


# ---------------------------------------------------------------------------
# triangulations
# ---------------------------------------------------------------------------


def _crossing_lists(P: Sequence[Point], edges: list[Edge]) -> list[set[int]]:
    crosses: list[set[int]] = [set() for _ in edges]
    for a, b in itertools.combinations(range(len(edges)), 2):
        (p, q), (r, s) = edges[a], edges[b]
        if len({p, q, r, s}) == 4 and segments_properly_cross(P[p], P[q], P[r], P[s]):
            crosses[a].add(b)
            crosses[b].add(a)
    return crosses


def triangulations(P: Sequence[Point]) -> Iterator[list[Edge]]:
    """Every maximal crossing-free edge set of P, each exactly once.

    Edges are decided in lexicographic order. An edge that crosses nothing
    chosen so far may be taken or skipped; a skipped edge must end up
    crossed by a later chosen edge, otherwise the set would not be maximal.
    """
    n = len(P)
    if n < 2:
        return
    edges = list(itertools.combinations(range(n), 2))
    crosses = _crossing_lists(P, edges)
    E = len(edges)
    blocked = [0] * E  # number of chosen edges crossing edge k
    chosen: list[int] = []
    # skipped edges still waiting for a later chosen edge to cross them
    pending: list[int] = []

    def rescuable(k: int, start: int) -> bool:
        return any(j >= start and blocked[j] == 0 for j in crosses[k])

    def rec(k: int) -> Iterator[list[Edge]]:
        if any(blocked[p] == 0 and not rescuable(p, k) for p in pending):
            return
        if k == E:
            yield [edges[e] for e in chosen]
            return
        if blocked[k]:
            yield from rec(k + 1)
            return
        chosen.append(k)
        for j in crosses[k]:
            blocked[j] += 1
        yield from rec(k + 1)
        for j in crosses[k]:
            blocked[j] -= 1
        chosen.pop()
        if any(j > k and blocked[j] == 0 for j in crosses[k]):
            pending.append(k)
            yield from rec(k + 1)
            pending.pop()

    yield from rec(0)


def min_stab_triangulation(
    P: Sequence[Point],
    mode: str = EXHAUSTIVE,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    H: RepresentativeSet | None = None,
) -> SearchOutcome:
    """Minimum stabbing number over all triangulations of P (exhaustive only)."""
    t0 = time.perf_counter()
    mode = _mode(mode)
    if mode != EXHAUSTIVE:
        raise SearchError("triangulation search supports exhaustive mode only")
    P = P if isinstance(P, PointSet) else PointSet(P)
    n = len(P)
    if n > 14:
        raise SearchError("exhaustive triangulation search is limited to n <= 14")
    if n <= 2:
        return _trivial_outcome(n, "triangulation", mode, t0)
    H = H or representative_partitions(P)
    best = None
    witnesses: list[list[Edge]] = []
    explored = 0
    for tri in triangulations(P):
        explored += 1
        s = stabbing_number(GeometricGraph(P, tri), H)
        if best is None or s < best:
            best, witnesses = s, []
        if s == best and len(witnesses) < witness_cap:
            witnesses.append(_canon_edges(tri))
    return SearchOutcome(best, sorted(witnesses), explored, time.perf_counter() - t0, mode, "triangulation")


def count_spanning_trees(n: int) -> int:
    return n ** (n - 2) if n >= 2 else 1
