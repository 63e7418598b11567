"""Geometric graphs, their stabbing numbers, and degree-1/degree-2 reductions."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .geom_core import PointSet
from .stab_lines import Bipartition, RepresentativeSet, representative_partitions


class GraphError(ValueError):
    pass


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class GeometricGraph:
    """Straight-line graph on a point set.

    ``live`` lists the vertices still taking part; reductions isolate
    vertices by dropping them from ``live`` rather than renumbering, so
    indices keep referring to ``base``.
    """

    base: PointSet
    edges: frozenset[tuple[int, int]]
    live: frozenset[int] = field(default=None)  # type: ignore[assignment]

    def __init__(self, base, edges: Iterable[Sequence[int]] = (), live: Iterable[int] | None = None):
        if not isinstance(base, PointSet):
            base = PointSet(base)
        n = len(base)
        norm = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for {n} points")
            key = _norm(u, v)
            if key in norm:
                raise GraphError(f"duplicate edge {key}")
            norm.add(key)
        live_set = frozenset(range(n)) if live is None else frozenset(live)
        for u, v in norm:
            if u not in live_set or v not in live_set:
                raise GraphError(f"edge {(u, v)} touches a removed vertex")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "live", live_set)

    @property
    def n(self) -> int:
        return len(self.base)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.live}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def with_edges(self, edges, live=None) -> "GeometricGraph":
        return GeometricGraph(self.base, edges, self.live if live is None else live)

    def components(self) -> list[set[int]]:
        """Connected components over the live vertices."""
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for s in sorted(self.live):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            seen.add(s)
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(comp)
        return comps

    def is_forest(self) -> bool:
        return len(self.edges) == len(self.live) - len(self.components())

    def is_spanning_tree(self) -> bool:
        return len(self.live) == self.n and len(self.edges) == self.n - 1 and self.is_forest()


def cut_size(G: GeometricGraph, b: Bipartition) -> int:
    """Number of edges of G a line inducing ``b`` crosses."""
    return sum(1 for u, v in G.edges if b.separates(u, v))


@dataclass(frozen=True)
class EdgeCutProfile:
    """Cut count of a graph for every partition of a representative set."""

    counts: np.ndarray
    H: RepresentativeSet

    @property
    def stabbing_number(self) -> int:
        return int(self.counts.max()) if self.counts.size else 0

    def argmax(self) -> Bipartition | None:
        if not self.counts.size or not self.counts.max():
            return None
        return self.H[int(np.argmax(self.counts))]


def cut_profile(G: GeometricGraph, H: RepresentativeSet | None = None) -> EdgeCutProfile:
    if H is None:
        H = representative_partitions(G.base)
    if len(H.source) != G.n:
        raise GraphError("representative set built for a different point set")
    cut = H.cut_matrix(G.sorted_edges())
    counts = cut.sum(axis=0, dtype=np.int64) if cut.size else np.zeros(len(H), dtype=np.int64)
    return EdgeCutProfile(counts, H)


def stabbing_number(G: GeometricGraph, H: RepresentativeSet | None = None) -> int:
    """Maximum number of edges of G properly crossed by a single line."""
    if not G.edges:
        return 0
    return cut_profile(G, H).stabbing_number


def max_stabbing_partition(G: GeometricGraph, H: RepresentativeSet | None = None):
    """(stabbing number, a maximizing partition or None for edgeless graphs)."""
    prof = cut_profile(G, H)
    return prof.stabbing_number, prof.argmax()


def remove_degree1(G: GeometricGraph, v: int) -> GeometricGraph:
    """Delete the single edge at ``v`` and drop ``v`` from the live set."""
    incident = [e for e in G.edges if v in e]
    if len(incident) != 1:
        raise GraphError(f"vertex {v} has degree {len(incident)}, expected 1")
    return G.with_edges(G.edges - set(incident), G.live - {v})


def contract_degree2(G: GeometricGraph, v: int) -> GeometricGraph:
    """Replace the path w1 - v - w2 by the segment w1 w2."""
    incident = [e for e in G.edges if v in e]
    if len(incident) != 2:
        raise GraphError(f"vertex {v} has degree {len(incident)}, expected 2")
    w1, w2 = (u if u != v else w for u, w in incident)
    new = _norm(w1, w2)
    if new in G.edges:
        raise GraphError(f"contracting {v} would duplicate edge {new}")
    return G.with_edges((G.edges - set(incident)) | {new}, G.live - {v})


def reduce_with_specials(G: GeometricGraph, specials: Sequence[int]) -> GeometricGraph:
    """Strip non-special vertices of degree <= 2 from a forest until none remain.

    Degree-0 vertices are dropped, degree-1 vertices removed and degree-2
    vertices contracted. The queue is processed in ascending index order so
    the result is reproducible.
    """
    specials = list(specials)
    if len(set(specials)) != 3:
        raise GraphError("need exactly 3 distinct special vertices")
    if not set(specials) <= G.live:
        raise GraphError("special vertices must be live")
    if not G.is_forest():
        raise GraphError("reduce_with_specials needs a forest")
    special = set(specials)
    live = set(G.live)
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)

    changed = True
    while changed:
        changed = False
        for v in sorted(live - special):
            d = len(adj[v])
            if d > 2:
                continue
            if d == 1:
                (w,) = adj[v]
                adj[w].discard(v)
            elif d == 2:
                w1, w2 = adj[v]
                # cannot already be adjacent: that would close a cycle in a forest
                adj[w1].discard(v)
                adj[w2].discard(v)
                adj[w1].add(w2)
                adj[w2].add(w1)
            adj.pop(v, None)
            live.discard(v)
            changed = True
            break
    edges = {_norm(u, w) for u in live for w in adj[u]}
    return GeometricGraph(G.base, edges, live)
