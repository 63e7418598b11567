"""Stabbing lines represented as realizable bipartitions.

A line properly crosses segment uv exactly when it separates u from v, so
for counting crossings a line is fully described by the 2-coloring it
induces on the point set. For n points in general position there are
exactly C(n, 2) such colorings with both sides nonempty; every one of them
arises from a directed pair (p, q) by sending the points left of p->q,
plus p, to one side and the rest, plus q, to the other.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .geom_core import Point, PointSet, cross, segments_properly_cross

#: Hard limit on point-set size for the bitmask machinery.
MAX_POINTS = 64


class RepresentativeSetError(RuntimeError):
    """The representative set violated its C(n, 2) cardinality invariant."""


@dataclass(frozen=True, order=True)
class Bipartition:
    """A split of points 0..n-1; bit i of ``mask`` set means point i is on side A.

    Canonical form keeps point 0 on side A.
    """

    mask: int
    n: int

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if not self.mask & 1:
            raise ValueError("canonical bipartition must contain point 0 on side A")
        if self.mask & ~full or self.mask == full:
            raise ValueError(f"mask {self.mask:#x} is not a proper split of {self.n} points")

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Bipartition":
        """Canonicalize an arbitrary side mask."""
        full = (1 << n) - 1
        mask &= full
        if not mask & 1:
            mask ^= full
        return cls(mask, n)

    def side(self, i: int) -> int:
        return (self.mask >> i) & 1

    def separates(self, u: int, v: int) -> bool:
        return bool(((self.mask >> u) ^ (self.mask >> v)) & 1)

    @property
    def side_a(self) -> list[int]:
        return [i for i in range(self.n) if (self.mask >> i) & 1]

    @property
    def side_b(self) -> list[int]:
        return [i for i in range(self.n) if not (self.mask >> i) & 1]


def partition_from_pair(P: Sequence[Point], i: int, j: int) -> Bipartition:
    """Bipartition induced by the directed line through P[i] and P[j].

    Points strictly left of P[i] -> P[j] go with P[i], the rest with P[j].
    """
    if i == j:
        raise ValueError("partition_from_pair needs two distinct indices")
    n = len(P)
    if n > MAX_POINTS:
        raise ValueError(f"at most {MAX_POINTS} points supported, got {n}")
    p, q = P[i], P[j]
    left = 1 << i
    for k, r in enumerate(P):
        if k != i and k != j and cross(p, q, r) > 0:
            left |= 1 << k
    return Bipartition.from_mask(left, n)


@dataclass(frozen=True)
class RepresentativeSet:
    partitions: tuple[Bipartition, ...]
    source: PointSet

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self) -> Iterator[Bipartition]:
        return iter(self.partitions)

    def __getitem__(self, i: int) -> Bipartition:
        return self.partitions[i]

    @property
    def n(self) -> int:
        return len(self.source)

    @property
    def masks(self) -> np.ndarray:
        return np.array([b.mask for b in self.partitions], dtype=np.uint64)

    def side_matrix(self) -> np.ndarray:
        """(partitions x points) 0/1 matrix of sides."""
        masks = [b.mask for b in self.partitions]
        return np.array(
            [[(m >> i) & 1 for i in range(self.n)] for m in masks], dtype=np.uint8
        ).reshape(len(masks), self.n)

    def cut_matrix(self, edges: Sequence[tuple[int, int]]) -> np.ndarray:
        """(edges x partitions) 0/1 matrix: does partition b cut edge e."""
        sides = self.side_matrix()
        if not len(edges):
            return np.zeros((0, len(self.partitions)), dtype=np.uint8)
        e = np.asarray(edges, dtype=np.intp)
        return (sides[:, e[:, 0]] != sides[:, e[:, 1]]).T.astype(np.uint8)


def representative_partitions(P: Sequence[Point]) -> RepresentativeSet:
    """All realizable bipartitions of P, one per equivalence class of lines."""
    if not isinstance(P, PointSet):
        P = PointSet(P)
    n = len(P)
    if n < 2:
        raise ValueError("need at least 2 points")
    P.require_general_position()
    seen: dict[int, None] = {}
    for i, j in itertools.permutations(range(n), 2):
        seen.setdefault(partition_from_pair(P, i, j).mask, None)
    if len(seen) != comb(n, 2):
        raise RepresentativeSetError(
            f"expected C({n},2) = {comb(n, 2)} partitions, found {len(seen)}"
        )
    parts = tuple(Bipartition(m, n) for m in sorted(seen))
    return RepresentativeSet(parts, P)


def hulls_disjoint(P: Sequence[Point], side_a: Sequence[int], side_b: Sequence[int]) -> bool:
    """Brute-force check that conv(A) and conv(B) do not meet.

    Uses only orientation tests: two convex hulls intersect iff some point
    of one lies in a (possibly degenerate) triangle of the other, or some
    segment of one properly crosses a segment of the other. In general
    position the degenerate cases reduce to these.
    """

    def in_triangle(r: Point, a: Point, b: Point, c: Point) -> bool:
        d1, d2, d3 = cross(a, b, r), cross(b, c, r), cross(c, a, r)
        return (d1 > 0 and d2 > 0 and d3 > 0) or (d1 < 0 and d2 < 0 and d3 < 0)

    def on_segment(r: Point, a: Point, b: Point) -> bool:
        return (
            cross(a, b, r) == 0
            and min(a.x, b.x) <= r.x <= max(a.x, b.x)
            and min(a.y, b.y) <= r.y <= max(a.y, b.y)
        )

    A = [P[i] for i in side_a]
    B = [P[i] for i in side_b]
    for X, Y in ((A, B), (B, A)):
        for r in Y:
            if r in X:
                return False
            for a, b in itertools.combinations(X, 2):
                if on_segment(r, a, b):
                    return False
            for a, b, c in itertools.combinations(X, 3):
                if in_triangle(r, a, b, c):
                    return False
    for a, b in itertools.combinations(A, 2):
        for c, d in itertools.combinations(B, 2):
            if segments_properly_cross(a, b, c, d):
                return False
    return True


def all_separable_bipartitions(P: Sequence[Point]) -> list[Bipartition]:
    """Every canonical split with disjoint hulls, by enumerating all 2^(n-1) - 1
    candidates. Exponential; only for checking small instances."""
    n = len(P)
    out = []
    full = (1 << n) - 1
    for mask in range(1, full, 2):
        a = [i for i in range(n) if (mask >> i) & 1]
        b = [i for i in range(n) if not (mask >> i) & 1]
        if hulls_disjoint(P, a, b):
            out.append(Bipartition(mask, n))
    return out
