"""Exact planar primitives on integer points.

Everything here works in plain integer arithmetic, so orientation and
crossing tests never round.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

#: Largest allowed absolute coordinate.
COORD_LIMIT = 2**26


class GeometryError(ValueError):
    """Raised for malformed geometric input."""


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int

    def __post_init__(self) -> None:
        for name in ("x", "y"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise GeometryError(f"{name} must be an int, got {value!r}")
            if abs(value) > COORD_LIMIT:
                raise GeometryError(f"|{name}| = {abs(value)} exceeds 2**26")

    def __iter__(self):
        yield self.x
        yield self.y


def cross(p: Point, q: Point, r: Point) -> int:
    """Signed doubled area of triangle pqr, i.e. (q - p) x (r - p)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    d = cross(p, q, r)
    if d > 0:
        return Orientation.CCW
    if d < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def segments_properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments ab and cd meet in a single interior point.

    Touching at an endpoint or overlapping collinearly does not count.
    """
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


class PointSet(Sequence[Point]):
    """An immutable, indexed sequence of points.

    Construction only checks coordinates; call :func:`is_general_position`
    (or :meth:`require_general_position`) before relying on that property.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[Point | Sequence[int]]):
        pts = []
        for p in points:
            if not isinstance(p, Point):
                x, y = p
                p = Point(int(x), int(y)) if _is_intlike(x) and _is_intlike(y) else Point(x, y)
            pts.append(p)
        self._points = tuple(pts)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return PointSet(self._points[i])
        return self._points[i]

    def __len__(self) -> int:
        return len(self._points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet({[tuple(p) for p in self._points]})"

    def coords(self) -> list[list[int]]:
        return [[p.x, p.y] for p in self._points]

    def subset(self, keep: Iterable[int]) -> "PointSet":
        return PointSet(self._points[i] for i in keep)

    def without(self, drop: Iterable[int]) -> "PointSet":
        drop = set(drop)
        return PointSet(p for i, p in enumerate(self._points) if i not in drop)

    def require_general_position(self) -> None:
        bad = find_degeneracy(self)
        if bad is not None:
            raise GeometryError(f"point set not in general position: indices {bad}")


def _is_intlike(v) -> bool:
    try:
        return int(v) == v and not isinstance(v, bool)
    except (TypeError, ValueError):
        return False


def find_degeneracy(P: Sequence[Point]) -> tuple[int, ...] | None:
    """Indices of a duplicate pair or collinear triple, or None."""
    seen: dict[Point, int] = {}
    for i, p in enumerate(P):
        if p in seen:
            return (seen[p], i)
        seen[p] = i
    for i, j, k in itertools.combinations(range(len(P)), 3):
        if cross(P[i], P[j], P[k]) == 0:
            return (i, j, k)
    return None


def is_general_position(P: Sequence[Point]) -> bool:
    return find_degeneracy(P) is None


def orientation_table(P: Sequence[Point]) -> dict[tuple[int, int, int], int]:
    """Orientation of every increasing index triple (the labeled order type)."""
    return {
        (i, j, k): int(orientation(P[i], P[j], P[k]))
        for i, j, k in itertools.combinations(range(len(P)), 3)
    }


def same_order_type(P: Sequence[Point], Q: Sequence[Point]) -> bool:
    """Labeled order-type equality.

    Comparing increasing triples suffices: every other ordering of a triple
    is a permutation whose orientation follows by antisymmetry.
    """
    if len(P) != len(Q):
        raise GeometryError(f"size mismatch: {len(P)} vs {len(Q)}")
    for i, j, k in itertools.combinations(range(len(P)), 3):
        if orientation(P[i], P[j], P[k]) != orientation(Q[i], Q[j], Q[k]):
            return False
    return True


def convex_position_order(P: Sequence[Point], indices: Sequence[int]) -> bool:
    """True iff the points at ``indices``, in that cyclic order, form a
    strictly convex polygon (either orientation)."""
    m = len(indices)
    if m < 3:
        return True
    sign = orientation(P[indices[0]], P[indices[1]], P[indices[2]])
    if sign == Orientation.COLLINEAR:
        return False
    for t in range(m):
        a, b = P[indices[t]], P[indices[(t + 1) % m]]
        for s in range(m):
            if s in (t, (t + 1) % m):
                continue
            if orientation(a, b, P[indices[s]]) != sign:
                return False
    return True


def is_convex_chain(P: Sequence[Point], indices: Sequence[int]) -> bool:
    """True iff consecutive triples along ``indices`` all turn the same way
    and every point lies on the same side of each chain edge (an open convex
    chain, e.g. part of a convex polygon boundary)."""
    m = len(indices)
    if m < 3:
        return True
    turns = {
        orientation(P[indices[t]], P[indices[t + 1]], P[indices[t + 2]])
        for t in range(m - 2)
    }
    if len(turns) != 1 or Orientation.COLLINEAR in turns:
        return False
    sign = next(iter(turns))
    for t in range(m - 1):
        a, b = P[indices[t]], P[indices[t + 1]]
        for s in range(m):
            if s in (t, t + 1):
                continue
            if orientation(a, b, P[indices[s]]) != sign:
                return False
    return True
