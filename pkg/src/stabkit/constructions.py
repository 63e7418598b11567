"""Point sets whose minimum stabbing number drops when a point is added.

Three families are generated with fixed integer coordinates:

* trees: three arms around a center O; adding O lowers the tree stabbing
  number from 4 to 3 (a 9-point core, generalised to any n >= 9 by
  replacing one arm tip with a short flat convex chain);
* triangulations: two facing convex chains, plus two points between them;
* perfect matchings: a convex polygon with an interior point, every point
  doubled by a close partner.

Nothing is emitted before every geometric condition the argument depends
on has been re-checked exactly on the final integer coordinates.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Sequence

from .geom_core import (
    Orientation,
    Point,
    PointSet,
    convex_position_order,
    cross,
    find_degeneracy,
    is_convex_chain,
    orientation,
    same_order_type,
    segments_properly_cross,
)
from .geom_graph import GeometricGraph, stabbing_number
from .stab_lines import MAX_POINTS, RepresentativeSet, representative_partitions


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }

    def require(self) -> None:
        if not self.passed:
            msg = "; ".join(f"{c.name}: {c.detail}" for c in self.failures)
            raise ConstructionError(f"construction failed validation: {msg}")


@dataclass(frozen=True)
class ConstructionBundle:
    """A counterexample pair ``small`` = ``big`` minus ``removed``.

    ``small`` keeps the relative order of ``big``'s remaining points, so
    ``small_index[i]`` is the big-set index of small point i.
    """

    kind: str
    big: PointSet
    removed: tuple[int, ...]
    labels: tuple[str, ...]
    witness: GeometricGraph
    params: dict = field(default_factory=dict)
    validation: ValidationReport | None = None

    @property
    def small_index(self) -> list[int]:
        gone = set(self.removed)
        return [i for i in range(len(self.big)) if i not in gone]

    @property
    def small(self) -> PointSet:
        return self.big.subset(self.small_index)

    @property
    def small_labels(self) -> list[str]:
        return [self.labels[i] for i in self.small_index]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ConstructionError(f"bundle has no point labelled {label!r}") from None

    def with_point(self, label: str, xy: Sequence[int]) -> "ConstructionBundle":
        """Copy with one point moved; the copy is not validated."""
        i = self.index(label)
        pts = list(self.big)
        pts[i] = Point(*xy)
        big = PointSet(pts)
        return replace(
            self, big=big, witness=GeometricGraph(big, self.witness.edges), validation=None
        )


def _r(v: float) -> int:
    return int(round(v))


def _polar(origin, radius: float, degrees: float) -> tuple[float, float]:
    t = math.radians(degrees)
    return origin[0] + radius * math.cos(t), origin[1] + radius * math.sin(t)


def _one_side(P: Sequence[Point], a: int, b: int, others) -> tuple[bool, list[int]]:
    """Are all points ``others`` strictly on one side of line(P[a], P[b])?"""
    signs = {}
    for i in others:
        signs[i] = orientation(P[a], P[b], P[i])
    values = set(signs.values())
    ok = len(values) == 1 and Orientation.COLLINEAR not in values
    if ok:
        return True, []
    majority = max(values, key=lambda s: sum(1 for v in signs.values() if v == s))
    return False, sorted(i for i, s in signs.items() if s != majority)


def _general_position_checks(report: ValidationReport, bundle: ConstructionBundle) -> None:
    for name, P in (("general_position_big", bundle.big), ("general_position_small", bundle.small)):
        bad = find_degeneracy(P)
        report.add(name, bad is None, "" if bad is None else f"degenerate indices {bad}")


# ---------------------------------------------------------------------------
# tree counterexample
# ---------------------------------------------------------------------------

# arm geometry, angles in degrees
_ARM_TURN_AT_X = 15.0
_ARM_TURN_AT_Y = 60.0
_ARM_XY = 0.6
_ARM_YZ = 0.6
# per-step chain length (fraction of R) and turn, capped so long chains
# stay within a fixed total length and total turn
_CHAIN_STEP = 0.02
_CHAIN_TURN = 1.0
_CHAIN_TOTAL_LENGTH = 0.12
_CHAIN_TOTAL_TURN = 3.0
_Z3_PUSH = 4.0


def _tree_layout(R: float, chain: int | None, push: float):
    """Raw float coordinates and labels; ``chain=None`` means plain z1."""
    names: list[str] = []
    coords: list[tuple[float, float]] = []
    for i in range(3):
        theta = 90.0 + 120.0 * i
        x = _polar((0.0, 0.0), R, theta)
        d1 = theta + _ARM_TURN_AT_X
        y = _polar(x, _ARM_XY * R, d1)
        d2 = d1 + _ARM_TURN_AT_Y
        names += [f"x{i + 1}", f"y{i + 1}"]
        coords += [x, y]
        if i == 0 and chain is not None:
            cur, d = y, d2
            step = min(_CHAIN_STEP, _CHAIN_TOTAL_LENGTH / chain) * R
            turn = min(_CHAIN_TURN, _CHAIN_TOTAL_TURN / chain)
            for j in range(chain):
                cur = _polar(cur, step, d)
                d += turn
                names.append(f"p{j + 1}")
                coords.append(cur)
        else:
            length = _ARM_YZ * R * (push if i == 2 else 1.0)
            names.append(f"z{i + 1}")
            coords.append(_polar(y, length, d2))
    names.append("O")
    coords.append((0.0, 0.0))
    return names, PointSet((_r(a), _r(b)) for a, b in coords)


def _tree_witness(big: PointSet, labels: Sequence[str]) -> GeometricGraph:
    ix = {m: i for i, m in enumerate(labels)}
    edges = []
    for i in (1, 2, 3):
        edges += [(ix["O"], ix[f"x{i}"]), (ix[f"x{i}"], ix[f"y{i}"])]
    edges += [(ix["y2"], ix["z2"]), (ix["y3"], ix["z3"])]
    tip = _arm1_tip(labels)
    edges += [(ix[a], ix[b]) for a, b in zip(tip, tip[1:])]
    return GeometricGraph(big, edges)


def _arm1_tip(labels: Sequence[str]) -> list[str]:
    """y1 followed by the chain replacing z1 (or z1 itself)."""
    chain = [m for m in labels if m.startswith("p")]
    return ["y1"] + (chain if chain else ["z1"])


_TREE_LABELS = {"x1", "y1", "x2", "y2", "z2", "x3", "y3", "z3", "O"}


def gen_tree_cex_9() -> ConstructionBundle:
    """The 9-point set and its 10-point superset with O, symmetric layout."""
    labels, big = _tree_layout(10**5, chain=None, push=1.0)
    bundle = ConstructionBundle(
        kind="tree9",
        big=big,
        removed=(labels.index("O"),),
        labels=tuple(labels),
        witness=_tree_witness(big, labels),
        params={"radius": 10**5, "pushed_z3": False},
    )
    return _finish(bundle, validate_tree_cex)


def gen_tree_cex(n: int) -> ConstructionBundle:
    """n-point set (n >= 9) whose tree stabbing number drops to 3 once O is added.

    z1 is replaced by a flat convex chain p1..pk (k = n - 8) hugging y1, and
    z3 is pushed out along its arm so that for every inner chain vertex a
    line crosses both chain edges at it and the segment y3 z3.
    """
    if n < 9:
        raise ConstructionError(f"tree construction needs n >= 9, got {n}")
    if n + 1 > MAX_POINTS:
        raise ConstructionError(f"tree construction supports n <= {MAX_POINTS - 1}, got {n}")
    k = n - 8
    labels, big = _tree_layout(10**6, chain=k, push=_Z3_PUSH)
    bundle = ConstructionBundle(
        kind="tree",
        big=big,
        removed=(labels.index("O"),),
        labels=tuple(labels),
        witness=_tree_witness(big, labels),
        params={"n": n, "k": k, "radius": 10**6, "pushed_z3": True, "z3_push": _Z3_PUSH},
    )
    return _finish(bundle, validate_tree_cex)


def _finish(bundle: ConstructionBundle, validator) -> ConstructionBundle:
    report = validator(bundle)
    report.require()
    return replace(bundle, validation=report)


def validate_tree_cex(bundle: ConstructionBundle, H: RepresentativeSet | None = None) -> ValidationReport:
    labels = bundle.labels
    missing = _TREE_LABELS - set(labels)
    if missing or not ({"z1"} & set(labels) or any(m.startswith("p") for m in labels)):
        raise ConstructionError(f"bundle is not a tree construction (missing {sorted(missing)})")
    P = bundle.big
    ix = {m: i for i, m in enumerate(labels)}
    everyone = range(len(P))
    pushed = bool(bundle.params.get("pushed_z3"))
    tip = _arm1_tip(labels)
    report = ValidationReport()
    _general_position_checks(report, bundle)
    if not report.passed:
        return report

    # arms flat enough: line x_i y_i hits the open segment O x_{i+2}
    for i in (1, 2, 3):
        j = (i + 1) % 3 + 1
        x, y = P[ix[f"x{i}"]], P[ix[f"y{i}"]]
        s1 = cross(x, y, P[ix["O"]])
        s2 = cross(x, y, P[ix[f"x{j}"]])
        report.add(f"flat_{i}", s1 * s2 < 0, f"line x{i}y{i} vs segment O x{j}")

    # arms curved enough: the last arm segment(s) keep everything else on one side
    for i in (2, 3):
        a, b = ix[f"y{i}"], ix[f"z{i}"]
        ok, bad = _one_side(P, a, b, [t for t in everyone if t not in (a, b)])
        report.add(f"curved_{i}", ok, f"points off side: {[labels[t] for t in bad]}")
    exempt = {ix["z3"]} if pushed else set()
    bad_edges = []
    for u, v in zip(tip, tip[1:]):
        a, b = ix[u], ix[v]
        ok, bad = _one_side(P, a, b, [t for t in everyone if t not in (a, b) and t not in exempt])
        if not ok:
            bad_edges.append((u, v, [labels[t] for t in bad]))
    report.add("curved_1", not bad_edges, f"violations: {bad_edges}" if bad_edges else "")

    # O, x_i, y_i, tip_i are convex chains turning the same way
    turns = set()
    for i in (1, 2, 3):
        chain = ["O", f"x{i}", f"y{i}"] + (tip[1:] if i == 1 else [f"z{i}"])
        idx = [ix[m] for m in chain]
        ok = is_convex_chain(P, idx)
        turns.add(orientation(P[idx[0]], P[idx[1]], P[idx[2]]))
        report.add(f"convex_chain_{i}", ok, "->".join(chain))
    report.add("chains_same_turn", len(turns) == 1, f"turn signs {sorted(int(t) for t in turns)}")

    if bundle.kind == "tree":
        _tree_general_checks(report, bundle, ix, tip, pushed, H)

    W = bundle.witness
    report.add("witness_spanning_tree", W.is_spanning_tree(), f"{len(W.edges)} edges")
    s = stabbing_number(W, H)
    report.add("witness_stab_3", s == 3, f"stabbing number {s}")
    return report


def _tree_general_checks(report, bundle, ix, tip, pushed, H) -> None:
    P = bundle.big
    labels = bundle.labels
    cluster = [ix[m] for m in tip]
    outside = [i for i in range(len(P)) if i not in cluster]

    # no line through two outside points separates the cluster y1, p1..pk
    splitters = []
    for a, b in itertools.combinations(outside, 2):
        ok, _ = _one_side(P, a, b, cluster)
        if not ok:
            splitters.append((labels[a], labels[b]))
    report.add("chain_cluster_unsplit", not splitters, f"splitting lines: {splitters[:5]}")

    # keeping any two of y1, p1..pk (in chain order) gives the same labeled order type
    base = None
    changed = []
    for keep in itertools.combinations(cluster, 2):
        sub = P.subset(sorted(set(outside) | set(keep)))
        if base is None:
            base = sub
        elif not same_order_type(base, sub):
            changed.append(tuple(labels[t] for t in keep))
    report.add("order_type_stable", not changed, f"differs when keeping {changed[:5]}")

    if pushed:
        # z3 beyond every line through consecutive cluster points
        z3 = ix["z3"]
        wrong = []
        for a, b in zip(cluster, cluster[1:]):
            ref = ix["O"]
            if orientation(P[a], P[b], P[z3]) != -orientation(P[a], P[b], P[ref]):
                wrong.append((labels[a], labels[b]))
        report.add("z3_beyond_chain_lines", not wrong, f"lines not passed: {wrong[:5]}")

    # every consecutive triple on x1, y1, p1..pk has a line through both its
    # segments and y3 z3
    H = H or representative_partitions(P)
    c1 = ["x1"] + tip
    y3, z3 = ix["y3"], ix["z3"]
    missing = []
    for a, b, c in zip(c1, c1[1:], c1[2:]):
        segs = [(ix[a], ix[b]), (ix[b], ix[c]), (y3, z3)]
        if not any(all(h.separates(u, v) for u, v in segs) for h in H):
            missing.append((a, b, c))
    report.add("triple_line_through_y3z3", not missing, f"no line for {missing}")


# ---------------------------------------------------------------------------
# triangulation counterexample
# ---------------------------------------------------------------------------

_TRI_HALF_WIDTH = 10**5
_TRI_HALF_HEIGHT = 10**5
_TRI_BULGE = 4000
_TRI_NUDGE = 2


def _facing_chains(n: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    ts = [1 - 2 * j / (n - 1) for j in range(n)]
    left = [
        (_r(-_TRI_HALF_WIDTH + _TRI_BULGE * (1 - t * t)), _r(_TRI_HALF_HEIGHT * t)) for t in ts
    ]
    right = [(-x, y) for x, y in left]
    return left, right


def _balanced_fan(idx: Sequence[int]) -> set[tuple[int, int]]:
    """Edges of a logarithmic-depth triangulation of the convex polygon ``idx``."""
    edges = {(idx[0], idx[-1])}

    def rec(lo: int, hi: int) -> None:
        if hi - lo < 2:
            return
        mid = (lo + hi) // 2
        edges.add((idx[lo], idx[mid]))
        edges.add((idx[mid], idx[hi]))
        rec(lo, mid)
        rec(mid, hi)

    rec(0, len(idx) - 1)
    return {tuple(sorted(e)) for e in edges}


def complete_triangulation(P: Sequence[Point], forced) -> list[tuple[int, int]]:
    """Extend pairwise non-crossing ``forced`` edges to a maximal crossing-free
    set by adding remaining edges shortest first."""

    def crosses(e, f) -> bool:
        return len({*e, *f}) == 4 and segments_properly_cross(P[e[0]], P[e[1]], P[f[0]], P[f[1]])

    chosen: list[tuple[int, int]] = []
    for e in sorted(tuple(sorted(e)) for e in forced):
        if any(crosses(e, f) for f in chosen):
            raise ConstructionError(f"forced edge {e} crosses another forced edge")
        chosen.append(e)
    taken = set(chosen)

    def sqlen(e):
        a, b = P[e[0]], P[e[1]]
        return ((a.x - b.x) ** 2 + (a.y - b.y) ** 2, e)

    for e in sorted(itertools.combinations(range(len(P)), 2), key=sqlen):
        if e not in taken and not any(crosses(e, f) for f in chosen):
            chosen.append(e)
            taken.add(e)
    return sorted(chosen)


def hull_size(P: Sequence[Point]) -> int:
    pts = sorted(set(P))
    if len(pts) < 3:
        return len(pts)

    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return len(lower) + len(upper) - 2


def tri_stab_bound(n: int) -> float:
    return n + 4 * math.log2(n) + 3


def gen_tri_cex(n: int) -> ConstructionBundle:
    """Two facing convex chains of n points each (``small``), plus two points
    between their middle points (``big``)."""
    if n < 4 or n % 2:
        raise ConstructionError(f"triangulation construction needs an even n >= 4, got {n}")
    if 2 * n + 2 > MAX_POINTS:
        raise ConstructionError(f"triangulation construction supports n <= {(MAX_POINTS - 2) // 4 * 2}, got {n}")
    left, right = _facing_chains(n)
    m = n // 2 - 1
    a, b = left[m], right[m]
    q1 = (_r(a[0] + (b[0] - a[0]) / 3), _r(a[1] + (b[1] - a[1]) / 3) + _TRI_NUDGE)
    q2 = (_r(a[0] + 2 * (b[0] - a[0]) / 3), _r(a[1] + 2 * (b[1] - a[1]) / 3) - _TRI_NUDGE)
    big = PointSet(left + right + [q1, q2])
    labels = [f"p{j + 1}" for j in range(n)] + [f"p{j + 1}'" for j in range(n)] + ["q1", "q2"]

    c1, c2 = list(range(n)), list(range(n, 2 * n))
    iq1, iq2 = 2 * n, 2 * n + 1
    forced = _balanced_fan(c1) | _balanced_fan(c2)
    forced |= {(c, iq1) for c in c1} | {(c, iq2) for c in c2} | {(iq1, iq2)}
    witness = GeometricGraph(big, complete_triangulation(big, forced))
    bundle = ConstructionBundle(
        kind="tri",
        big=big,
        removed=(iq1, iq2),
        labels=tuple(labels),
        witness=witness,
        params={"n": n, "bound": tri_stab_bound(n)},
    )
    return _finish(bundle, validate_tri_cex)


def green_bundles(n: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Fan edges q1 -> C1 and q2 -> C2 of the triangulation witness."""
    return [(c, 2 * n) for c in range(n)], [(c, 2 * n + 1) for c in range(n, 2 * n)]


def validate_tri_cex(bundle: ConstructionBundle, H: RepresentativeSet | None = None) -> ValidationReport:
    n = bundle.params.get("n")
    P = bundle.big
    if n is None or len(P) != 2 * n + 2 or set(bundle.removed) != {2 * n, 2 * n + 1}:
        raise ConstructionError("bundle is not a triangulation construction")
    report = ValidationReport()
    _general_position_checks(report, bundle)
    if not report.passed:
        return report
    c1, c2 = list(range(n)), list(range(n, 2 * n))

    for name, chain in (("convex_chain_1", c1), ("convex_chain_2", c2)):
        report.add(name, is_convex_chain(P, chain))
    mirrored = all(P[i + n] == Point(-P[i].x, P[i].y) for i in c1)
    report.add("mirror_symmetric", mirrored)

    # chain edges cannot be crossed by any segment of the small set, and every
    # longer segment inside a chain has the points it skips on the other
    # chain's side; so every triangulation joins the chains 2n-1 times
    small = bundle.small
    crossed = []
    for chain in (c1, c2):
        for a, b in zip(chain, chain[1:]):
            for u, v in itertools.combinations(range(2 * n), 2):
                if len({a, b, u, v}) == 4 and segments_properly_cross(small[a], small[b], small[u], small[v]):
                    crossed.append((bundle.labels[a], bundle.labels[b]))
                    break
    report.add("chain_edges_uncrossable", not crossed, f"crossable chain edges {crossed[:5]}")
    blocked = []
    for mine, other in ((c1, c2), (c2, c1)):
        for i, j in itertools.combinations(range(n), 2):
            a, b = mine[i], mine[j]
            sides = {orientation(P[a], P[b], P[o]) for o in other}
            sides |= {orientation(P[a], P[b], P[mine[t]]) for t in range(i + 1, j)}
            if len(sides) != 1 or Orientation.COLLINEAR in sides:
                blocked.append((bundle.labels[a], bundle.labels[b]))
    report.add("chains_face_each_other", not blocked, f"bad chain segments {blocked[:5]}")
    report.add("hull_is_chain_ends", hull_size(small) == 4, f"hull size {hull_size(small)}")

    # added points are nudged copies of points on the middle segment
    m = n // 2 - 1
    a, b = P[m], P[n + m]
    seg_len = math.hypot(b.x - a.x, b.y - a.y)
    near = []
    for q in (P[2 * n], P[2 * n + 1]):
        dist = abs(cross(a, b, q)) / seg_len
        t = ((q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y)) / seg_len**2
        near.append(dist <= 4 and 0 < t < 1)
    report.add("added_points_on_middle_segment", all(near))

    W = bundle.witness
    edges = W.sorted_edges()
    crossing = any(
        len({*e, *f}) == 4 and segments_properly_cross(P[e[0]], P[e[1]], P[f[0]], P[f[1]])
        for e, f in itertools.combinations(edges, 2)
    )
    expected = 3 * len(P) - 3 - hull_size(P)
    report.add(
        "witness_is_triangulation",
        not crossing and len(edges) == expected,
        f"{len(edges)} edges, a triangulation has {expected}",
    )

    H = H or representative_partitions(P)
    s = stabbing_number(W, H)
    bound = tri_stab_bound(n)
    report.add("witness_stab_within_bound", s <= bound, f"stabbing number {s}, bound {bound:.3f}")

    g1, g2 = green_bundles(n)
    present = set(W.edges)
    have = all(tuple(sorted(e)) in present for e in g1 + g2)
    cut1 = H.cut_matrix(g1).sum(axis=0)
    cut2 = H.cut_matrix(g2).sum(axis=0)
    load = int((cut1 + cut2).max())
    report.add("green_bundles_present", have)
    report.add("green_bundle_load", load <= n + 1, f"max fan edges on one line {load}, n = {n}")
    return report


# ---------------------------------------------------------------------------
# matching counterexample
# ---------------------------------------------------------------------------

_MATCH_RADIUS = 10**5


def gen_matching_cex(k: int) -> ConstructionBundle:
    """Convex k-gon p1..pk with inner point x, every point doubled.

    ``big`` = x, p1..pk, x', p1'..pk' and ``small`` drops x' and p1'.
    """
    if k < 5:
        raise ConstructionError(
            f"matching construction needs k >= 5, got {k}: with k <= 4 some segment "
            "from the inner point to a vertex is crossed by no other chord"
        )
    if 2 * k + 2 > MAX_POINTS:
        raise ConstructionError(f"matching construction supports k <= {(MAX_POINTS - 2) // 2}, got {k}")
    R = _MATCH_RADIUS
    labels = ["x"] + [f"p{i + 1}" for i in range(k)] + ["x'"] + [f"p{i + 1}'" for i in range(k)]
    half = k + 1
    last_report = None
    # fixed candidate list, first layout that validates wins
    for turn, inner, shift in itertools.product(_MATCH_ROTATIONS, _MATCH_INNER, _MATCH_SHIFTS):
        poly = [_polar((0.0, 0.0), R, 90.0 + turn + 360.0 * i / k) for i in range(k)]
        base = [(_r(R * inner[0]), _r(R * inner[1]))] + [(_r(a), _r(b)) for a, b in poly]
        partners = [
            (x + shift[0] + i % 3, y + shift[1] + 2 * (i % 2)) for i, (x, y) in enumerate(base)
        ]
        big = PointSet(base + partners)
        witness = GeometricGraph(big, [(i, i + half) for i in range(half)])
        bundle = ConstructionBundle(
            kind="matching",
            big=big,
            removed=(half, half + 1),
            labels=tuple(labels),
            witness=witness,
            params={"k": k},
        )
        last_report = validate_matching_cex(bundle)
        if last_report.passed:
            return replace(bundle, validation=last_report)
    last_report.require()
    raise AssertionError("unreachable")


# inner point as a fraction of the radius; the center works for odd k
_MATCH_INNER = [(0.0, 0.0), (1 / 7, 1 / 13), (1 / 11, 1 / 19), (2 / 17, -1 / 23), (-1 / 29, 3 / 31)]
_MATCH_SHIFTS = [(3, 1), (1, 3), (2, -3), (-3, 2)]
# polygon rotation in degrees; symmetric k (multiples of 4) need a nonzero one
_MATCH_ROTATIONS = [0.0, 7 / 3, 11 / 7]


def validate_matching_cex(bundle: ConstructionBundle, H: RepresentativeSet | None = None) -> ValidationReport:
    k = bundle.params.get("k")
    P = bundle.big
    if k is None or len(P) != 2 * k + 2:
        raise ConstructionError("bundle is not a matching construction")
    report = ValidationReport()
    _general_position_checks(report, bundle)
    if not report.passed:
        return report
    half = k + 1
    poly = list(range(1, half))
    x = 0
    report.add("polygon_convex", convex_position_order(P, poly))
    inside = {orientation(P[poly[i]], P[poly[(i + 1) % k]], P[x]) for i in range(k)}
    report.add("inner_point_inside", len(inside) == 1 and Orientation.COLLINEAR not in inside)

    uncrossed = []
    for i in poly:
        if not any(
            segments_properly_cross(P[x], P[i], P[j], P[l])
            for j, l in itertools.combinations(poly, 2)
            if i not in (j, l)
        ):
            uncrossed.append(bundle.labels[i])
    report.add("every_spoke_crossed", not uncrossed, f"uncrossed spokes x-{uncrossed}")

    # a partner is indistinguishable from its original in the order type
    swapped_bad = []
    for q in range(half):
        qp = q + half
        keep = [t for t in range(len(P)) if t != qp]
        S = P.subset(keep)
        S2 = PointSet(P[qp] if t == q else P[t] for t in keep)
        if not same_order_type(S, S2):
            swapped_bad.append(bundle.labels[q])
    report.add("partners_interchangeable", not swapped_bad, f"order type changes for {swapped_bad}")

    W = bundle.witness
    deg = [W.degree(v) for v in range(len(P))]
    report.add("witness_perfect_matching", all(d == 1 for d in deg))
    s = stabbing_number(W, H)
    report.add("witness_stab_at_most_2", s <= 2, f"stabbing number {s}")
    return report


def validate(bundle: ConstructionBundle) -> ValidationReport:
    if bundle.kind in ("tree", "tree9"):
        return validate_tree_cex(bundle)
    if bundle.kind == "tri":
        return validate_tri_cex(bundle)
    if bundle.kind == "matching":
        return validate_matching_cex(bundle)
    raise ConstructionError(f"unknown construction kind {bundle.kind!r}")
