import itertools
import math
from dataclasses import replace

import pytest

from stabkit.constructions import (
    ConstructionError,
    complete_triangulation,
    gen_matching_cex,
    gen_tree_cex,
    gen_tree_cex_9,
    gen_tri_cex,
    green_bundles,
    hull_size,
    tri_stab_bound,
    validate,
)
from stabkit.geom_core import PointSet, is_general_position, same_order_type, segments_properly_cross
from stabkit.geom_graph import GeometricGraph, stabbing_number
from stabkit.search import min_stab_matching, triangulations
from stabkit.stab_lines import representative_partitions


def _push(bundle, label, anchor, factor):
    z, y = bundle.big[bundle.index(label)], bundle.big[bundle.index(anchor)]
    return bundle.with_point(label, (y.x + factor * (z.x - y.x), y.y + factor * (z.y - y.y)))


class TestTree9:
    b = gen_tree_cex_9()

    def test_shape(self):
        assert len(self.b.big) == 10 and len(self.b.small) == 9
        assert self.b.labels[self.b.removed[0]] == "O"
        assert self.b.validation.passed

    def test_line_counts(self):
        assert len(representative_partitions(self.b.small)) == 36
        assert len(representative_partitions(self.b.big)) == 45

    def test_witness(self):
        W = self.b.witness
        assert W.is_spanning_tree() and len(W.edges) == 9
        assert stabbing_number(W) == 3

    def test_z3_pulled_inside_fails_curvature(self):
        z = self.b.big[self.b.index("z3")]
        moved = self.b.with_point("z3", (z.x // 2, z.y // 2))
        assert moved.validation is None
        report = validate(moved)
        assert not report.passed and not report["curved_3"].passed

    def test_collinear_triple_fails_general_position(self):
        x1 = self.b.big[self.b.index("x1")]
        moved = self.b.with_point("z2", (2 * x1.x, 2 * x1.y))  # on the line O x1
        report = validate(moved)
        assert not report["general_position_big"].passed

    def test_pushing_z3_keeps_order_type(self):
        assert same_order_type(self.b.small, _push(self.b, "z3", "y3", 2).small)


class TestTreeFamily:
    @pytest.mark.parametrize("n", range(9, 15))
    def test_valid_with_stab_3_witness(self, n):
        b = gen_tree_cex(n)
        assert len(b.small) == n and len(b.big) == n + 1
        assert b.validation.passed, b.validation.failures
        assert stabbing_number(b.witness) == 3
        assert b.witness.is_spanning_tree()

    def test_condition_checks_present(self):
        names = gen_tree_cex(12).validation.names()
        for want in ("chain_cluster_unsplit", "order_type_stable", "z3_beyond_chain_lines",
                     "triple_line_through_y3z3", "flat_1", "curved_1", "convex_chain_1"):
            assert want in names

    @pytest.mark.parametrize("n", [20, 40, 63])
    def test_long_chains(self, n):
        b = gen_tree_cex(n)
        assert b.validation.passed and stabbing_number(b.witness) == 3

    @pytest.mark.parametrize("n", [8, 64])
    def test_size_limits(self, n):
        with pytest.raises(ConstructionError):
            gen_tree_cex(n)

    def test_removing_chain_points_keeps_order_type(self):
        b = gen_tree_cex(12)
        small, labels = b.small, b.small_labels
        chain = [i for i, m in enumerate(labels) if m.startswith("p")]
        rest = [i for i in range(len(small)) if i not in chain]
        subsets = [small.subset(sorted(rest + [c])) for c in chain]
        assert all(len(s) == 9 for s in subsets)
        assert all(same_order_type(subsets[0], s) for s in subsets[1:])

    def test_further_push_still_valid(self):
        b = gen_tree_cex(9)
        moved = _push(b, "z3", "y3", 2)
        assert same_order_type(b.small, moved.small)
        assert validate(moved).passed

    def test_deterministic(self):
        assert gen_tree_cex(11).big == gen_tree_cex(11).big


class TestTriangulation:
    @pytest.mark.parametrize("n", [4, 6, 8, 10, 16, 30])
    def test_valid_and_within_bound(self, n):
        b = gen_tri_cex(n)
        assert len(b.small) == 2 * n and len(b.big) == 2 * n + 2
        assert b.validation.passed, b.validation.failures
        assert stabbing_number(b.witness) <= tri_stab_bound(n)

    def test_bound_value(self):
        assert tri_stab_bound(8) == 23
        assert math.isclose(tri_stab_bound(4), 15)

    @pytest.mark.parametrize("n", [3, 5, 2, 0, 32])
    def test_bad_n(self, n):
        with pytest.raises(ConstructionError):
            gen_tri_cex(n)

    def test_witness_is_maximal(self):
        b = gen_tri_cex(6)
        P, E = b.big, b.witness.sorted_edges()
        assert len(E) == 3 * len(P) - 3 - hull_size(P)
        for (a, c), (d, e) in itertools.combinations(E, 2):
            assert not segments_properly_cross(P[a], P[c], P[d], P[e])

    def test_mid_cut_at_n4(self):
        b = gen_tri_cex(4)
        P, n = b.small, 4
        cuts = [sum((u < n) != (v < n) for u, v in t) for t in triangulations(P)]
        assert min(cuts) >= 2 * n - 1

    def test_green_bundle_sizes(self):
        g1, g2 = green_bundles(8)
        assert len(g1) == len(g2) == 8

    def test_complete_triangulation_rejects_crossing_forced_edges(self):
        Q = PointSet([(0, 0), (4, 0), (4, 4), (0, 4)])
        with pytest.raises(ConstructionError):
            complete_triangulation(Q, [(0, 2), (1, 3)])


class TestMatching:
    @pytest.mark.parametrize("k", [*range(5, 13), 16, 20, 31])
    def test_valid(self, k):
        b = gen_matching_cex(k)
        assert len(b.big) == 2 * k + 2 and len(b.small) == 2 * k
        assert b.validation.passed, b.validation.failures
        assert stabbing_number(b.witness) <= 2

    @pytest.mark.parametrize("k", [3, 4, 32])
    def test_small_k_rejected(self, k):
        with pytest.raises(ConstructionError):
            gen_matching_cex(k)

    def test_every_matching_of_small_is_cut_three_times(self):
        b = gen_matching_cex(5)
        out = min_stab_matching(b.small)
        assert out.explored == 945 and out.optimum >= 3

    def test_partners_are_close(self):
        b = gen_matching_cex(6)
        for u, v in b.witness.sorted_edges():
            p, q = b.big[u], b.big[v]
            assert b.labels[v] == b.labels[u] + "'"
            assert abs(p.x - q.x) + abs(p.y - q.y) < 100

    def test_in_general_position(self):
        assert is_general_position(gen_matching_cex(8).big)


def test_validate_rejects_unknown_kind():
    b = gen_matching_cex(5)
    with pytest.raises(ConstructionError):
        validate(replace(b, kind="spiral"))


def test_witness_graph_uses_big_set():
    for b in (gen_tree_cex_9(), gen_tri_cex(4), gen_matching_cex(5)):
        assert isinstance(b.witness, GeometricGraph) and b.witness.base == b.big
