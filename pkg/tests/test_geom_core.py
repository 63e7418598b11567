import pytest
from hypothesis import given, strategies as st

from stabkit.geom_core import (
    COORD_LIMIT,
    GeometryError,
    Orientation,
    Point,
    PointSet,
    convex_position_order,
    find_degeneracy,
    is_convex_chain,
    is_general_position,
    orientation,
    orientation_table,
    same_order_type,
    segments_properly_cross,
)

coords = st.integers(-COORD_LIMIT, COORD_LIMIT)
points = st.builds(Point, coords, coords)


def P(*xy):
    return [Point(x, y) for x, y in xy]


class TestPoint:
    def test_rejects_out_of_range(self):
        with pytest.raises(GeometryError):
            Point(COORD_LIMIT + 1, 0)
        with pytest.raises(GeometryError):
            Point(0, -COORD_LIMIT - 1)

    def test_limit_itself_is_fine(self):
        assert Point(COORD_LIMIT, -COORD_LIMIT).x == COORD_LIMIT

    @pytest.mark.parametrize("bad", [0.5, "3", None, True])
    def test_rejects_non_integers(self, bad):
        with pytest.raises(GeometryError):
            Point(bad, 0)

    def test_unpacks(self):
        x, y = Point(3, -4)
        assert (x, y) == (3, -4)


class TestOrientation:
    def test_basic_turns(self):
        a, b, c = P((0, 0), (1, 0), (0, 1))
        assert orientation(a, b, c) is Orientation.CCW
        assert orientation(a, c, b) is Orientation.CW
        assert orientation(a, b, Point(5, 0)) is Orientation.COLLINEAR

    def test_extreme_coordinates_are_exact(self):
        # a float determinant would lose the +1 here
        L = COORD_LIMIT
        a, b, c = Point(-L, -L), Point(L, L - 1), Point(L - 1, L - 2)
        assert orientation(a, b, c) is Orientation.CW
        assert orientation(a, b, Point(L, L - 1)) is Orientation.COLLINEAR

    @given(points, points, points)
    def test_antisymmetric(self, p, q, r):
        assert orientation(p, q, r) == -orientation(q, p, r)

    @given(points, points, points)
    def test_cyclic(self, p, q, r):
        assert orientation(p, q, r) == orientation(q, r, p) == orientation(r, p, q)


class TestCrossing:
    def test_x_shape_crosses(self):
        a, b, c, d = P((0, 0), (2, 2), (0, 2), (2, 0))
        assert segments_properly_cross(a, b, c, d)

    def test_shared_endpoint_is_not_proper(self):
        a, b, c = P((0, 0), (2, 2), (2, 0))
        assert not segments_properly_cross(a, b, a, c)

    def test_touching_interior_is_not_proper(self):
        a, b, c, d = P((0, 0), (2, 0), (1, 0), (1, 5))
        assert not segments_properly_cross(a, b, c, d)

    def test_collinear_overlap_is_not_proper(self):
        a, b, c, d = P((0, 0), (4, 0), (1, 0), (6, 0))
        assert not segments_properly_cross(a, b, c, d)

    @given(points, points, points, points)
    def test_symmetric(self, a, b, c, d):
        r = segments_properly_cross(a, b, c, d)
        assert r == segments_properly_cross(c, d, a, b) == segments_properly_cross(b, a, d, c)


class TestPointSet:
    def test_accepts_pairs_and_points(self):
        S = PointSet([(0, 0), Point(1, 2), [3, 4]])
        assert len(S) == 3 and S[1] == Point(1, 2)
        assert S.coords() == [[0, 0], [1, 2], [3, 4]]

    def test_subset_and_without(self):
        S = PointSet([(0, 0), (1, 5), (2, 3), (7, 1)])
        assert S.subset([3, 1]).coords() == [[7, 1], [1, 5]]
        assert S.without([0, 2]).coords() == [[1, 5], [7, 1]]

    def test_general_position(self):
        assert is_general_position(PointSet([(0, 0), (1, 0), (0, 1)]))
        bad = PointSet([(0, 0), (1, 1), (5, 2), (2, 2)])
        assert find_degeneracy(bad) == (0, 1, 3)
        with pytest.raises(GeometryError):
            bad.require_general_position()

    def test_duplicate_is_degenerate(self):
        assert find_degeneracy(PointSet([(0, 0), (3, 1), (0, 0)])) == (0, 2)


class TestOrderType:
    def test_translation_and_scaling_preserve(self):
        A = PointSet([(0, 0), (5, 1), (2, 7), (9, 4)])
        B = PointSet([(3 * x + 11, 3 * y - 2) for x, y in A])
        assert same_order_type(A, B)

    def test_reflection_flips(self):
        A = PointSet([(0, 0), (5, 1), (2, 7)])
        B = PointSet([(-x, y) for x, y in A])
        assert not same_order_type(A, B)

    def test_size_mismatch(self):
        with pytest.raises(GeometryError):
            same_order_type(PointSet([(0, 0), (1, 0), (0, 1)]), PointSet([(0, 0), (1, 0)]))

    def test_table_matches_predicate(self):
        A = PointSet([(0, 0), (5, 1), (2, 7), (9, 4)])
        for (i, j, k), o in orientation_table(A).items():
            assert o == orientation(A[i], A[j], A[k])


class TestConvexity:
    square = PointSet([(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)])

    def test_polygon_order(self):
        assert convex_position_order(self.square, [0, 1, 2, 3])
        assert convex_position_order(self.square, [3, 2, 1, 0])
        assert not convex_position_order(self.square, [0, 2, 1, 3])
        assert not convex_position_order(self.square, [0, 1, 4, 3])

    def test_chain(self):
        arc = PointSet([(0, 0), (3, 2), (6, 3), (9, 3), (12, 2)])
        assert is_convex_chain(arc, range(5))
        assert is_convex_chain(arc, [4, 3, 2, 1, 0])
        zigzag = PointSet([(0, 0), (3, 2), (6, 1), (9, 3)])
        assert not is_convex_chain(zigzag, range(4))

    def test_spiral_is_not_a_chain(self):
        # turns consistently but wraps past its start
        spiral = PointSet([(0, 0), (10, 0), (10, 10), (0, 10), (1, 1)])
        assert not is_convex_chain(spiral, range(5))
