"""How a handful of bipartitions stands in for every line in the plane.

A line that misses all points splits them into two groups, and it crosses
an edge exactly when the edge's endpoints land in different groups.  So the
stabbing number of a graph only depends on which splits lines can realize,
and for n points in general position there are exactly C(n, 2) of those.
"""
from math import comb

from stabkit import GeometricGraph, PointSet, representative_partitions, stabbing_number
from stabkit.geom_graph import max_stabbing_partition

# a convex hexagon with one point near the middle
P = PointSet([(0, 0), (10, -2), (17, 6), (12, 15), (2, 14), (-5, 7), (7, 5)])
H = representative_partitions(P)
print(f"{len(P)} points -> {len(H)} realizable splits (C({len(P)},2) = {comb(len(P), 2)})")
for b in list(H)[:5]:
    print(f"   {b.side_a} | {b.side_b}")
print("   ...")

# the hull cycle: any line crosses a convex polygon at most twice
hull = GeometricGraph(P, [(i, (i + 1) % 6) for i in range(6)])
print("hull cycle stabbing number:", stabbing_number(hull, H))

# a star from the inner point: a line just beside the centre cuts most spokes
star = GeometricGraph(P, [(6, i) for i in range(6)])
s, split = max_stabbing_partition(star, H)
print(f"star stabbing number: {s}, realized by {split.side_a} | {split.side_b}")
