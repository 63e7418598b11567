"""Two facing convex chains: more points, easier triangulation.

With only the 2n chain points, any triangulation must fill the gap between
the chains with at least 2n - 1 edges, and the vertical line down the middle
crosses all of them.  Two extra points on the middle segment let a
triangulation route most of that gap through short fans instead.  The
witness only beats the lower bound once the log term is small relative to
n, which in this layout happens from n = 16 on.
"""
from stabkit import gen_tri_cex, stabbing_number, triangulations
from stabkit.constructions import tri_stab_bound

n = 4
b = gen_tri_cex(n)
cuts = [sum((u < n) != (v < n) for u, v in t) for t in triangulations(b.small)]
print(f"n={n}: {len(cuts)} triangulations of the chains alone; fewest edges across the middle = {min(cuts)}")

print("\n  n   lower bound 2n-1   witness with 2 extra points   n + 4 log2 n + 3")
for n in (4, 8, 16, 30):
    b = gen_tri_cex(n)
    s = stabbing_number(b.witness)
    print(f"{n:3d}   {2 * n - 1:16d}   {s:27d}   {tri_stab_bound(n):16.1f}")
