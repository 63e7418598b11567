"""The nine-point example scaled up to any n >= 9.

One arm tip is replaced by a flat convex chain.  The generator checks the
geometric conditions that make the lower-bound argument go through (the
chain cannot be split by lines through the other points, removing chain
points does not change the order type, and so on) and evaluates the
witness tree that uses the extra centre point.
"""
from stabkit import gen_tree_cex, min_stab_tree, stabbing_number

for n in (9, 10, 11, 12, 16, 24, 40, 63):
    b = gen_tree_cex(n)
    fails = [c.name for c in b.validation.failures]
    print(f"n={n:2d}: {len(b.validation.checks)} checks, failures={fails or 'none'}, "
          f"witness stabbing number {stabbing_number(b.witness)}")

# the lower bound for the smallest member, by branch-and-bound this time
b = gen_tree_cex(9)
out = min_stab_tree(b.small, "bnb")
print(f"n=9 without the centre, branch-and-bound: optimum {out.optimum} after {out.explored:,} nodes")
