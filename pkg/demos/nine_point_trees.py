"""Adding a point can lower the best spanning-tree stabbing number.

Nine points arranged as three curved arms; every spanning tree of them has
some line crossing four of its edges.  Add a tenth point O in the middle
and the tree that joins O to the three arms never gets crossed more than
three times.  The lower bound is settled by brute force over all 9^7
labelled trees (a few seconds with numpy).
"""
import time

from stabkit import gen_tree_cex_9, min_stab_tree, representative_partitions, stabbing_number

bundle = gen_tree_cex_9()
small, big = bundle.small, bundle.big
print("labels:", " ".join(bundle.labels))
print("validation:", "all", len(bundle.validation.checks), "checks pass" if bundle.validation.passed else "FAILED")
print("lines to consider:", len(representative_partitions(small)), "without O,", len(representative_partitions(big)), "with O")

t0 = time.perf_counter()
out = min_stab_tree(small)
print(f"best tree without O: {out.optimum} ({out.explored:,} trees in {time.perf_counter() - t0:.1f}s)")
print("one optimal tree:", out.witness)

print("witness tree with O:", stabbing_number(bundle.witness))
