"""Write SVG drawings of the three witness structures.

Each drawing overlays a dashed line for one split that attains the
stabbing number; the edges it cuts are drawn in orange.
"""
import sys
from pathlib import Path

from stabkit import gen_matching_cex, gen_tree_cex_9, gen_tri_cex
from stabkit.geom_graph import max_stabbing_partition
from stabkit.svg import render_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(exist_ok=True)
for name, b in [("tree9", gen_tree_cex_9()), ("tri8", gen_tri_cex(8)), ("matching5", gen_matching_cex(5))]:
    s, split = max_stabbing_partition(b.witness)
    (out / f"{name}.svg").write_text(render_svg(b.witness, split, b.labels))
    print(f"{out / (name + '.svg')}: stabbing number {s}")
