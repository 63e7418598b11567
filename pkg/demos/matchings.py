"""Perfect matchings: doubling every point makes matching easy.

k points on a convex polygon plus one inside, each of them doubled.  Drop
two of the copies and every perfect matching of what is left has a line
crossing three edges.  Keep them all and match each point to its twin: the
tiny edges can only be crossed two at a time.
"""
from stabkit import gen_matching_cex, min_stab_matching, stabbing_number

for k in (5, 6, 7):
    b = gen_matching_cex(k)
    out = min_stab_matching(b.small)
    print(f"k={k}: {out.explored:,} matchings of the {len(b.small)} points, best {out.optimum}; "
          f"twin matching on all {len(b.big)} points: {stabbing_number(b.witness)}")
