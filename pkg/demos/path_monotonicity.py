"""Paths behave: removing a point never makes the best path worse.

Shortcutting a removed vertex replaces two edges by one, and any line
crossing the new edge crossed one of the old ones.  Checked here over a
batch of random point sets, alongside the same experiment for trees where
no such guarantee exists (violations are rare but possible).
"""
import random

from stabkit import PointSet, is_general_position, min_stab_path, min_stab_tree

rng = random.Random(2024)
path_bad = tree_bad = trials = 0
while trials < 150:
    P = PointSet((rng.randint(0, 300), rng.randint(0, 300)) for _ in range(rng.randint(4, 7)))
    if not is_general_position(P):
        continue
    trials += 1
    p_all, t_all = min_stab_path(P).optimum, min_stab_tree(P).optimum
    for i in range(len(P)):
        Q = P.without([i])
        path_bad += min_stab_path(Q).optimum > p_all
        tree_bad += min_stab_tree(Q).optimum > t_all
print(f"{trials} random sets: path violations {path_bad}, tree violations {tree_bad}")
