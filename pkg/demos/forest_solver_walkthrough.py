#!/usr/bin/env python3
"""Walk through the linear-time maximum linear forest solver on a small
tree: the per-subtree records, the reconstructed forest, and a DOT
rendering with the forest highlighted."""

from linforest import (
    max_linear_forest,
    max_linear_forest_bf,
    root_at_center,
    spider,
    to_dot,
)

g = spider([2, 2, 2])
t = root_at_center(g)
print(f"spider with three legs of length 2: n={g.n}, rooted at {t.root}")
print("edges:", g.edges)

rec = max_linear_forest(t)
print()
print(f"maximum linear forest: {rec.value} edges -> {rec.best.edges}")
print(
    f"best forest with root degree <= 1: {rec.value_constrained} edges -> "
    f"{rec.best_constrained.edges}"
)

# the root can keep only two of its three leg edges; one leg is torn off
dropped = set(g.edges) - set(rec.best.edges)
print("edges left out:", sorted(dropped))

oracle = max_linear_forest_bf(g)
assert oracle.value == rec.value
print(f"brute force agrees: {oracle.value} (witness {oracle.witness})")

print()
print("DOT with the forest highlighted:")
print(to_dot(g, rec.best.edges))
