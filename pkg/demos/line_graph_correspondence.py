#!/usr/bin/env python3
"""Linear forests in a graph correspond to induced forests in its line
graph, and longest paths to induced trees. This demo checks both
identities on a handful of graphs with the brute-force oracles."""

from linforest import (
    Graph,
    line_graph,
    longest_path_bf,
    max_induced_forest,
    max_induced_tree,
    max_linear_forest_bf,
    path_graph,
    spider,
    star_graph,
)

samples = [
    ("path P5", path_graph(5)),
    ("star K1,3", star_graph(4)),
    ("spider (2,2,2)", spider([2, 2, 2])),
    ("4-cycle", Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])),
    ("cycle with chord", Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])),
]

print("graph                l(G)  f(L(G))   p(G)  t(L(G))   m-n+1  decycling(L)")
for name, g in samples:
    lg = line_graph(g).graph
    l_val = max_linear_forest_bf(g).value
    f_val = max_induced_forest(lg).value
    p_val = longest_path_bf(g).value
    t_val = max_induced_tree(lg).value
    nabla = lg.n - f_val
    assert l_val == f_val and p_val == t_val
    assert nabla >= g.m - g.n + 1
    print(
        f"{name:<20} {l_val:>4} {f_val:>8} {p_val:>6} {t_val:>8} "
        f"{g.m - g.n + 1:>7} {nabla:>9}"
    )

print()
print("The line graph of the star is a triangle: all three edges meet at")
print("the hub, so its best induced forest keeps only 2 of 3 vertices and")
print("one vertex must be deleted to break the cycle.")
lg = line_graph(star_graph(4))
print("L(K1,3) edges:", lg.graph.edges, " sources:", lg.source_edges)
