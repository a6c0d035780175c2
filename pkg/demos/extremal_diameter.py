#!/usr/bin/env python3
"""For trees with n vertices and diameter d >= 4, the maximum linear
forest size is pinned between d and an explicit floor formula. Both ends
are achieved: a spider built around a diametral path sits on the lower
bound, and the branch-packed trees sit on the upper bound."""

from linforest import (
    diam_bounds_l,
    diam_bounds_decycling,
    l_of_tree,
    lower_spider,
    t1_star,
    t2_star,
    t_star,
    tree_diameter,
)

print("even diameter: l(lower_spider) = d and l(t_star) = upper bound")
print(" n   d   lower  l(spider)  upper  l(t_star)   decycling window")
for n, d in [(8, 4), (12, 4), (20, 4), (14, 6), (25, 6), (30, 8)]:
    lo, hi = diam_bounds_l(n, d)
    ls = l_of_tree(lower_spider(n, d))
    ts = l_of_tree(t_star(n, d))
    dlo, dhi = diam_bounds_decycling(n, d)
    assert (ls, ts) == (lo, hi)
    assert tree_diameter(t_star(n, d)) == d
    print(f"{n:>3} {d:>3} {lo:>7} {ls:>10} {hi:>6} {ts:>10}      [{dlo}, {dhi}]")

print()
print("odd diameter: the deepened variants take over")
print(" n   d   l(t1_star)  formula(+3)   l(t2_star)  formula(+4)")
for n, d in [(9, 5), (11, 5), (14, 5), (22, 7), (40, 7)]:
    t1 = l_of_tree(t1_star(n, d))
    f1 = ((d - 3) * n + 3) // (d - 2)
    line = f"{n:>3} {d:>3} {t1:>11} {f1:>12}"
    if n >= 2 * d:
        t2 = l_of_tree(t2_star(n, d))
        f2 = ((d - 3) * n + 4) // (d - 2)
        assert t2 == f2 and tree_diameter(t2_star(n, d)) == d
        line += f" {t2:>12} {f2:>12}"
    else:
        line += "        (n < 2d: no second deep leaf fits)"
    assert t1 == f1 and tree_diameter(t1_star(n, d)) == d
    print(line)
