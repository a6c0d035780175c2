#!/usr/bin/env python3
"""k-ary trees: rational bounds on the linear forest size, the caterpillar
that saturates the upper bound, and the exact closed form for perfect
k-ary trees cross-checked against its recurrence and the solver."""

from linforest import (
    kary_bounds_l,
    kary_caterpillar,
    kary_caterpillar_l,
    l_of_tree,
    perfect_kary,
    perfect_kary_decycling,
    perfect_kary_l,
    perfect_kary_recurrence,
    perfect_kary_size,
    random_kary_tree,
)

print("random k-ary trees stay inside (n+k-1)/k <= l <= (2n-2)/k")
for k in (2, 3, 4):
    for seed in range(3):
        g = random_kary_tree(k, internal=10 + 3 * seed, seed=seed)
        lo, hi = kary_bounds_l(g.n, k)
        lv = l_of_tree(g)
        assert lo <= lv <= hi
        print(f"  k={k} n={g.n:>3}: {lo} <= l={lv} <= {hi}")

print()
print("the one-branching-vertex-per-level caterpillar is extremal:")
for k in (2, 3, 4):
    n = 1 + k * 6
    lv = l_of_tree(kary_caterpillar(n, k))
    note = "= (2n-2)/k" if k >= 3 else "parity formula"
    assert lv == kary_caterpillar_l(n, k)
    print(f"  k={k} n={n}: l = {lv}  ({note})")

print()
print("perfect k-ary trees: closed form = recurrence = solver")
print(" k   h     n      l   recurrence  decycling(L)")
for k, h in [(2, 3), (2, 5), (3, 3), (3, 4), (4, 3), (5, 3)]:
    n = perfect_kary_size(k, h)
    closed = perfect_kary_l(n, k)
    rec = perfect_kary_recurrence(k, h)
    dp = l_of_tree(perfect_kary(k, h))
    dec = perfect_kary_decycling(n, k)
    assert closed == rec == dp and dec == n - 1 - closed
    print(f"{k:>2} {h:>3} {n:>6} {closed:>6} {rec:>12} {dec:>13}")
