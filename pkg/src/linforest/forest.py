"""Exact maximum linear forests in trees.

A linear forest is an edge set whose components are vertex-disjoint paths.
The solver runs bottom-up over a rooted tree keeping, per subtree, the best
forest size and the best size with the subtree root at forest-degree <= 1.
At each internal vertex the root either stays isolated, joins one child
(switching that child to its constrained optimum), or joins two children.
Since constraining a child costs at most one edge, only the two children
with the cheapest switching cost matter, which keeps the whole pass linear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, RootedTree, TreeStats, root_at_center


@dataclass(frozen=True)
class LinearForest:
    """Edge subset whose induced components are all simple paths."""

    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class DpRecord:
    """Optimal forests for one rooted tree: unconstrained, and with the
    root at degree <= 1."""

    best: LinearForest
    best_constrained: LinearForest

    @property
    def value(self) -> int:
        return self.best.size

    @property
    def value_constrained(self) -> int:
        return self.best_constrained.size


@dataclass(frozen=True)
class Completion:
    """Edges whose addition closes a tree into a Hamiltonian graph."""

    added_edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.added_edges)


def is_linear_forest(g: Graph, edges) -> bool:
    """Check the definition directly: edges of g, all degrees <= 2, acyclic."""
    edge_set = set()
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        if e in edge_set:
            return False
        edge_set.add(e)
    host = g.edge_set()
    if not edge_set <= host:
        return False
    deg: dict[int, int] = {}
    parent = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edge_set:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        if deg[u] > 2 or deg[v] > 2:
            return False
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _forest_values(t: RootedTree) -> tuple[list[int], list[int], list[int], list[int]]:
    """Bottom-up pass; returns per-vertex (free value, constrained value,
    top child, second child). Child slots are -1 when unused."""
    n = t.n
    f = [0] * n
    fc = [0] * n
    top = [-1] * n
    second = [-1] * n
    for v in reversed(t.order):
        kids = t.children[v]
        if not kids:
            continue
        base = 0
        best1 = best2 = -1
        g1 = g2 = -1
        for c in kids:  # ascending ids: first maximum wins ties
            base += f[c]
            gc = fc[c] + 1 - f[c]
            if gc > g1:
                best2, g2 = best1, g1
                best1, g1 = c, gc
            elif gc > g2:
                best2, g2 = c, gc
        fc[v] = base + g1
        top[v] = best1
        if len(kids) >= 2:
            f[v] = base + g1 + g2
            second[v] = best2
        else:
            f[v] = fc[v]
    return f, fc, top, second


def _reconstruct(
    t: RootedTree,
    single: list[int],
    pair_a: list[int],
    pair_b: list[int],
    constrained: bool,
) -> LinearForest:
    """Walk down the choice arrays collecting edges. ``single`` is the child
    joined when the vertex may take one edge; (pair_a, pair_b) when two."""
    edges: list[tuple[int, int]] = []
    stack = [(t.root, constrained)]
    while stack:
        v, limited = stack.pop()
        kids = t.children[v]
        if not kids:
            continue
        if limited or len(kids) == 1:
            chosen = (single[v],)
        else:
            chosen = (pair_a[v], pair_b[v])
        for c in chosen:
            edges.append((v, c) if v < c else (c, v))
            stack.append((c, True))
        for c in kids:
            if c not in chosen:
                stack.append((c, False))
    return LinearForest(tuple(sorted(edges)))


def max_linear_forest(t: RootedTree) -> DpRecord:
    """Maximum linear forest of the whole rooted tree, with the companion
    forest whose root has degree <= 1. Linear time.

    Ties are broken deterministically: the root always takes the maximum
    number of incident edges the optimum allows, preferring children with
    smaller ids.
    """
    _, _, top, second = _forest_values(t)
    best = _reconstruct(t, top, top, second, constrained=False)
    best_constrained = _reconstruct(t, top, top, second, constrained=True)
    return DpRecord(best=best, best_constrained=best_constrained)


def max_linear_forest_value(t: RootedTree) -> int:
    """Size-only variant of max_linear_forest, skipping reconstruction."""
    f, _, _, _ = _forest_values(t)
    return f[t.root]


def max_linear_forest_allpairs(t: RootedTree) -> DpRecord:
    """Quadratic-per-vertex reference solver that scores every candidate:
    the root isolated, joined to each single child, or to each child pair.

    Kept as a debug path; must agree with max_linear_forest exactly,
    including reconstructed edges.
    """
    n = t.n
    f = [0] * n
    fc = [0] * n
    single = [-1] * n
    pair_a = [-1] * n
    pair_b = [-1] * n
    for v in reversed(t.order):
        kids = t.children[v]
        if not kids:
            continue
        base = sum(f[c] for c in kids)
        best_single_val, best_single = -1, -1
        for c in kids:
            val = base - f[c] + fc[c] + 1
            if val > best_single_val:
                best_single_val, best_single = val, c
        best_pair_val, best_pair = -1, (-1, -1)
        for i in range(len(kids)):
            for j in range(i + 1, len(kids)):
                ci, cj = kids[i], kids[j]
                val = base + (fc[ci] + 1 - f[ci]) + (fc[cj] + 1 - f[cj])
                if val > best_pair_val:
                    best_pair_val, best_pair = val, (ci, cj)
        # joining never hurts, so prefer two edges over one over none on ties
        fc[v] = max(base, best_single_val)
        single[v] = best_single
        if len(kids) >= 2 and best_pair_val >= max(base, best_single_val):
            f[v] = best_pair_val
            pair_a[v], pair_b[v] = best_pair
        else:
            f[v] = fc[v]
            pair_a[v] = best_single
    best = _reconstruct(t, single, pair_a, pair_b, constrained=False)
    best_constrained = _reconstruct(t, single, pair_a, pair_b, constrained=True)
    return DpRecord(best=best, best_constrained=best_constrained)


def l_of_tree(g: Graph) -> int:
    """Number of edges in a maximum linear forest of a tree; independent of
    the root used internally."""
    return max_linear_forest_value(root_at_center(g))


def hc_of_tree(g: Graph) -> int:
    """Hamiltonian completion number of a tree: n - l. Trees are never
    Hamiltonian, so the completion number is always positive for n >= 2."""
    if g.n < 2:
        raise ValueError("hamiltonian completion needs n >= 2")
    if not g.is_tree():
        raise ValueError("input is not a tree")
    return g.n - l_of_tree(g)


def hc_lower_bound(stats: TreeStats) -> int:
    """ceil((out + sum of excesses) / 2): every leaf, and every crowded-out
    low-degree neighbor, must meet a new edge on a Hamiltonian cycle."""
    return (stats.out + stats.ex_sum + 1) // 2


def leaf_exchange(g: Graph, u_i: int, u_j: int) -> Graph:
    """Detach leaf u_i from its neighbor and re-attach it under leaf u_j.

    Never decreases the maximum linear forest size: rerouting the detached
    pendant edge onto another leaf keeps any forest valid.
    """
    if u_i == u_j:
        raise ValueError("leaves must be distinct")
    for u in (u_i, u_j):
        if g.degree(u) != 1:
            raise ValueError(f"vertex {u} is not a leaf")
    w_i = g.adjacency[u_i][0]
    old = (w_i, u_i) if w_i < u_i else (u_i, w_i)
    new = (u_i, u_j) if u_i < u_j else (u_j, u_i)
    if old == new:  # n == 2: the two leaves are adjacent
        return g
    edges = [e for e in g.edges if e != old]
    edges.append(new)
    return Graph(g.n, edges, validate=False)


def hc_construct(g: Graph) -> Completion:
    """Build a Hamiltonian completion of a tree with exactly out(T)-1 edges.

    Close a cycle through two leaves first, then repeatedly splice in the
    lowest-id leaf still outside: walk from it to the nearest cycle vertex
    u, detach u from its smaller-id cycle neighbor w conceptually, and add
    the leaf-w edge so the cycle absorbs the whole connecting path.
    """
    n = g.n
    if n < 3:
        raise ValueError("hamiltonian completion construction needs n >= 3")
    if not g.is_tree():
        raise ValueError("input is not a tree")
    leaves = sorted(v for v in range(n) if g.degree(v) == 1)
    u0, v0 = leaves[0], leaves[1]
    cycle = _tree_path(g, u0, v0)
    on_cycle = bytearray(n)
    for v in cycle:
        on_cycle[v] = 1
    added = [(u0, v0) if u0 < v0 else (v0, u0)]
    pos = {v: i for i, v in enumerate(cycle)}
    for leaf in leaves[2:]:
        if on_cycle[leaf]:
            continue
        # walk from the leaf toward the cycle; the path is unique in a tree
        path = _path_to_cycle(g, leaf, on_cycle)
        u = path[-1]
        i = pos[u]
        w = min(cycle[i - 1], cycle[(i + 1) % len(cycle)])
        # splice: the cycle edge u-w is traded for leaf-w, absorbing the path
        segment = path[:-1]  # leaf first, ends just before u
        if cycle[(i + 1) % len(cycle)] == w:
            cycle[i + 1 : i + 1] = list(reversed(segment))
        else:
            cycle[i:i] = segment
        pos = {v: k for k, v in enumerate(cycle)}
        for v in segment:
            on_cycle[v] = 1
        added.append((leaf, w) if leaf < w else (w, leaf))
    return Completion(added_edges=tuple(added))


def _tree_path(g: Graph, a: int, b: int) -> list[int]:
    """Vertex sequence of the unique a-b path in a tree."""
    prev = [-1] * g.n
    prev[a] = a
    stack = [a]
    while stack:
        u = stack.pop()
        if u == b:
            break
        for w in g.adjacency[u]:
            if prev[w] < 0:
                prev[w] = u
                stack.append(w)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _path_to_cycle(g: Graph, start: int, on_cycle: bytearray) -> list[int]:
    """Vertex sequence from start to the first cycle vertex reached."""
    prev = [-1] * g.n
    prev[start] = start
    stack = [start]
    hit = -1
    while stack:
        u = stack.pop()
        if on_cycle[u]:
            hit = u
            break
        for w in g.adjacency[u]:
            if prev[w] < 0:
                prev[w] = u
                stack.append(w)
    path = [hit]
    while path[-1] != start:
        path.append(prev[path[-1]])
    path.reverse()
    return path
