"""Brute-force ground truth for every invariant, on small instances.

These solvers enumerate candidate subsets directly from the definitions so
they are obviously correct; the only concession to speed is that sizes are
tried from the largest plausible bound downward, returning on the first
hit, which is also what makes the reported witness the lexicographically
smallest maximizer. Caps guard against accidental exponential blowups.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .graph import Graph

DEFAULT_VERTEX_CAP = 20
DEFAULT_EDGE_CAP = 24
DEFAULT_HC_CAP = 9


class CapExceeded(ValueError):
    """Instance is larger than the configured brute-force cap."""


@dataclass(frozen=True)
class OracleResult:
    """A computed invariant plus the subset that realizes it."""

    value: int
    witness: tuple


def _check_vertex_cap(g: Graph, cap: Optional[int], default: int) -> None:
    limit = default if cap is None else cap
    if g.n > limit:
        raise CapExceeded(f"n={g.n} exceeds cap {limit}")


def _induced_edges(g: Graph, members: bytearray) -> Iterator[tuple[int, int]]:
    for u, v in g.edges:
        if members[u] and members[v]:
            yield u, v


def _is_acyclic_subset(g: Graph, subset: tuple[int, ...]) -> bool:
    members = bytearray(g.n)
    for v in subset:
        members[v] = 1
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in _induced_edges(g, members):
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def max_induced_forest(g: Graph, cap: Optional[int] = None) -> OracleResult:
    """Largest vertex subset inducing an acyclic subgraph (the quantity
    whose complement is the decycling number)."""
    _check_vertex_cap(g, cap, DEFAULT_VERTEX_CAP)
    for size in range(g.n, -1, -1):
        for subset in combinations(range(g.n), size):
            if _is_acyclic_subset(g, subset):
                return OracleResult(value=size, witness=subset)
    return OracleResult(value=0, witness=())


def decycling_number(g: Graph, cap: Optional[int] = None) -> OracleResult:
    """Minimum vertex set whose removal leaves a forest: n - forest size."""
    forest = max_induced_forest(g, cap)
    keep = set(forest.witness)
    witness = tuple(v for v in range(g.n) if v not in keep)
    return OracleResult(value=g.n - forest.value, witness=witness)


def max_induced_tree(g: Graph, cap: Optional[int] = None) -> OracleResult:
    """Largest vertex subset inducing a connected acyclic subgraph."""
    _check_vertex_cap(g, cap, DEFAULT_VERTEX_CAP)
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if _induces_tree(g, subset):
                return OracleResult(value=size, witness=subset)
    return OracleResult(value=0, witness=())


def _induces_tree(g: Graph, subset: tuple[int, ...]) -> bool:
    members = bytearray(g.n)
    for v in subset:
        members[v] = 1
    count = sum(1 for _ in _induced_edges(g, members))
    if count != len(subset) - 1:
        return False
    # exactly |S|-1 edges: connected iff acyclic, one BFS settles both
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if members[w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(subset)


def _graph_is_acyclic(g: Graph) -> bool:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def max_linear_forest_bf(g: Graph, cap: Optional[int] = None) -> OracleResult:
    """Largest edge subset with every degree <= 2 and no cycle, i.e. a
    vertex-disjoint union of paths."""
    limit = DEFAULT_EDGE_CAP if cap is None else cap
    if g.m > limit:
        raise CapExceeded(f"m={g.m} exceeds cap {limit}")
    edges = g.edges
    n = g.n
    # a linear forest is a forest, so it has at most n-1 edges; and subsets
    # of an acyclic host can never contain a cycle
    host_acyclic = _graph_is_acyclic(g)
    for size in range(min(g.m, n - 1), 0, -1):
        for idxs in combinations(range(g.m), size):
            deg = bytearray(n)
            ok = True
            for i in idxs:
                u, v = edges[i]
                du = deg[u] + 1
                dv = deg[v] + 1
                if du > 2 or dv > 2:
                    ok = False
                    break
                deg[u] = du
                deg[v] = dv
            if ok and (host_acyclic or _edge_subset_acyclic(n, edges, idxs)):
                return OracleResult(value=size, witness=tuple(edges[i] for i in idxs))
    return OracleResult(value=0, witness=())


def _edge_subset_acyclic(n: int, edges: tuple, idxs: tuple[int, ...]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in idxs:
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def longest_path_bf(g: Graph, cap: Optional[int] = None) -> OracleResult:
    """Longest simple path, in edges, by exhaustive DFS over partial paths.

    The witness is the vertex sequence of the first maximum found when
    start vertices and neighbors are explored in ascending order, with the
    sequence direction normalized.
    """
    _check_vertex_cap(g, cap, DEFAULT_VERTEX_CAP)
    best_len = 0
    best_path: tuple[int, ...] = (0,) if g.n else ()
    visited = bytearray(g.n)
    path: list[int] = []

    def extend(u: int) -> None:
        nonlocal best_len, best_path
        visited[u] = 1
        path.append(u)
        if len(path) - 1 > best_len:
            best_len = len(path) - 1
            fwd = tuple(path)
            best_path = min(fwd, fwd[::-1])
        for w in g.adjacency[u]:
            if not visited[w]:
                extend(w)
        path.pop()
        visited[u] = 0

    for start in range(g.n):
        extend(start)
    return OracleResult(value=best_len, witness=best_path)


def is_hamiltonian(g: Graph, cap: Optional[int] = None) -> bool:
    """Hamiltonian-cycle existence by backtracking (n >= 3 required for a
    cycle)."""
    _check_vertex_cap(g, cap, DEFAULT_VERTEX_CAP)
    n = g.n
    if n < 3:
        return False
    if any(g.degree(v) < 2 for v in range(n)) or not g.is_connected():
        return False
    adj = g.adjacency
    visited = bytearray(n)
    visited[0] = 1

    def extend(u: int, used: int) -> bool:
        if used == n:
            return 0 in adj[u]
        for w in adj[u]:
            if not visited[w]:
                visited[w] = 1
                if extend(w, used + 1):
                    return True
                visited[w] = 0
        return False

    return extend(0, 1)


def hc_bf(g: Graph, cap: Optional[int] = None) -> int:
    """Minimum number of non-edges whose addition makes g Hamiltonian,
    searched by increasing subset size."""
    _check_vertex_cap(g, cap, DEFAULT_HC_CAP)
    n = g.n
    if n < 3:
        raise ValueError("hamiltonian completion needs n >= 3")
    if is_hamiltonian(g, cap=n):
        return 0
    present = g.edge_set()
    non_edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present
    ]
    for k in range(1, len(non_edges) + 1):
        if g.m + k < n:  # a Hamiltonian graph needs at least n edges
            continue
        for extra in combinations(non_edges, k):
            if is_hamiltonian(Graph(n, g.edges + extra, validate=False), cap=n):
                return k
    raise ValueError("graph cannot be completed to a Hamiltonian cycle")


def spanning_trees(g: Graph) -> Iterator[Graph]:
    """All spanning trees of a connected graph, by filtering (n-1)-edge
    subsets. Exponential; meant for cross-checks on tiny graphs."""
    n = g.n
    if n == 0:
        return
    for idxs in combinations(range(g.m), n - 1):
        if _edge_subset_acyclic(n, g.edges, idxs):
            yield Graph(n, [g.edges[i] for i in idxs], validate=False)
