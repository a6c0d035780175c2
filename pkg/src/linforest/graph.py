"""Core graph and rooted-tree types, line-graph construction, and text I/O.

Vertices are dense integers 0..n-1 and edges are stored as sorted pairs,
so everything downstream (subset enumeration, witnesses, file output) is
deterministic and bit-reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional


class ParseError(ValueError):
    """Raised for malformed edge-list documents; messages name the line."""


Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph. Immutable after construction.

    Edges are kept sorted; adjacency lists are sorted per vertex. No
    self-loops, no duplicates, ids must be exactly in range(n).
    """

    __slots__ = ("n", "edges", "adjacency", "_hash", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], *, validate: bool = True):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        normalized = sorted(_normalize_edge(u, v) for u, v in edges)
        if validate:
            seen: set[Edge] = set()
            for u, v in normalized:
                if u == v:
                    raise ValueError(f"self-loop at vertex {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
                if (u, v) in seen:
                    raise ValueError(f"duplicate edge ({u}, {v})")
                seen.add((u, v))
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            adjacency[u].append(v)
            adjacency[v].append(u)
        for lst in adjacency:
            lst.sort()
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(normalized)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(lst) for lst in adjacency)
        self._hash: Optional[int] = None
        self._edge_set: Optional[frozenset[Edge]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edge_set()

    def edge_set(self) -> frozenset[Edge]:
        if self._edge_set is None:
            self._edge_set = frozenset(self.edges)
        return self._edge_set

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    stack.append(w)
        return count == self.n

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document: a header line "n m", then m lines "u v".

    Rejects self-loops, duplicate edges, out-of-range ids, and any mismatch
    between the header and the body; errors name the offending 1-based line.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("line 1: missing header 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"line 1: expected header 'n m', got {lines[0].strip()!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"line 1: expected two integers, got {lines[0].strip()!r}") from None
    if n < 0 or m < 0:
        raise ParseError("line 1: n and m must be non-negative")

    edges: list[Edge] = []
    seen: set[Edge] = set()
    lineno = 1
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            if any(rest.strip() for rest in lines[lineno:]):
                raise ParseError(f"line {lineno}: blank line inside edge list")
            break
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected edge 'u v', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {raw.strip()!r}") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        e = _normalize_edge(u, v)
        if e in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
        if len(edges) > m:
            raise ParseError(f"line {lineno}: more than {m} edges declared in header")
    if len(edges) != m:
        raise ParseError(f"line {lineno}: header declares {m} edges, found {len(edges)}")
    return Graph(n, edges, validate=False)


def format_graph(g: Graph) -> str:
    """Serialize to the edge-list format accepted by parse_graph."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


@dataclass(frozen=True)
class LineGraph:
    """Line graph plus the labeling of its vertices by source edges.

    Vertex i of ``graph`` corresponds to ``source_edges[i]``; source edges
    are indexed in sorted order so the construction is reproducible.
    """

    graph: Graph
    source_edges: tuple[Edge, ...]

    def vertex_of(self, u: int, v: int) -> int:
        return self.source_edges.index(_normalize_edge(u, v))


def line_graph(g: Graph) -> LineGraph:
    """Build the line graph: one vertex per edge of g, adjacent iff the
    source edges share an endpoint."""
    index = {e: i for i, e in enumerate(g.edges)}
    ledges: list[Edge] = []
    for v in range(g.n):
        incident = [index[_normalize_edge(v, w)] for w in g.adjacency[v]]
        # two distinct edges share at most one endpoint, so no duplicates
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                ledges.append(_normalize_edge(incident[a], incident[b]))
    return LineGraph(Graph(g.m, ledges, validate=False), g.edges)


class RootedTree:
    """A tree with a designated root, parent pointers, and depths.

    ``order`` lists vertices in BFS order from the root, so iterating it in
    reverse visits children before parents.
    """

    __slots__ = ("graph", "root", "parent", "depth", "children", "order")

    def __init__(self, graph: Graph, root: int):
        n = graph.n
        if not (0 <= root < n):
            raise ValueError(f"root {root} out of range")
        if graph.m != n - 1:
            raise ValueError("not a tree: edge count differs from n-1")
        parent: list[Optional[int]] = [None] * n
        depth = [-1] * n
        children: list[list[int]] = [[] for _ in range(n)]
        order = [root]
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    children[u].append(w)
                    order.append(w)
                    queue.append(w)
        if len(order) != n:
            raise ValueError("not a tree: graph is disconnected")
        self.graph = graph
        self.root = root
        self.parent = tuple(parent)
        self.depth = tuple(depth)
        self.children = tuple(tuple(c) for c in children)
        self.order = tuple(order)

    @property
    def n(self) -> int:
        return self.graph.n

    def __repr__(self) -> str:
        return f"RootedTree(n={self.n}, root={self.root})"


def tree_center(g: Graph) -> tuple[int, ...]:
    """Center of a tree by iterative leaf stripping (1 or 2 vertices)."""
    n = g.n
    if g.m != n - 1:
        raise ValueError("not a tree: edge count differs from n-1")
    if n == 0:
        raise ValueError("empty graph has no center")
    deg = [g.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    removed = bytearray(n)
    while remaining > 2:
        nxt: list[int] = []
        for v in layer:
            removed[v] = 1
            remaining -= 1
            for w in g.adjacency[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        if not nxt and remaining > 2:
            raise ValueError("not a tree: graph contains a cycle")
        layer = nxt
    center = tuple(sorted(v for v in range(n) if not removed[v]))
    return center


def root_at_center(g: Graph) -> RootedTree:
    """Root a tree at its center, breaking a two-vertex tie by smaller id."""
    center = tree_center(g)
    t = RootedTree(g, center[0])
    return t


def tree_diameter(g: Graph) -> int:
    """Diameter of a tree in edges, via double BFS. 0 for a single vertex."""
    if g.n <= 1:
        return 0
    far, _ = _bfs_farthest(g, 0)
    _, dist = _bfs_farthest(g, far)
    return dist


def _bfs_farthest(g: Graph, start: int) -> tuple[int, int]:
    depth = [-1] * g.n
    depth[start] = 0
    queue = deque([start])
    far, fdist = start, 0
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                if depth[w] > fdist:
                    far, fdist = w, depth[w]
                queue.append(w)
    if any(d < 0 for d in depth):
        raise ValueError("graph is disconnected")
    return far, fdist


@dataclass(frozen=True)
class TreeStats:
    """Structural invariants of a tree used by the completion bounds.

    ``out`` counts leaves. ``ex`` maps each inner vertex to how many of its
    low-degree neighbors (degree < 3) exceed two; leaves are excluded.
    ``s`` counts degree-2 vertices at depth 1 from the center root.
    """

    diameter: int
    radius: int
    center: tuple[int, ...]
    out: int
    ex: dict[int, int]
    s: int

    @property
    def ex_sum(self) -> int:
        return sum(self.ex.values())


def tree_stats(t: RootedTree) -> TreeStats:
    """Compute leaf count, excess map, diameter/radius/center, and s."""
    g = t.graph
    n = g.n
    d = tree_diameter(g)
    center = tree_center(g)
    r = (d + 1) // 2
    out = sum(1 for v in range(n) if g.degree(v) == 1)
    ex: dict[int, int] = {}
    for v in range(n):
        if g.degree(v) < 2:
            continue
        low = sum(1 for w in g.adjacency[v] if g.degree(w) < 3)
        ex[v] = max(0, low - 2)
    s = sum(1 for v in range(n) if t.depth[v] == 1 and g.degree(v) == 2)
    return TreeStats(diameter=d, radius=r, center=center, out=out, ex=ex, s=s)


def to_dot(g: Graph, highlight: Iterable[tuple[int, int]] = ()) -> str:
    """Emit a DOT document; highlighted edges get color and pen width."""
    edge_set = g.edge_set()
    marked: set[Edge] = set()
    for u, v in highlight:
        e = _normalize_edge(u, v)
        if e not in edge_set:
            raise ValueError(f"highlight edge ({u}, {v}) not in graph")
        marked.add(e)
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges:
        if (u, v) in marked:
            lines.append(f'  {u} -- {v} [color="red", penwidth=2.0];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
