"""Immutable simple graphs and the structural operations the engine builds on.

Vertices are the integers ``0 .. n-1``.  Adjacency lists are stored as
sorted tuples, so two graphs compare equal exactly when they have the
same vertex count and the same edge set, and every traversal below is
deterministic: ties are always broken toward the smallest vertex id.
"""

from __future__ import annotations

from bisect import insort
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import PreconditionViolation


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: no loops, no parallel edges.

    ``adj[v]`` is the strictly increasing tuple of neighbors of ``v``.
    Use :func:`build_graph` rather than the raw constructor; the
    operations below preserve the sortedness invariant themselves.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as bitmasks; the exact solvers run on these."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    @cached_property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def is_independent(self, members: Iterable[int]) -> bool:
        """True iff no two members are adjacent."""
        mask = 0
        for v in members:
            mask |= 1 << v
        for v in range(self.n):
            if (mask >> v) & 1 and self.masks[v] & mask:
                return False
        return True

    def induced_delete(self, members: Iterable[int]) -> tuple[Graph, RelabelMap]:
        """Induced subgraph on the complement of ``members``.

        Kept vertices are renumbered in increasing order of their old
        ids; the returned map translates between the two label spaces.
        """
        removed = set(members)
        for v in removed:
            if not 0 <= v < self.n:
                raise PreconditionViolation("vertex out of range", v)
        inverse = tuple(v for v in range(self.n) if v not in removed)
        forward = {old: new for new, old in enumerate(inverse)}
        # Old adjacency is ascending and the relabeling is monotone, so
        # the new lists come out ascending without re-sorting.
        adj = tuple(
            tuple(forward[u] for u in self.adj[old] if u not in removed)
            for old in inverse
        )
        return Graph(len(inverse), adj), RelabelMap(forward, inverse)

    def add_edge(self, u: int, v: int) -> Graph:
        """New graph with the edge (u, v) added."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise PreconditionViolation("vertex out of range", (u, v))
        if u == v:
            raise PreconditionViolation("loop rejected", (u, v))
        if self.has_edge(u, v):
            raise PreconditionViolation("edge already present", (u, v))
        adj = [list(nbrs) for nbrs in self.adj]
        insort(adj[u], v)
        insort(adj[v], u)
        return Graph(self.n, tuple(tuple(nbrs) for nbrs in adj))

    def validate(self) -> None:
        """Full scan of the representation invariants; raises on failure."""
        if self.n < 0 or len(self.adj) != self.n:
            raise PreconditionViolation("adjacency length mismatch", self.n)
        for v, nbrs in enumerate(self.adj):
            if any(nbrs[i] >= nbrs[i + 1] for i in range(len(nbrs) - 1)):
                raise PreconditionViolation("adjacency not strictly increasing", v)
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise PreconditionViolation("vertex out of range", (v, u))
                if u == v:
                    raise PreconditionViolation("loop rejected", (v, u))
                if v not in self.adj[u]:
                    raise PreconditionViolation("adjacency not symmetric", (v, u))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph from an edge list.

    Duplicate edges (in either orientation) collapse; loops and
    out-of-range endpoints are rejected.
    """
    if n < 0:
        raise PreconditionViolation("vertex count must be nonnegative", n)
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise PreconditionViolation("vertex out of range", (u, v))
        if u == v:
            raise PreconditionViolation("loop rejected", (u, v))
        seen.add((u, v) if u < v else (v, u))
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(seen):
        lists[u].append(v)
        lists[v].append(u)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in lists))


@dataclass(frozen=True)
class RelabelMap:
    """Vertex translation for an induced subgraph.

    ``forward`` maps old ids of kept vertices to new ids; ``inverse`` is
    total on the new ids, ``inverse[new] == old``.
    """

    forward: dict[int, int]
    inverse: tuple[int, ...]

    def to_original(self, vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.inverse[v] for v in vertices)

    def to_new(self, vertices: Iterable[int]) -> tuple[int, ...]:
        return tuple(self.forward[v] for v in vertices)


@dataclass(frozen=True)
class Decomposition:
    """Partition of a max-degree-2 graph into paths, cycles and isolated vertices.

    Paths are listed endpoint to endpoint starting from the smaller
    endpoint; cycles start at their smallest vertex and step first to
    that vertex's smaller neighbor.  Components appear in increasing
    order of their smallest vertex.
    """

    paths: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]
    odd_cycle_count: int

    def odd_cycles(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c for c in self.cycles if len(c) % 2 == 1)


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 1..d to the vertices 0..n-1."""

    d: int
    colors: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.colors)

    def class_sizes(self) -> dict[int, int]:
        return dict(Counter(self.colors))

    def colors_used(self) -> int:
        return len(set(self.colors))

    def class_members(self, color: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == color)


@dataclass(frozen=True)
class TwoColorResult:
    """Outcome of 2-coloring: either a coloring or an odd closed walk.

    Exactly one of the fields is set.  ``odd_walk`` is a closed walk
    (first vertex repeated at the end) traversing an odd number of
    edges, which certifies that the graph is not bipartite.
    """

    coloring: Coloring | None
    odd_walk: tuple[int, ...] | None


def path_cycle_decomposition(g: Graph) -> Decomposition:
    """Decompose a graph of maximum degree <= 2 into its components."""
    for v in range(g.n):
        if g.degree(v) > 2:
            raise PreconditionViolation("maximum degree exceeds 2", v)
    visited = [False] * g.n
    paths: list[tuple[int, ...]] = []
    cycles: list[tuple[int, ...]] = []
    isolated: list[int] = []
    for v in range(g.n):
        if visited[v]:
            continue
        if g.degree(v) == 0:
            visited[v] = True
            isolated.append(v)
            continue
        # Collect the component of v; every vertex in it has degree 1 or 2.
        component = [v]
        visited[v] = True
        stack = [v]
        while stack:
            x = stack.pop()
            for u in g.adj[x]:
                if not visited[u]:
                    visited[u] = True
                    component.append(u)
                    stack.append(u)
        endpoints = sorted(x for x in component if g.degree(x) == 1)
        if endpoints:
            walk = _walk_from(g, endpoints[0])
            paths.append(walk)
        else:
            walk = _walk_from(g, min(component))
            cycles.append(walk)
    odd = sum(1 for c in cycles if len(c) % 2 == 1)
    return Decomposition(tuple(paths), tuple(cycles), tuple(isolated), odd)


def _walk_from(g: Graph, start: int) -> tuple[int, ...]:
    # Walks a degree-<=2 component from `start`, preferring the smaller
    # neighbor on the first step; stops when it returns to `start` or
    # runs out of fresh vertices.
    walk = [start]
    prev = -1
    cur = start
    while True:
        nxt = -1
        for u in g.adj[cur]:
            if u != prev:
                nxt = u
                break
        if nxt == -1 or nxt == start:
            return tuple(walk)
        walk.append(nxt)
        prev, cur = cur, nxt


def two_color_bipartite(g: Graph) -> TwoColorResult:
    """2-color a graph by BFS, or certify an odd closed walk.

    Components are rooted at their smallest vertex and roots get color 1,
    so the output is unique.  On failure the walk runs from the root down
    to both endpoints of the conflicting edge and back, giving an odd
    number of edges.
    """
    colors = [0] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if colors[root]:
            continue
        colors[root] = 1
        queue = [root]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for u in g.adj[x]:
                if colors[u] == 0:
                    colors[u] = 3 - colors[x]
                    parent[u] = x
                    queue.append(u)
                elif colors[u] == colors[x]:
                    return TwoColorResult(None, _odd_walk(parent, x, u))
    return TwoColorResult(Coloring(2, tuple(colors)), None)


def _odd_walk(parent: list[int], x: int, u: int) -> tuple[int, ...]:
    # Closed walk root -> x -> u -> root along BFS tree paths plus the
    # conflict edge.  x and u sit at depths of equal parity, so the edge
    # count 2*depth_skew + 1 is odd.
    def up(v: int) -> list[int]:
        chain = [v]
        while parent[chain[-1]] != -1:
            chain.append(parent[chain[-1]])
        return chain

    to_x = up(x)  # x .. root
    to_u = up(u)  # u .. root
    return tuple(reversed(to_x)) + tuple(to_u)
