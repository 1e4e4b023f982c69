"""Immutable trees on vertices ``0..n-1`` with distance and eccentricity helpers.

All tie-breaking is by smallest vertex id so every routine here is
deterministic.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import HasCycle, NotConnected, VertexOutOfRange

Edge = tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """A simple connected acyclic graph in sorted adjacency-list form.

    Build instances with :func:`validate_tree` (checks everything) or
    :meth:`Tree.from_edges` (same thing, method spelling). The raw
    constructor trusts its input and is used on hot paths where the caller
    already guarantees tree-ness.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Tree":
        return validate_tree(n, edges)

    @classmethod
    def _trusted(cls, n: int, edges: Iterable[Sequence[int]]) -> "Tree":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(tuple(sorted(a)) for a in adj))

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v!r} not in 0..{self.n - 1}")

    @cached_property
    def profile(self) -> "EccentricityProfile":
        return eccentricity_profile(self)

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    diameter: int
    radius: int
    centers: frozenset[int]


def validate_tree(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Return the tree on ``0..n-1`` with the given edges, or raise.

    Raises VertexOutOfRange, HasCycle (loops, duplicates, an edge closing a
    cycle) or NotConnected (too few edges); the message names the first
    offending element.
    """
    if not isinstance(n, int) or n < 1:
        raise VertexOutOfRange(f"vertex count must be >= 1, got {n!r}")
    edge_list = [tuple(e) for e in edges]
    seen: set[Edge] = set()
    for e in edge_list:
        if len(e) != 2:
            raise HasCycle(f"malformed edge {e!r}")
        u, v = e
        for x in (u, v):
            if not (isinstance(x, int) and 0 <= x < n):
                raise VertexOutOfRange(f"edge {e!r}: vertex {x!r} not in 0..{n - 1}")
        if u == v:
            raise HasCycle(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise HasCycle(f"duplicate edge {key}")
        seen.add(key)
    # union-find: the first edge joining two already-connected vertices closes a cycle
    root = list(range(n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for u, v in edge_list:
        a, b = find(u), find(v)
        if a == b:
            raise HasCycle(f"edge {(u, v)} closes a cycle")
        root[a] = b
    if len(edge_list) != n - 1:
        lonely = next(v for v in range(n) if find(v) != find(0))
        raise NotConnected(f"vertex {lonely} unreachable from vertex 0")
    t = Tree._trusted(n, edge_list)
    return t


def _bfs(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def bfs_distances(t: Tree, source: int) -> list[int]:
    t.check_vertex(source)
    return _bfs(t.adjacency, source)


def _argmax_smallest(values: Sequence[int]) -> int:
    best = max(values)
    return values.index(best)


def eccentricity_profile(t: Tree) -> EccentricityProfile:
    """Eccentricities of all vertices.

    In a tree every vertex has a farthest vertex among the two ends of any
    diametral path, so three BFS passes suffice.
    """
    if t.n == 1:
        return EccentricityProfile((0,), 0, 0, frozenset({0}))
    a = _argmax_smallest(_bfs(t.adjacency, 0))
    da = _bfs(t.adjacency, a)
    b = _argmax_smallest(da)
    db = _bfs(t.adjacency, b)
    ecc = tuple(max(x, y) for x, y in zip(da, db))
    radius = min(ecc)
    return EccentricityProfile(
        ecc=ecc,
        diameter=da[b],
        radius=radius,
        centers=frozenset(v for v, e in enumerate(ecc) if e == radius),
    )


def eccentricities_bruteforce(t: Tree) -> list[int]:
    """n BFS passes; O(n^2). Kept as an independent check of the fast path."""
    return [max(_bfs(t.adjacency, v)) for v in range(t.n)]


def path_between(t: Tree, a: int, b: int) -> list[int]:
    """The unique a-b path, listed from a to b."""
    t.check_vertex(a)
    t.check_vertex(b)
    parent = [-1] * t.n
    parent[a] = a
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in t.adjacency[u]:
            if parent[w] < 0:
                parent[w] = u
                queue.append(w)
    route = [b]
    while route[-1] != a:
        route.append(parent[route[-1]])
    route.reverse()
    return route


def diametral_path(t: Tree) -> list[int]:
    """One longest path, found by double BFS from vertex 0.

    Farthest-vertex choices take the smallest id; the result is oriented so
    that its smaller endpoint comes first.
    """
    if t.n == 1:
        return [0]
    a = _argmax_smallest(_bfs(t.adjacency, 0))
    b = _argmax_smallest(_bfs(t.adjacency, a))
    if b < a:
        a, b = b, a
    return path_between(t, a, b)


def component_without_edge(t: Tree, keep: int, cut: int) -> list[int]:
    """Vertices reachable from ``keep`` once the edge ``keep-cut`` is removed."""
    seen = {keep, cut}
    out = [keep]
    stack = [keep]
    while stack:
        u = stack.pop()
        for w in t.adjacency[u]:
            if w not in seen:
                seen.add(w)
                out.append(w)
                stack.append(w)
    return out


def eccentricity_within(t: Tree, root: int, members: Iterable[int]) -> int:
    """Eccentricity of ``root`` in the subtree induced by ``members``."""
    allowed = set(members)
    dist = {root: 0}
    queue = deque([root])
    far = 0
    while queue:
        u = queue.popleft()
        for w in t.adjacency[u]:
            if w in allowed and w not in dist:
                dist[w] = dist[u] + 1
                far = dist[w]
                queue.append(w)
    return far


def prufer_to_tree(seq: Sequence[int], n: int | None = None) -> Tree:
    """Decode a Prüfer sequence over ``0..n-1`` (``n = len(seq) + 2``)."""
    if n is None:
        n = len(seq) + 2
    if n == 1:
        return Tree(1, ((),))
    if len(seq) != n - 2:
        raise VertexOutOfRange(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise VertexOutOfRange(f"Prüfer entry {x} not in 0..{n - 1}")
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    u, v = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, v))
    return Tree._trusted(n, edges)


def relabel(t: Tree, perm: Sequence[int]) -> Tree:
    """Tree with vertex ``v`` renamed ``perm[v]``."""
    return Tree._trusted(t.n, [(perm[u], perm[v]) for u, v in t.edges()])


def path(n: int) -> Tree:
    return Tree._trusted(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Tree:
    return Tree._trusted(n, [(0, i) for i in range(1, n)])
