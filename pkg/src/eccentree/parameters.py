"""Structural tree parameters that define the extremal classes.

Matching and domination numbers use linear-time tree DPs; exponential
brute-force versions live in the test suite as oracles.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import InfeasibleParams
from .tree import Tree, _bfs


def _postorder(adjacency, root: int = 0, removed: int = -1) -> tuple[list[int], list[int]]:
    """BFS order and parent array of the component of ``root`` avoiding ``removed``."""
    parent = [-1] * len(adjacency)
    parent[root] = root
    order = [root]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for w in adjacency[u]:
            if w != removed and parent[w] < 0:
                parent[w] = u
                order.append(w)
    order.reverse()
    return order, parent


def pendant_count(t: Tree) -> int:
    return sum(1 for a in t.adjacency if len(a) == 1)


def _matching_size(adjacency, removed: int = -1) -> int:
    n = len(adjacency)
    matched = [False] * n
    seen = [False] * n
    size = 0
    for root in range(n):
        if root == removed or seen[root]:
            continue
        order, parent = _postorder(adjacency, root, removed)
        for v in order:
            seen[v] = True
            p = parent[v]
            # leaves-up greedy: pair an unmatched vertex with its unmatched parent
            if p != v and not matched[v] and not matched[p]:
                matched[v] = matched[p] = True
                size += 1
    return size


def matching_number(t: Tree) -> int:
    return _matching_size(t.adjacency)


def is_perfectly_matched(t: Tree, v: int) -> bool:
    """True iff every maximum matching covers ``v``.

    Equivalent to the matching number dropping by one when ``v`` is deleted.
    """
    t.check_vertex(v)
    return _matching_size(t.adjacency, removed=v) == matching_number(t) - 1


def domination_number(t: Tree) -> int:
    """Minimum dominating set size by the three-state DP.

    States per vertex v (over its subtree):
      inset  - v in the set
      bychild - v not in the set, dominated by some child
      needs  - v not in the set, not yet dominated (parent must cover it)
    """
    if t.n == 1:
        return 1
    order, parent = _postorder(t.adjacency, 0)
    inf = t.n + 1
    inset = [1] * t.n
    bychild = [inf] * t.n
    needs = [0] * t.n
    for v in order:
        kids = [c for c in t.adjacency[v] if parent[c] == v and c != v]
        if not kids:
            continue
        s_in = 1
        s_needs = 0
        s_free = 0
        best_bump = inf
        for c in kids:
            s_in += min(inset[c], bychild[c], needs[c])
            s_needs += bychild[c]
            free = min(inset[c], bychild[c])
            s_free += free
            best_bump = min(best_bump, inset[c] - free)
        inset[v] = s_in
        needs[v] = min(s_needs, inf)
        bychild[v] = min(s_free + best_bump, inf)
    return min(inset[0], bychild[0])


def bipartition_sizes(t: Tree) -> tuple[int, int]:
    dist = _bfs(t.adjacency, 0)
    even = sum(1 for d in dist if d % 2 == 0)
    odd = t.n - even
    return (min(even, odd), max(even, odd))


class Selector(str, Enum):
    PENDANTS = "pendants"
    MATCHING = "matching"
    DOMINATION = "domination"
    DIAMETER = "diameter"
    BIPARTITION = "bipartition"


_ARITY = {
    Selector.PENDANTS: 1,
    Selector.MATCHING: 1,
    Selector.DOMINATION: 1,
    Selector.DIAMETER: 1,
    Selector.BIPARTITION: 2,
}


@dataclass(frozen=True)
class ParamClass:
    selector: Selector
    args: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "selector", Selector(self.selector))
        args = tuple(int(a) for a in self.args)
        if len(args) != _ARITY[self.selector]:
            raise InfeasibleParams(f"{self.selector.value} takes {_ARITY[self.selector]} argument(s)")
        if any(a < 0 for a in args):
            raise InfeasibleParams(f"negative argument in {args}")
        if self.selector is Selector.BIPARTITION:
            args = tuple(sorted(args))
        object.__setattr__(self, "args", args)

    @classmethod
    def parse(cls, spec: str) -> "ParamClass":
        m = re.fullmatch(r"\s*(\w+)\s*=\s*([\d,\s]+)", spec)
        if not m:
            raise InfeasibleParams(f"cannot parse class spec {spec!r}")
        try:
            selector = Selector(m.group(1).lower())
        except ValueError:
            raise InfeasibleParams(f"unknown selector {m.group(1)!r}") from None
        args = tuple(int(x) for x in m.group(2).split(",") if x.strip())
        return cls(selector, args)

    def __str__(self) -> str:
        return f"{self.selector.value}={','.join(map(str, self.args))}"

    def value_of(self, t: Tree):
        if self.selector is Selector.PENDANTS:
            return (pendant_count(t),)
        if self.selector is Selector.MATCHING:
            return (matching_number(t),)
        if self.selector is Selector.DOMINATION:
            return (domination_number(t),)
        if self.selector is Selector.DIAMETER:
            return (t.profile.diameter,)
        return bipartition_sizes(t)

    def matches(self, t: Tree) -> bool:
        return self.value_of(t) == self.args


def pendants(k: int) -> ParamClass:
    return ParamClass(Selector.PENDANTS, (k,))


def matching(b: int) -> ParamClass:
    return ParamClass(Selector.MATCHING, (b,))


def domination(g: int) -> ParamClass:
    return ParamClass(Selector.DOMINATION, (g,))


def diameter(d: int) -> ParamClass:
    return ParamClass(Selector.DIAMETER, (d,))


def bipartition(p: int, q: int) -> ParamClass:
    return ParamClass(Selector.BIPARTITION, (p, q))
