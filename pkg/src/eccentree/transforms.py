"""Edge-grafting rewrites on trees.

Each rewrite checks its structural requirements (raising on violation) and
separately reports whether the eccentricity hypothesis of the matching
inequality holds.  The rewrite itself happens whenever it is structurally
legal, so callers can study both populations.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import (
    DegreeTooSmall,
    InfeasibleParams,
    MissingCutEdge,
    MissingEdge,
    NoCleanInternalPath,
    NonPendantNeighbor,
    NoOffPathPendant,
    NotAdjacent,
    SelfMove,
    WouldDisconnect,
)
from .tree import (
    Tree,
    component_without_edge,
    diametral_path,
    eccentricity_within,
    path_between,
)


class MoveKind(str, Enum):
    RHO = "rho"
    ALPHA = "alpha"
    THETA = "theta"
    DIAMETRAL_SHIFT = "shift"
    PENDANT_REGRAFT = "regraft"


@dataclass(frozen=True)
class GraftMove:
    kind: MoveKind
    source: int
    target: int
    moved: frozenset[int]


@dataclass(frozen=True)
class Precondition:
    """Whether the inequality's hypothesis holds at this site, with the measured quantities."""

    held: bool
    detail: str


def relocate_branches(t: Tree, source: int, target: int, roots: Iterable[int]) -> Tree:
    """Detach each branch hanging at ``source`` through a root and reattach it at ``target``."""
    roots = sorted(set(roots))
    t.check_vertex(source)
    t.check_vertex(target)
    if source == target:
        raise SelfMove(f"source and target are both {source}")
    if not roots:
        raise InfeasibleParams("no branch roots given")
    for r in roots:
        t.check_vertex(r)
        if not t.has_edge(source, r):
            raise NotAdjacent(f"{r} is not adjacent to {source}")
        if target in component_without_edge(t, r, source):
            raise WouldDisconnect(f"target {target} lies inside the branch rooted at {r}")
    moved = set(roots)
    edges = [(u, v) for u, v in t.edges() if not ((u == source and v in moved) or (v == source and u in moved))]
    edges.extend((target, r) for r in roots)
    return Tree.from_edges(t.n, edges)


def _pendant_path_length(t: Tree, v: int, x: int) -> int | None:
    """Length of the branch at ``v`` through ``x`` if it is a bare path, else None."""
    prev, cur, length = v, x, 1
    while True:
        nxt = [y for y in t.adjacency[cur] if y != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            return None
        prev, cur, length = cur, nxt[0], length + 1


def rho_precondition(t: Tree, w: int, v: int, roots: Iterable[int]) -> Precondition:
    roots = set(roots)
    retained = [x for x in t.adjacency[v] if x != w and x not in roots]
    if len(retained) > 1:
        return Precondition(False, f"v keeps {len(retained)} branches")
    length = 0
    if retained:
        pl = _pendant_path_length(t, v, retained[0])
        if pl is None:
            return Precondition(False, "retained branch at v is not a pendant path")
        length = pl
    side = component_without_edge(t, w, v)
    k = eccentricity_within(t, w, side)
    held = bool(roots) and len(side) >= 2 and k >= length + 1
    note = " (no retained path, l=0)" if length == 0 else ""
    return Precondition(held, f"k={k} l={length}{note}")


def rho_transform(t: Tree, w: int, v: int, branch_roots: Iterable[int]) -> tuple[Tree, Precondition]:
    """Move the branches at ``v`` through ``branch_roots`` across the edge to ``w``."""
    t.check_vertex(w)
    t.check_vertex(v)
    if not t.has_edge(w, v):
        raise MissingCutEdge(f"({w}, {v}) is not an edge")
    roots = set(branch_roots)
    if w in roots:
        raise NotAdjacent(f"{w} cannot be moved onto itself")
    pre = rho_precondition(t, w, v, roots)
    return relocate_branches(t, v, w, roots), pre


def _clean_path(t: Tree, v1: int, vl: int) -> list[int]:
    if v1 == vl:
        raise SelfMove(f"path endpoints coincide at {v1}")
    route = path_between(t, v1, vl)
    for x in route[1:-1]:
        if t.degree(x) != 2:
            raise NoCleanInternalPath(f"internal vertex {x} has degree {t.degree(x)}")
    return route


def alpha_precondition(t: Tree, v1: int, vl: int, roots: Iterable[int]) -> Precondition:
    route = _clean_path(t, v1, vl)
    roots = set(roots)
    off = {x for x in t.adjacency[vl] if x != route[-2]}
    if roots != off:
        return Precondition(False, "not every branch at the far end is moved")
    near_side = component_without_edge(t, v1, route[1])
    far_side = component_without_edge(t, vl, route[-2])
    q = eccentricity_within(t, v1, near_side)
    p = eccentricity_within(t, vl, far_side)
    held = len(near_side) >= 2 and len(far_side) >= 2 and q >= p
    return Precondition(held, f"q={q} p={p} path={len(route)}")


def alpha_transform(t: Tree, v1: int, vl: int, branch_roots: Iterable[int]) -> tuple[Tree, Precondition]:
    """Move branches at ``vl`` to ``v1`` along a path of degree-2 internal vertices."""
    t.check_vertex(v1)
    t.check_vertex(vl)
    route = _clean_path(t, v1, vl)
    roots = set(branch_roots)
    if route[-2] in roots:
        raise NoCleanInternalPath("the path itself cannot be moved")
    pre = alpha_precondition(t, v1, vl, roots)
    return relocate_branches(t, vl, v1, roots), pre


def theta_transform(t: Tree, v: int, u: int, w: int) -> tuple[Tree, Precondition]:
    """Move every pendant neighbor of ``v`` (all neighbors but ``u``) to ``w``."""
    for x in (v, u, w):
        t.check_vertex(x)
    if not t.has_edge(v, u):
        raise MissingEdge(f"({v}, {u}) is not an edge")
    if not t.has_edge(u, w):
        raise MissingEdge(f"({u}, {w}) is not an edge")
    if v == w:
        raise SelfMove("v and w coincide")
    moved = [z for z in t.adjacency[v] if z != u]
    if not moved:
        raise InfeasibleParams(f"{v} has no neighbors besides {u}")
    for z in moved:
        if t.degree(z) != 1:
            raise NonPendantNeighbor(f"{z} has degree {t.degree(z)}")
    if t.degree(w) < 2:
        raise DegreeTooSmall(f"degree of {w} is {t.degree(w)}")
    h1 = set(component_without_edge(t, u, w)) - set(component_without_edge(t, v, u))
    d1 = eccentricity_within(t, u, h1)
    h2 = component_without_edge(t, w, u)
    d2 = eccentricity_within(t, w, h2)
    pre = Precondition(d2 >= d1, f"eps_H2(w)={d2} eps_H1(u)={d1}")
    return relocate_branches(t, v, w, moved), pre


def _off_path_pendant(t: Tree) -> tuple[list[int], int, int]:
    route = diametral_path(t)
    on = set(route)
    for leaf in t.leaves():
        support = t.adjacency[leaf][0]
        if support not in on:
            return route, leaf, support
    raise NoOffPathPendant("every pendant hangs on the diametral path")


def shift_equality_ecc(d: int) -> int:
    """Eccentricity of the support at which the shift leaves REE unchanged."""
    return d // 2 + 1 if d % 2 == 0 else (d + 1) // 2 + 1


def diametral_pendant_shift(t: Tree) -> tuple[Tree, bool]:
    """Move the smallest-id off-path pendant next to the center of the diametral path.

    Returns the new tree and ``strict``: False exactly in the equality case,
    where the support's eccentricity equals that of the new attachment point.
    """
    route, leaf, support = _off_path_pendant(t)
    d = len(route) - 1
    idx = d // 2 - 1 if d % 2 == 0 else (d - 1) // 2 - 1
    target = route[idx]
    strict = t.profile.ecc[support] != shift_equality_ecc(d)
    return relocate_branches(t, support, target, [leaf]), strict


def pendant_regraft(t: Tree) -> Tree:
    """Move all pendant neighbors of the first off-path support vertex to v_1."""
    route, _, support = _off_path_pendant(t)
    moved = [x for x in t.adjacency[support] if t.degree(x) == 1]
    return relocate_branches(t, support, route[1], moved)


# -- site scans for fuzzing --------------------------------------------------

def rho_sites(t: Tree) -> Iterator[tuple[int, int, frozenset[int]]]:
    """Every (w, v, roots) that mirrors the rewrite's shape, smallest ids first.

    ``v`` keeps at most one neighbor besides ``w``, and that one must start a
    pendant path; everything else at ``v`` moves.
    """
    for v in range(t.n):
        for w in t.adjacency[v]:
            others = [x for x in t.adjacency[v] if x != w]
            options = [None] + [x for x in others if _pendant_path_length(t, v, x) is not None]
            for keep in options:
                roots = frozenset(x for x in others if x != keep)
                if roots:
                    yield w, v, roots


def alpha_sites(t: Tree) -> Iterator[tuple[int, int, frozenset[int]]]:
    for v1 in range(t.n):
        for first in t.adjacency[v1]:
            prev, cur = v1, first
            while t.degree(cur) == 2:
                prev, cur = cur, next(y for y in t.adjacency[cur] if y != prev)
            roots = frozenset(y for y in t.adjacency[cur] if y != prev)
            if roots:
                yield v1, cur, roots


def theta_sites(t: Tree) -> Iterator[tuple[int, int, int]]:
    for v in range(t.n):
        inner = [x for x in t.adjacency[v] if t.degree(x) > 1]
        if len(inner) != 1 or t.degree(v) < 2:
            continue
        u = inner[0]
        for w in t.adjacency[u]:
            if w != v and t.degree(w) >= 2:
                yield v, u, w


def apply_transform(
    kind: MoveKind | str,
    t: Tree,
    source: int | None = None,
    target: int | None = None,
    roots: Iterable[int] | None = None,
) -> tuple[Tree, dict]:
    """Uniform entry point: branches move from ``source`` to ``target``.

    For theta, ``source`` is v and ``target`` is w; u is their common neighbor.
    """
    kind = MoveKind(kind)
    if kind is MoveKind.DIAMETRAL_SHIFT:
        out, strict = diametral_pendant_shift(t)
        return out, {"kind": kind.value, "precondition_held": True, "strict": strict}
    if kind is MoveKind.PENDANT_REGRAFT:
        return pendant_regraft(t), {"kind": kind.value, "precondition_held": True}
    if source is None or target is None:
        raise InfeasibleParams(f"{kind.value} needs --from and --to")
    if kind is MoveKind.THETA:
        common = set(t.adjacency[source]) & set(t.adjacency[target])
        if not common:
            raise MissingEdge(f"{source} and {target} share no neighbor")
        out, pre = theta_transform(t, source, min(common), target)
    else:
        if roots is None:
            raise InfeasibleParams(f"{kind.value} needs --roots")
        if kind is MoveKind.RHO:
            out, pre = rho_transform(t, target, source, roots)
        else:
            out, pre = alpha_transform(t, target, source, roots)
    return out, {"kind": kind.value, "precondition_held": pre.held, "detail": pre.detail}
