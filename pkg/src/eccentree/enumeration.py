"""Isomorph-free generation of free trees and canonical codes.

Free trees are produced as canonical level sequences rooted at a center,
stepping from one valid sequence to the next without storing earlier
output (Wright-Richmond-Odlyzko-McKay successor scheme), so memory stays
linear in ``n``.
"""
from __future__ import annotations

import os
from itertools import islice
from typing import Callable, Iterable, Iterator, Optional

from .errors import NTooLarge
from .parameters import ParamClass
from .tree import Tree

CanonicalCode = bytes

DEFAULT_MAX_N = int(os.environ.get("ECCENTREE_MAX_N", "20"))


# -- canonical codes ---------------------------------------------------------

def _rooted_code(adjacency, root: int) -> str:
    # iterative AHU: children codes sorted, wrapped in parentheses
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in adjacency[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    codes: dict[int, str] = {}
    for u in reversed(order):
        kids = sorted(codes.pop(w) for w in adjacency[u] if parent.get(w) == u)
        codes[u] = "(" + "".join(kids) + ")"
    return codes[root]


def _pack(code: str) -> bytes:
    bits = code.replace("(", "1").replace(")", "0")
    bits += "0" * (-len(bits) % 8)
    return int(bits, 2).to_bytes(len(bits) // 8, "big")


def canonical_code(t: Tree) -> CanonicalCode:
    """AHU encoding rooted at the center; bicentral trees take the smaller rooting.

    Two trees have equal codes exactly when they are isomorphic.
    """
    centers = sorted(t.profile.centers)
    return _pack(min(_rooted_code(t.adjacency, c) for c in centers))


def is_isomorphic(a: Tree, b: Tree) -> bool:
    if a.n != b.n or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_code(a) == canonical_code(b)


# -- level sequences ---------------------------------------------------------

def tree_from_levels(levels: list[int]) -> Tree:
    """Preorder level sequence (root at level 0) to a Tree; vertex i is position i."""
    n = len(levels)
    adj: list[list[int]] = [[] for _ in range(n)]
    stack = [0]
    for i in range(1, n):
        lv = levels[i]
        del stack[lv:]
        p = stack[-1]
        adj[p].append(i)
        adj[i].append(p)
        stack.append(i)
    return Tree(n, tuple(tuple(sorted(a)) for a in adj))


def _rooted_successor(levels: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    """Next rooted tree in decreasing lexicographic order of level sequences."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    shift = p - q
    for i in range(p, len(out)):
        out[i] = out[i - shift]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """First root subtree (levels lowered by one) and everything else."""
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _valid_center_rooting(levels: list[int]) -> bool:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    if rh != lh:
        return rh > lh
    # bicentral: keep the rooting whose far half is not larger
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def _skip_invalid(levels: list[int]) -> Optional[list[int]]:
    """Advance past every sequence sharing this (unusable) first subtree."""
    left, _ = _split(levels)
    p = len(left)
    nxt = _rooted_successor(levels, p)
    if nxt is None:
        return None
    if levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[len(nxt) - len(tail):] = tail
    return nxt


def _free_level_sequences(n: int) -> Iterator[list[int]]:
    if n == 1:
        yield [0]
        return
    if n == 2:
        yield [0, 1]
        return
    # start: the path, rooted at its center
    levels: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        while levels is not None and not _valid_center_rooting(levels):
            levels = _skip_invalid(levels)
        if levels is None:
            return
        yield levels
        levels = _rooted_successor(levels)


def free_trees(
    n: int,
    *,
    part: int = 0,
    parts: int = 1,
    max_n: Optional[int] = None,
) -> Iterator[Tree]:
    """One tree per isomorphism class on ``n`` vertices, deterministic order.

    ``part``/``parts`` select an independent round-robin slice of the stream;
    the union of all parts is the full stream.
    """
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n < 1:
        raise NTooLarge(f"n must be >= 1, got {n}")
    if n > cap:
        raise NTooLarge(f"n={n} exceeds the configured cap {cap}")
    if not 0 <= part < parts:
        raise ValueError(f"part {part} not in 0..{parts - 1}")
    stream = _free_level_sequences(n)
    if parts > 1:
        stream = islice(stream, part, None, parts)
    for levels in stream:
        yield tree_from_levels(levels)


def count_free_trees(n: int, max_n: Optional[int] = None) -> int:
    """Number of free trees on ``n`` vertices, by running the generator."""
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if not 1 <= n <= cap:
        raise NTooLarge(f"n={n} outside 1..{cap}")
    return sum(1 for _ in _free_level_sequences(n))


def filter_class(stream: Iterable[Tree], c: ParamClass) -> Iterator[Tree]:
    return (t for t in stream if c.matches(t))


def filter_predicate(stream: Iterable[Tree], pred: Callable[[Tree], bool]) -> Iterator[Tree]:
    return (t for t in stream if pred(t))
