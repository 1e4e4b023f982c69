"""Named tree families and the closed-form extremal values attached to them.

Labeling is canonical per constructor: hub or path vertices first, then
legs/pendants in declaration order, so edge lists are stable across runs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import (
    CandidateValueMismatch,
    EmptyLegs,
    HubEccentricityMismatch,
    InfeasibleParams,
    LengthMismatch,
    NonPositiveLeg,
    TooFewLegs,
    UnknownTheorem,
)
from .invariants import ree
from .tree import Tree


class _Builder:
    """Accumulates edges while handing out fresh vertex ids."""

    def __init__(self, n0: int = 0):
        self.n = n0
        self.edges: list[tuple[int, int]] = []

    def new(self) -> int:
        self.n += 1
        return self.n - 1

    def hang_path(self, at: int, length: int) -> None:
        prev = at
        for _ in range(length):
            v = self.new()
            self.edges.append((prev, v))
            prev = v

    def hang_pendants(self, at: int, count: int) -> None:
        for _ in range(count):
            self.edges.append((at, self.new()))

    def spine(self, d: int) -> list[int]:
        vs = [self.new() for _ in range(d + 1)]
        self.edges.extend(zip(vs, vs[1:]))
        return vs

    def tree(self) -> Tree:
        return Tree._trusted(self.n, self.edges)


def path_tree(n: int) -> Tree:
    if n < 1:
        raise InfeasibleParams(f"path needs n >= 1, got {n}")
    b = _Builder()
    b.spine(n - 1)
    return b.tree()


def star_tree(n: int) -> Tree:
    if n < 1:
        raise InfeasibleParams(f"star needs n >= 1, got {n}")
    b = _Builder(1)
    b.hang_pendants(0, n - 1)
    return b.tree()


def spider(legs: Sequence[int]) -> Tree:
    """Hub 0 with one path per entry of ``legs``."""
    if len(legs) == 0:
        raise EmptyLegs("a spider needs at least one leg")
    for a in legs:
        if a < 1:
            raise NonPositiveLeg(f"leg length {a} is not positive")
    b = _Builder(1)
    for a in legs:
        b.hang_path(0, a)
    return b.tree()


def balanced_legs(n: int, k: int) -> list[int]:
    if not 1 <= k <= n - 1:
        raise InfeasibleParams(f"{k} legs impossible on {n} vertices")
    base, r = divmod(n - 1, k)
    return [base] * (k - r) + [base + 1] * r


def balanced_spider(n: int, k: int) -> Tree:
    if n < 3 or not 2 <= k <= n - 1:
        raise InfeasibleParams(f"balanced spider needs 2 <= k <= n-1, got n={n}, k={k}")
    return spider(balanced_legs(n, k))


def double_spider(left_legs: Sequence[int], right_legs: Sequence[int]) -> Tree:
    """Two spiders whose hubs are joined by an edge; vertex 0 is the left hub.

    Both hubs must end up with the same eccentricity, which for this shape
    means the longest leg on each side has the same length.
    """
    if len(left_legs) < 2 or len(right_legs) < 2:
        raise TooFewLegs("each side needs at least two legs")
    for a in list(left_legs) + list(right_legs):
        if a < 1:
            raise NonPositiveLeg(f"leg length {a} is not positive")
    el = max(max(left_legs), 1 + max(right_legs))
    er = max(max(right_legs), 1 + max(left_legs))
    if el != er:
        raise HubEccentricityMismatch(f"hub eccentricities differ: {el} vs {er}")
    b = _Builder(1)
    for a in left_legs:
        b.hang_path(0, a)
    hub = b.new()
    b.edges.append((0, hub))
    for a in right_legs:
        b.hang_path(hub, a)
    return b.tree()


def s_nk_set(n: int, k: int) -> list[Tree]:
    """All double spiders with k equal legs on n vertices, one per split s <= t."""
    if k < 2 or n < 2:
        raise InfeasibleParams(f"bad (n, k) = ({n}, {k})")
    if k < 4 or (n - 2) % k:
        return []
    a = (n - 2) // k
    return [double_spider([a] * s, [a] * (k - s)) for s in range(2, k // 2 + 1)]


def t_n_beta(n: int, beta: int) -> Tree:
    """Star on n-beta+1 vertices (center 0) with beta-1 leaves each given a pendant."""
    if beta < 1 or n < 2 * beta or n < 2:
        raise InfeasibleParams(f"T(n, beta) needs beta >= 1 and n >= 2*beta, got ({n}, {beta})")
    b = _Builder(1)
    b.hang_pendants(0, n - beta)
    for leaf in range(1, beta):
        b.hang_pendants(leaf, 1)
    return b.tree()


def p_t_ab(t: int, a: int, b: int) -> Tree:
    """Path on t vertices with a leaves at one end and b at the other."""
    if t < 2 or a < 0 or b < 0:
        raise InfeasibleParams(f"P_t(a, b) needs t >= 2, a, b >= 0, got ({t}, {a}, {b})")
    bl = _Builder()
    vs = bl.spine(t - 1)
    bl.hang_pendants(vs[0], a)
    bl.hang_pendants(vs[-1], b)
    return bl.tree()


def caterpillar(d: int, counts: Sequence[int]) -> Tree:
    """Path v_0..v_d (ids 0..d) with counts[i-1] pendants at v_i."""
    if d < 2:
        raise InfeasibleParams(f"caterpillar needs d >= 2, got {d}")
    if len(counts) != d - 1:
        raise LengthMismatch(f"need {d - 1} counts for d={d}, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise InfeasibleParams(f"negative pendant count in {list(counts)}")
    b = _Builder()
    vs = b.spine(d)
    for i, c in enumerate(counts, start=1):
        b.hang_pendants(vs[i], c)
    return b.tree()


def _check_nd(n: int, d: int) -> None:
    if not 2 <= d <= n - 1:
        raise InfeasibleParams(f"need 2 <= d <= n-1, got n={n}, d={d}")


def c_n_d(n: int, d: int) -> Tree:
    """All n-d-1 extra pendants at the center(s); odd d splits them as evenly as possible."""
    _check_nd(n, d)
    m = n - d - 1
    counts = [0] * (d - 1)
    if d % 2 == 0:
        counts[d // 2 - 1] = m
    else:
        counts[(d - 1) // 2 - 1] = (m + 1) // 2
        counts[(d + 1) // 2 - 1] = m // 2
    return caterpillar(d, counts)


def c_n_d_family(n: int, d: int) -> list[Tree]:
    """Every split of the central pendants (a single tree for even d)."""
    _check_nd(n, d)
    if d % 2 == 0:
        return [c_n_d(n, d)]
    m = n - d - 1
    out = []
    for a in range(m, (m - 1) // 2, -1):
        counts = [0] * (d - 1)
        counts[(d - 1) // 2 - 1] = a
        counts[(d + 1) // 2 - 1] = m - a
        out.append(caterpillar(d, counts))
    return out


def t_ndpq_family(n: int, d: int) -> list[Tree]:
    """Pendants only at v_1 and v_{d-1}, all splits p + q = n-d-1 (p >= q)."""
    _check_nd(n, d)
    m = n - d - 1
    out = []
    for p in range(m, (m - 1) // 2, -1):
        counts = [0] * (d - 1)
        counts[0] += p
        counts[-1] += m - p
        out.append(caterpillar(d, counts))
    return out


def _spine_with(d: int, pendants: dict[int, int], two_paths: Sequence[int] = ()) -> Tree:
    b = _Builder()
    vs = b.spine(d)
    for i, c in sorted(pendants.items()):
        b.hang_pendants(vs[i], c)
    for i in two_paths:
        b.hang_path(vs[i], 2)
    return b.tree()


def _require_diameter_range(n: int, d: int) -> None:
    if d < 4 or n < d + 3:
        raise InfeasibleParams(f"needs d >= 4 and n >= d+3, got n={n}, d={d}")


def _self_verify(trees: list[Tree], n: int, d: int, target: Fraction, label: str) -> list[Tree]:
    for t in trees:
        if t.n != n or t.profile.diameter != d:
            raise CandidateValueMismatch(f"{label}: construction has n={t.n}, d={t.profile.diameter}")
        val = ree(t)
        if val != target:
            raise CandidateValueMismatch(f"{label}: REE {val} != closed form {target} for {t.edges()}")
    return trees


def fig7_candidates(n: int, d: int) -> list[Tree]:
    """Second-largest-REE trees of diameter d (after C_{n,d}).

    Even d: one pendant beside the center plus the rest at the center (both
    sides), or a 2-path at the center plus pendants there. Odd d: with
    centers c1 < c2, a pendant at v_{c2+1} and p + q = n-d-2 pendants split
    over the centers, or a 2-path at v_{c2} and s + t = n-d-3 pendants split
    over the centers; every split is included.
    """
    _require_diameter_range(n, d)
    if d % 2 == 0:
        c = d // 2
        m = n - d - 2
        trees = [
            _spine_with(d, {c - 1: 1, c: m}),
            _spine_with(d, {c + 1: 1, c: m}),
            _spine_with(d, {c: m - 1}, two_paths=[c]),
        ]
    else:
        c1, c2 = (d - 1) // 2, (d + 1) // 2
        m = n - d - 2
        trees = [_spine_with(d, {c1: p, c2: m - p, c2 + 1: 1}) for p in range(m + 1)]
        trees += [_spine_with(d, {c1: s, c2: m - 1 - s}, two_paths=[c2]) for s in range(m)]
    return _self_verify(trees, n, d, closed_form("T47", [n, d]), "fig7")


def fig8_candidates(n: int, d: int) -> list[Tree]:
    """Trees T' (extra pendant at v_2) and T'' (extra pendant at v_{d-2}).

    Both carry p pendants at v_1 and q at v_{d-1} for every p + q = n-d-2.
    """
    _require_diameter_range(n, d)
    m = n - d - 2
    trees = []
    # at d = 4 both shapes put the extra pendant on v_2, so build them once
    for extra in sorted({2, d - 2}):
        for p in range(m, -1, -1):
            pend = {1: p, d - 1: m - p}
            pend[extra] = pend.get(extra, 0) + 1
            trees.append(_spine_with(d, pend))
    return _self_verify(trees, n, d, closed_form("T48", [n, d]), "fig8")


# -- closed forms ------------------------------------------------------------

_ARITY = {"T42I": 1, "T42II": 1, "T42III": 2, "T45III": 2, "T46": 1, "T47": 2, "T48": 2, "P3AB": 1}


def closed_form(theorem: str, args: Sequence[int]) -> Fraction:
    """Exact value of a displayed extremal formula, sums evaluated term by term."""
    key = theorem.upper()
    if key not in _ARITY:
        raise UnknownTheorem(f"no closed form named {theorem!r}")
    if len(args) != _ARITY[key]:
        raise InfeasibleParams(f"{key} takes {_ARITY[key]} argument(s), got {list(args)}")
    n = args[0]
    if key == "T42I":
        return Fraction(3 * n - 3, 2)
    if key in ("T42II", "T46"):
        return Fraction(5 * n - 4, 6)
    if key == "P3AB":
        return Fraction(7 * n - 1, 12)
    if key in ("T42III", "T45III"):
        return Fraction(10 * n - 3 * args[1] - 7, 12)
    d = args[1]
    if key == "T47":
        if d < 4 or n < d + 1:
            raise InfeasibleParams(f"T47 needs d >= 4 and n > d, got n={n}, d={d}")
        if d % 2 == 0:
            head = sum((Fraction(4, d - i) for i in range(d // 2 - 1)), Fraction(0))
            return head + Fraction(2 * n - 2 * d - 2, d) + Fraction(2 * n - 2 * d + 6, d + 2) + Fraction(2, d + 4)
        head = sum((Fraction(4, d - i) for i in range((d - 1) // 2 - 1)), Fraction(0))
        return (head - Fraction(2, d) + Fraction(2 * n - 2 * d + 4, d + 1)
                + Fraction(2 * n - 2 * d + 6, d + 3) + Fraction(2, d + 5))
    if d < 3 or n < d + 1:
        raise InfeasibleParams(f"T48 needs d >= 3 and n > d, got n={n}, d={d}")
    if d % 2 == 0:
        head = sum((Fraction(4, d - i) for i in range(1, d // 2)), Fraction(0))
        return head + Fraction(n - d + 4, d) + Fraction(n - d - 1, d - 1) + Fraction(1, d - 2)
    head = sum((Fraction(4, d - i) for i in range(1, (d - 1) // 2 + 1)), Fraction(0))
    return head + Fraction(n - d, d) + Fraction(n - d - 1, d - 1) + Fraction(1, d - 2)


# -- string specs ------------------------------------------------------------

class FamilyName(str, Enum):
    PATH = "path"
    STAR = "star"
    SPIDER = "spider"
    BALANCED_SPIDER = "bspider"
    DOUBLE_SPIDER = "dspider"
    S_NK_SET = "snk"
    T_N_BETA = "tnb"
    P_T_AB = "ptab"
    CATERPILLAR = "cat"
    C_ND = "cnd"
    FIG7 = "fig7"
    FIG8 = "fig8"


@dataclass(frozen=True)
class FamilySpec:
    """``name:params``; double spiders separate the two leg lists with ``|``.

    Examples: ``spider:2,2,2``, ``tnb:7,3``, ``cnd:9,4``, ``dspider:2,2|2,2``,
    ``cat:4,0,4,0`` (d first, then the d-1 counts).
    """

    name: FamilyName
    params: tuple[int, ...]
    right: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        m = re.fullmatch(r"\s*([A-Za-z0-9_]+)\s*:\s*([\d,\s|]*)", text)
        if not m:
            raise InfeasibleParams(f"cannot parse family spec {text!r}")
        raw = m.group(1)
        if raw.upper() in FamilyName.__members__:
            name = FamilyName[raw.upper()]
        else:
            try:
                name = FamilyName(raw.lower())
            except ValueError:
                raise InfeasibleParams(f"unknown family {raw!r}") from None
        body = m.group(2)
        left, _, right = body.partition("|")

        def ints(s: str) -> tuple[int, ...]:
            return tuple(int(x) for x in s.split(",") if x.strip())

        return cls(name, ints(left), ints(right))

    def __str__(self) -> str:
        s = f"{self.name.value}:{','.join(map(str, self.params))}"
        if self.right:
            s += "|" + ",".join(map(str, self.right))
        return s

    def build(self) -> list[Tree]:
        p = self.params
        name = self.name

        def need(k: int) -> None:
            if len(p) != k:
                raise InfeasibleParams(f"{name.value} takes {k} parameter(s), got {len(p)}")

        if name is FamilyName.PATH:
            need(1)
            return [path_tree(*p)]
        if name is FamilyName.STAR:
            need(1)
            return [star_tree(*p)]
        if name is FamilyName.SPIDER:
            return [spider(p)]
        if name is FamilyName.BALANCED_SPIDER:
            need(2)
            return [balanced_spider(*p)]
        if name is FamilyName.DOUBLE_SPIDER:
            return [double_spider(p, self.right)]
        if name is FamilyName.S_NK_SET:
            need(2)
            return s_nk_set(*p)
        if name is FamilyName.T_N_BETA:
            need(2)
            return [t_n_beta(*p)]
        if name is FamilyName.P_T_AB:
            need(3)
            return [p_t_ab(*p)]
        if name is FamilyName.CATERPILLAR:
            if not p:
                raise InfeasibleParams("cat needs d first")
            return [caterpillar(p[0], p[1:])]
        if name is FamilyName.C_ND:
            need(2)
            return [c_n_d(*p)]
        need(2)
        if name is FamilyName.FIG7:
            return fig7_candidates(*p)
        return fig8_candidates(*p)
