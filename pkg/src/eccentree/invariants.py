"""Exact distance and eccentricity invariants of trees.

Every value is a :class:`fractions.Fraction`; floats only appear when a
report renders a decimal column.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .errors import SingleVertexUndefined
from .tree import Tree, _bfs

ExactRational = Fraction


class InvariantKind(str, Enum):
    REE_EDGE = "REE_EDGE"
    REE_VERTEX = "REE_VERTEX"
    ECC_CONNECTIVITY_EDGE = "ECC_CONNECTIVITY_EDGE"
    ECC_CONNECTIVITY_VERTEX = "ECC_CONNECTIVITY_VERTEX"
    WIENER = "WIENER"
    HARARY = "HARARY"
    AVG_ECCENTRICITY = "AVG_ECCENTRICITY"
    ECC_DISTANCE_SUM = "ECC_DISTANCE_SUM"


_RECIPROCAL = {
    InvariantKind.REE_EDGE,
    InvariantKind.REE_VERTEX,
    InvariantKind.HARARY,
    InvariantKind.AVG_ECCENTRICITY,
}


def ree(t: Tree) -> Fraction:
    """Total reciprocal edge-eccentricity, vertex form: sum of deg(v)/ecc(v).

    This is the hot path of every extremal search, so it skips the kind
    dispatch of :func:`compute_invariant`.
    """
    if t.n == 1:
        raise SingleVertexUndefined("reciprocal eccentricity is undefined at n = 1")
    ecc = t.profile.ecc
    # group by eccentricity so only a handful of Fractions are built
    by_ecc: dict[int, int] = {}
    for v, a in enumerate(t.adjacency):
        e = ecc[v]
        by_ecc[e] = by_ecc.get(e, 0) + len(a)
    return sum((Fraction(d, e) for e, d in by_ecc.items()), Fraction(0))


def _ree_edge(t: Tree, ecc) -> Fraction:
    total = Fraction(0)
    for u, v in t.edges():
        total += Fraction(1, ecc[u]) + Fraction(1, ecc[v])
    return total


def _ree_vertex(t: Tree, ecc) -> Fraction:
    return sum((Fraction(len(a), ecc[v]) for v, a in enumerate(t.adjacency)), Fraction(0))


def _ecc_conn_edge(t: Tree, ecc) -> Fraction:
    return Fraction(sum(ecc[u] + ecc[v] for u, v in t.edges()))


def _ecc_conn_vertex(t: Tree, ecc) -> Fraction:
    return Fraction(sum(len(a) * ecc[v] for v, a in enumerate(t.adjacency)))


def _pairwise(t: Tree, ecc, dist_rows=None) -> dict[InvariantKind, Fraction]:
    if dist_rows is None:
        dist_rows = [_bfs(t.adjacency, u) for u in range(t.n)]
    wiener = 0
    eds = 0
    harary = Fraction(0)
    # harary accumulates counts per distance first
    per_distance: dict[int, int] = {}
    for u in range(t.n):
        row = dist_rows[u]
        for v in range(u + 1, t.n):
            d = row[v]
            wiener += d
            eds += (ecc[u] + ecc[v]) * d
            per_distance[d] = per_distance.get(d, 0) + 1
    for d, c in per_distance.items():
        harary += Fraction(c, d)
    return {
        InvariantKind.WIENER: Fraction(wiener),
        InvariantKind.HARARY: harary,
        InvariantKind.ECC_DISTANCE_SUM: Fraction(eds),
    }


def compute_invariant(t: Tree, kind: InvariantKind | str) -> Fraction:
    kind = InvariantKind(kind)
    if t.n == 1 and kind in _RECIPROCAL:
        raise SingleVertexUndefined(f"{kind.value} is undefined for the single-vertex tree")
    ecc = t.profile.ecc
    if kind is InvariantKind.REE_EDGE:
        return _ree_edge(t, ecc)
    if kind is InvariantKind.REE_VERTEX:
        return _ree_vertex(t, ecc)
    if kind is InvariantKind.ECC_CONNECTIVITY_EDGE:
        return _ecc_conn_edge(t, ecc)
    if kind is InvariantKind.ECC_CONNECTIVITY_VERTEX:
        return _ecc_conn_vertex(t, ecc)
    if kind is InvariantKind.AVG_ECCENTRICITY:
        return Fraction(sum(ecc), t.n)
    return _pairwise(t, ecc)[kind]


def all_invariants(t: Tree) -> dict[InvariantKind, Fraction]:
    """Every kind at once, sharing one eccentricity and one distance computation."""
    if t.n == 1:
        raise SingleVertexUndefined("reciprocal kinds are undefined at n = 1")
    ecc = t.profile.ecc
    out = {
        InvariantKind.REE_EDGE: _ree_edge(t, ecc),
        InvariantKind.REE_VERTEX: _ree_vertex(t, ecc),
        InvariantKind.ECC_CONNECTIVITY_EDGE: _ecc_conn_edge(t, ecc),
        InvariantKind.ECC_CONNECTIVITY_VERTEX: _ecc_conn_vertex(t, ecc),
    }
    out.update(_pairwise(t, ecc))
    out[InvariantKind.AVG_ECCENTRICITY] = Fraction(sum(ecc), t.n)
    return {k: out[k] for k in InvariantKind}


def format_rational(x: Fraction) -> str:
    """``p/q`` (or ``p`` for integers)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decimal_string(x: Fraction, digits: int = 12) -> str:
    return f"{float(x):.{digits}g}"
