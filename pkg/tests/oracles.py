"""Slow, independent reference implementations used only by the tests.

Nothing here imports the library's eccentricity, invariant, parameter or
enumeration code; trees are handled as plain (n, edge list) pairs.
"""
from __future__ import annotations

import heapq
from functools import lru_cache
from fractions import Fraction
from itertools import combinations, permutations

INF = float("inf")


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def floyd_warshall(n, edges):
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def eccentricities(n, edges):
    return [max(row) for row in floyd_warshall(n, edges)]


def invariants(n, edges):
    """Every invariant straight from its definition, keyed by kind name."""
    d = floyd_warshall(n, edges)
    ecc = [max(row) for row in d]
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    pairs = list(combinations(range(n), 2))
    return {
        "REE_EDGE": sum((Fraction(1, ecc[u]) + Fraction(1, ecc[v]) for u, v in edges), Fraction(0)),
        "REE_VERTEX": sum((Fraction(deg[v], ecc[v]) for v in range(n)), Fraction(0)),
        "ECC_CONNECTIVITY_EDGE": Fraction(sum(ecc[u] + ecc[v] for u, v in edges)),
        "ECC_CONNECTIVITY_VERTEX": Fraction(sum(deg[v] * ecc[v] for v in range(n))),
        "WIENER": Fraction(sum(d[u][v] for u, v in pairs)),
        "HARARY": sum((Fraction(1, d[u][v]) for u, v in pairs), Fraction(0)),
        "AVG_ECCENTRICITY": Fraction(sum(ecc), n),
        "ECC_DISTANCE_SUM": Fraction(sum((ecc[u] + ecc[v]) * d[u][v] for u, v in pairs)),
    }


def max_matching(n, edges):
    """Largest set of pairwise disjoint edges, by exhaustive search."""
    edges = list(edges)
    best = 0
    for k in range(len(edges), 0, -1):
        if k <= best or 2 * k > n:
            continue
        for sub in combinations(edges, k):
            ends = [x for e in sub for x in e]
            if len(set(ends)) == len(ends):
                return k
    return best


def min_dominating(n, edges):
    adj = adjacency(n, edges)
    for k in range(1, n + 1):
        for sub in combinations(range(n), k):
            covered = set(sub)
            for v in sub:
                covered |= adj[v]
            if len(covered) == n:
                return k
    return n


def prufer_decode(seq, n):
    degree = [1] * n
    for x in seq:
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
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return edges


def all_rootings_form(n, edges):
    """Isomorphism invariant: the smallest rooted nested-tuple form over every root."""
    if n == 1:
        return ()
    adj = adjacency(n, edges)

    def rooted(v, parent):
        return tuple(sorted(rooted(w, v) for w in adj[v] if w != parent))

    return min(rooted(r, -1) for r in range(n))


def _partitions(total, max_part, max_len):
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_len - 1):
            yield (first,) + rest


def _distinct_perms(counts):
    """All distinct sequences using symbol i exactly counts[i] times."""
    total = sum(counts)
    seq = []

    def rec():
        if len(seq) == total:
            yield tuple(seq)
            return
        for sym, c in enumerate(counts):
            if c:
                counts[sym] -= 1
                seq.append(sym)
                yield from rec()
                seq.pop()
                counts[sym] += 1

    yield from rec()


@lru_cache(maxsize=None)
def prufer_free_trees(n):
    """One edge list per isomorphism class, by Prüfer decoding plus dedup.

    Every class has a labeling whose degrees do not increase with the label,
    and such a labeling's Prüfer sequence uses label i no more often than
    label i-1; only those sequences are decoded.  Cached, so treat the
    result as read-only.
    """
    if n == 1:
        return [[]]
    if n == 2:
        return [[(0, 1)]]
    seen = {}
    for part in _partitions(n - 2, n - 2, n):
        counts = list(part) + [0] * (n - len(part))
        for seq in _distinct_perms(counts):
            edges = prufer_decode(seq, n)
            key = all_rootings_form(n, edges)
            seen.setdefault(key, edges)
    return list(seen.values())


def otter_free_tree_counts(limit):
    """Free-tree counts 1..limit from the rooted-tree Euler transform."""
    rooted = [0, 1]
    for m in range(1, limit):
        # a(m+1) = (1/m) * sum_{k=1}^{m} (sum_{d | k} d a(d)) a(m-k+1)
        s = 0
        for k in range(1, m + 1):
            c = sum(d * rooted[d] for d in range(1, k + 1) if k % d == 0)
            s += c * rooted[m - k + 1]
        rooted.append(s // m)
    out = []
    for n in range(1, limit + 1):
        conv = sum(rooted[i] * rooted[n - i] for i in range(1, n))
        if n % 2 == 0:
            conv -= rooted[n // 2]
        out.append(rooted[n] - conv // 2)
    return out


def isomorphic_bruteforce(n, edges_a, edges_b):
    if len(edges_a) != len(edges_b):
        return False
    target = {frozenset(e) for e in edges_b}
    for perm in permutations(range(n)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in edges_a):
            return True
    return False
