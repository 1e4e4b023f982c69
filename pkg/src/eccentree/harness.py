"""Extremal search, theorem checks, transformation fuzzing and report rendering."""
from __future__ import annotations

import csv
import io
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .enumeration import canonical_code, free_trees
from .errors import InfeasibleParams, NoOffPathPendant, UnknownTheorem, UnsupportedFormat
from .families import (
    balanced_spider,
    c_n_d_family,
    closed_form,
    fig7_candidates,
    fig8_candidates,
    p_t_ab,
    s_nk_set,
    star_tree,
    t_n_beta,
    t_ndpq_family,
)
from .formats import write_edgelist
from .invariants import decimal_string, format_rational, ree
from .parameters import ParamClass, Selector, bipartition, diameter, domination, domination_number, matching, matching_number, pendants
from .transforms import (
    MoveKind,
    alpha_sites,
    alpha_transform,
    diametral_pendant_shift,
    pendant_regraft,
    rho_sites,
    rho_transform,
    theta_sites,
    theta_transform,
)
from .tree import Tree, prufer_to_tree

DEFAULT_WORKERS = int(os.environ.get("ECCENTREE_WORKERS", "1"))


class Objective(str, Enum):
    MAX = "max"
    MIN = "min"


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    VACUOUS = "VACUOUS"


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    cls: Optional[ParamClass]
    objective: Objective
    value: Optional[Fraction]
    witnesses: frozenset[bytes]
    class_size: int
    excluded: Optional[str] = None
    witness_trees: tuple[Tree, ...] = ()


# -- extremal search ---------------------------------------------------------

def exclusion_codes(name: Optional[str], n: int, c: Optional[ParamClass]) -> frozenset[bytes]:
    """Canonical codes of a named family to drop from the class.

    ``cnd`` is C_{n,d} with every split of its central pendants; ``tndpq`` is
    the family with pendants only at v_1 and v_{d-1}.
    """
    if name is None:
        return frozenset()
    if c is None or c.selector is not Selector.DIAMETER:
        raise InfeasibleParams(f"exclusion {name!r} needs a diameter class")
    d = c.args[0]
    if name == "cnd":
        trees = c_n_d_family(n, d)
    elif name == "tndpq":
        trees = t_ndpq_family(n, d)
    else:
        raise InfeasibleParams(f"unknown exclusion {name!r}")
    return frozenset(canonical_code(t) for t in trees)


def _search_part(n, c, objective, excluded, part, parts, max_n):
    sign = 1 if objective is Objective.MAX else -1
    best = None
    wit: dict[bytes, Tree] = {}
    for t in free_trees(n, part=part, parts=parts, max_n=max_n):
        if c is not None and not c.matches(t):
            continue
        val = ree(t)
        if best is not None and sign * (val - best) < 0:
            continue
        # codes are only needed for trees that could become witnesses
        code = canonical_code(t)
        if code in excluded:
            continue
        if best is None or val != best:
            best, wit = val, {}
        wit[code] = t
    return best, wit


def _class_size(n, c, excluded, part, parts, max_n):
    count = 0
    for t in free_trees(n, part=part, parts=parts, max_n=max_n):
        if (c is None or c.matches(t)) and (not excluded or canonical_code(t) not in excluded):
            count += 1
    return count


def _run_parts(fn, args, workers: int, max_n):
    if workers <= 1:
        return [fn(*args, 0, 1, max_n)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args, i, workers, max_n) for i in range(workers)]
        return [f.result() for f in futures]


def extremal_search(
    n: int,
    c: Optional[ParamClass],
    objective: Objective | str = Objective.MAX,
    exclude: Optional[str] = None,
    *,
    workers: Optional[int] = None,
    max_n: Optional[int] = None,
) -> ExtremalResult:
    """Exact optimum of REE over the class, with every tree that attains it.

    ``c=None`` searches all free trees on ``n`` vertices.
    """
    objective = Objective(objective)
    workers = DEFAULT_WORKERS if workers is None else max(1, workers)
    excluded = exclusion_codes(exclude, n, c)
    parts = _run_parts(_search_part, (n, c, objective, excluded), workers, max_n)
    sizes = _run_parts(_class_size, (n, c, excluded), workers, max_n)
    sign = 1 if objective is Objective.MAX else -1
    best = None
    wit: dict[bytes, Tree] = {}
    for val, w in parts:
        if val is None:
            continue
        if best is None or sign * (val - best) > 0:
            best, wit = val, dict(w)
        elif val == best:
            wit.update(w)
    codes = sorted(wit)
    return ExtremalResult(
        n=n,
        cls=c,
        objective=objective,
        value=best,
        witnesses=frozenset(codes),
        class_size=sum(sizes),
        excluded=exclude,
        witness_trees=tuple(wit[k] for k in codes),
    )


# -- transformation fuzzing --------------------------------------------------

@dataclass
class FuzzSummary:
    """Counts over one fuzz run; the three outcome counts cover held applications only."""

    kind: str
    applied: int = 0
    precondition_held: int = 0
    strict_increase: int = 0
    equal: int = 0
    decrease: int = 0
    flag_mismatch: int = 0
    violations: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "applied": self.applied,
            "precondition_held": self.precondition_held,
            "strict_increase": self.strict_increase,
            "equal": self.equal,
            "decrease": self.decrease,
        }

    @property
    def ok(self) -> bool:
        return not self.violations


FUZZ_KINDS = ("rho", "alpha", "theta", "shift", "regraft", "cor_path", "cor_join")


def _random_tree(rng: random.Random, lo: int, hi: int) -> Tree:
    n = rng.randint(lo, hi)
    if n < 3:
        return Tree.from_edges(n, [(0, 1)] if n == 2 else [])
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)])


def _pick_site(rng, t, sites, apply):
    sites = list(sites)
    if not sites:
        return None
    rng.shuffle(sites)
    first = None
    for s in sites:
        out, pre = apply(t, *s)
        if pre.held:
            return out, pre.held
        if first is None:
            first = (out, False)
    return first


_SITES = {
    "rho": (rho_sites, rho_transform),
    "alpha": (alpha_sites, alpha_transform),
    "theta": (theta_sites, theta_transform),
}


def _path_identify(h: Tree, u: int, length: int, at: int) -> Tree:
    """Path v_0..v_length with ``h`` glued to v_at through its vertex ``u``."""
    edges = [(i, i + 1) for i in range(length)]
    off = length + 1
    rename = {x: (at if x == u else off + x - (x > u)) for x in range(h.n)}
    edges += [(rename[a], rename[b]) for a, b in h.edges()]
    return Tree.from_edges(length + h.n, edges)


def _trial(kind: str, rng: random.Random, lo: int, hi: int):
    """One random instance: (before, after, precondition held, strict flag or None)."""
    if kind in _SITES:
        t = _random_tree(rng, lo, hi)
        finder, apply = _SITES[kind]
        got = _pick_site(rng, t, finder(t), apply)
        if got is None:
            return None
        return t, got[0], got[1], None
    if kind == "shift":
        t = _random_tree(rng, lo, hi)
        try:
            out, strict = diametral_pendant_shift(t)
        except NoOffPathPendant:
            return None
        return t, out, True, strict
    if kind == "regraft":
        t = _random_tree(rng, lo, hi)
        try:
            return t, pendant_regraft(t), True, None
        except NoOffPathPendant:
            return None
    if kind == "cor_path":
        # path with a graft H at v_m, l >= m+2 vertices beyond it; move H one step inward
        m = rng.randint(0, 3)
        el = rng.randint(m + 2, m + 6)
        hsize = rng.randint(2, max(2, hi - m - el))
        h = _random_tree(rng, hsize, hsize)
        u = rng.randrange(h.n)
        return _path_identify(h, u, m + el, m), _path_identify(h, u, m + el, m + 1), True, None
    if kind == "cor_join":
        # H1 + H2 joined by an edge u-v, versus u and v merged plus a pendant
        h1 = _random_tree(rng, 2, max(2, hi // 2))
        h2 = _random_tree(rng, 2, max(2, hi // 2))
        u, v = rng.randrange(h1.n), rng.randrange(h2.n)
        off = h1.n
        base = h1.edges() + [(a + off, b + off) for a, b in h2.edges()]
        joined = Tree.from_edges(h1.n + h2.n, base + [(u, v + off)])
        total = h1.n + h2.n - 1
        # h2 vertices other than v take ids off..total-1, v merges into u
        ids = {x: (u if x == v else off + x - (x > v)) for x in range(h2.n)}
        merged = h1.edges() + [(ids[a], ids[b]) for a, b in h2.edges()] + [(u, total)]
        return joined, Tree.from_edges(total + 1, merged), True, None
    raise UnknownTheorem(f"unknown fuzz kind {kind!r}")


def fuzz_transforms(
    kind: MoveKind | str,
    trials: int,
    seed: int,
    *,
    n_min: int = 4,
    n_max: int = 16,
    require_held: bool = False,
    max_attempts: Optional[int] = None,
) -> FuzzSummary:
    """Random instances replayable from (seed, trial index).

    With ``require_held`` the run continues until ``trials`` applications
    satisfied the hypothesis (or ``max_attempts`` instances were drawn).
    """
    kind = kind.value if isinstance(kind, MoveKind) else str(kind).lower()
    if trials < 1:
        raise InfeasibleParams("trials must be >= 1")
    summary = FuzzSummary(kind)
    cap = max_attempts if max_attempts is not None else (50 * trials if require_held else trials)
    decreasing = kind == "regraft"
    i = 0
    while i < cap:
        if require_held and summary.precondition_held >= trials:
            break
        rng = random.Random(f"{seed}:{i}")
        i += 1
        got = _trial(kind, rng, n_min, n_max)
        if got is None:
            continue
        before, after, held, strict = got
        summary.applied += 1
        if not held:
            continue
        summary.precondition_held += 1
        a, b = ree(before), ree(after)
        if b > a:
            summary.strict_increase += 1
        elif b == a:
            summary.equal += 1
        else:
            summary.decrease += 1
        bad = (b > a) if decreasing else (b < a if kind == "shift" else b <= a)
        if strict is not None and (b == a) == strict:
            summary.flag_mismatch += 1
            bad = True
        if bad:
            summary.violations.append(f"trial {i - 1}: " + write_edgelist(before).replace("\n", " ").strip())
    return summary


# -- theorem verification ----------------------------------------------------

@dataclass
class TheoremReport:
    theorem: str
    params: tuple[int, ...]
    verdict: Verdict
    claimed_value: Optional[Fraction] = None
    found_value: Optional[Fraction] = None
    family_match: Optional[bool] = None
    class_size: int = 0
    witnesses: tuple[bytes, ...] = ()
    claimed: tuple[bytes, ...] = ()
    detail: str = ""
    evidence: tuple[str, ...] = ()


ENUMERATION_THEOREMS = ("T41", "T42", "T43", "T44", "T45", "T46", "T47", "T48")
FUZZ_THEOREMS = {"T21": "regraft", "T31": "rho", "T32": "cor_path", "T33": "alpha",
                 "T34": "cor_join", "T35": "theta", "T36": "shift"}
THEOREMS = ("T21", "T31", "T32", "T33", "T34", "T35", "T36") + ENUMERATION_THEOREMS


def feasible_params(theorem: str, n: int) -> list[tuple[int, ...]]:
    """Default parameter grid for one n."""
    key = theorem.upper()
    if key == "T41":
        return [(k,) for k in range(3, n - 1)]
    if key in ("T42", "T44", "T45"):
        return [(b,) for b in range(1, n // 2 + 1)]
    if key == "T46":
        return [(p, n - p) for p in range(3, n // 2 + 1)]
    if key in ("T47", "T48"):
        return [(d,) for d in range(4, n - 2)]
    if key in THEOREMS:
        return [()]
    raise UnknownTheorem(f"unknown theorem {theorem!r}")


def _double_stars(n: int) -> list[Tree]:
    return [p_t_ab(2, a, n - 2 - a) for a in range(1, (n - 2) // 2 + 1)]


def _claim_for(key: str, n: int, params: tuple[int, ...]) -> tuple[ParamClass, Objective, Optional[str], list[Tree], Optional[Fraction]]:
    """(class, objective, exclusion, claimed trees, claimed value or None)."""
    if key == "T41":
        (k,) = params
        if not 3 <= k <= n - 2:
            raise InfeasibleParams(f"T41 needs 3 <= k <= n-2, got k={k}")
        return pendants(k), Objective.MAX, None, [balanced_spider(n, k)] + s_nk_set(n, k), None
    if key in ("T42", "T45"):
        (b,) = params
        if not 1 <= b <= n // 2:
            raise InfeasibleParams(f"{key} needs 1 <= parameter <= n/2")
        cls = matching(b) if key == "T42" else domination(b)
        if b == 1:
            return cls, Objective.MAX, None, [star_tree(n)], closed_form("T42I", [n])
        if b == 2:
            return cls, Objective.MAX, None, _double_stars(n), closed_form("T42II", [n])
        name = "T42III" if key == "T42" else "T45III"
        return cls, Objective.MAX, None, [t_n_beta(n, b)], closed_form(name, [n, b])
    if key == "T46":
        p, q = sorted(params)
        if p + q != n or p <= 2:
            raise InfeasibleParams(f"T46 needs 2 < p <= q with p+q = n, got ({p}, {q}) at n={n}")
        return bipartition(p, q), Objective.MAX, None, [p_t_ab(2, p - 1, q - 1)], closed_form("T46", [n])
    if key == "T47":
        (d,) = params
        return diameter(d), Objective.MAX, "cnd", fig7_candidates(n, d), closed_form("T47", [n, d])
    if key == "T48":
        (d,) = params
        return diameter(d), Objective.MIN, "tndpq", fig8_candidates(n, d), closed_form("T48", [n, d])
    raise UnknownTheorem(key)


def _edge_evidence(trees: Iterable[Tree]) -> tuple[str, ...]:
    return tuple(write_edgelist(t).replace("\n", " ").strip() for t in trees)


def _lemma_gamma_beta(n: int, max_n, workers) -> TheoremReport:
    bad = [t for t in free_trees(n, max_n=max_n) if domination_number(t) > matching_number(t)]
    size = sum(1 for _ in free_trees(n, max_n=max_n))
    return TheoremReport(
        "T43", (), Verdict.FAIL if bad else Verdict.PASS, class_size=size,
        detail=f"{len(bad)} trees with domination > matching", evidence=_edge_evidence(bad[:5]),
    )


def _lemma_equal_on_maximizers(n: int, g: int, max_n, workers) -> TheoremReport:
    res = extremal_search(n, domination(g), Objective.MAX, workers=workers, max_n=max_n)
    if res.class_size == 0:
        return TheoremReport("T44", (g,), Verdict.VACUOUS, detail="empty class")
    bad = [t for t in res.witness_trees if matching_number(t) != g]
    return TheoremReport(
        "T44", (g,), Verdict.FAIL if bad else Verdict.PASS, found_value=res.value,
        class_size=res.class_size, witnesses=tuple(sorted(res.witnesses)),
        detail=f"{len(bad)} maximizers with matching != domination", evidence=_edge_evidence(bad),
    )


def verify_theorem(
    theorem: str,
    n: int,
    params: Sequence[int] = (),
    *,
    workers: Optional[int] = None,
    max_n: Optional[int] = None,
    trials: int = 10_000,
    seed: int = 42,
) -> TheoremReport:
    """Check one theorem instance against exhaustive enumeration (or fuzzing)."""
    key = theorem.upper()
    if key not in THEOREMS:
        raise UnknownTheorem(f"unknown theorem {theorem!r}")
    params = tuple(int(x) for x in params)
    if key in FUZZ_THEOREMS:
        s = fuzz_transforms(FUZZ_THEOREMS[key], trials, seed, n_min=min(4, n), n_max=n, require_held=True)
        verdict = Verdict.PASS if s.ok and s.precondition_held else (Verdict.VACUOUS if s.ok else Verdict.FAIL)
        return TheoremReport(
            key, params, verdict, class_size=s.applied,
            detail=" ".join(f"{k}={v}" for k, v in s.as_dict().items()) + f" flag_mismatch={s.flag_mismatch}",
            evidence=tuple(s.violations[:5]),
        )
    if key == "T43":
        return _lemma_gamma_beta(n, max_n, workers)
    if key == "T44":
        if len(params) != 1:
            raise InfeasibleParams("T44 takes the domination number")
        return _lemma_equal_on_maximizers(n, params[0], max_n, workers)
    expected = 2 if key == "T46" else 1
    if len(params) != expected:
        raise InfeasibleParams(f"{key} takes {expected} parameter(s), got {list(params)}")
    cls, objective, exclude, claimed_trees, claimed_value = _claim_for(key, n, params)
    claimed = tuple(sorted({canonical_code(t) for t in claimed_trees}))
    if claimed_value is None:
        claimed_value = ree(claimed_trees[0])
    res = extremal_search(n, cls, objective, exclude, workers=workers, max_n=max_n)
    if res.class_size == 0:
        return TheoremReport(key, params, Verdict.VACUOUS, claimed_value=claimed_value, claimed=claimed,
                             detail="empty class")
    found = tuple(sorted(res.witnesses))
    match = found == claimed
    ok = res.value == claimed_value and match
    evidence = () if ok else _edge_evidence(res.witness_trees)
    detail = ""
    if not match:
        extra = len(set(found) - set(claimed))
        missing = len(set(claimed) - set(found))
        detail = f"{extra} enumerated witnesses outside the claimed family, {missing} claimed trees not extremal"
    return TheoremReport(
        key, params, Verdict.PASS if ok else Verdict.FAIL,
        claimed_value=claimed_value, found_value=res.value, family_match=match,
        class_size=res.class_size, witnesses=found, claimed=claimed, detail=detail, evidence=evidence,
    )


def verify_range(
    theorem: str,
    n_lo: int,
    n_hi: int,
    params: Optional[Sequence[int]] = None,
    **kwargs,
) -> list[TheoremReport]:
    """Every n in the range; without ``params`` the default grid is used."""
    key = theorem.upper()
    out = []
    if key in FUZZ_THEOREMS:
        return [verify_theorem(key, n_hi, params or (), **kwargs)]
    for n in range(n_lo, n_hi + 1):
        grid = [tuple(params)] if params else feasible_params(key, n)
        for p in grid:
            if key == "T46" and sum(p) != n:
                continue
            try:
                out.append(verify_theorem(key, n, p, **kwargs))
            except InfeasibleParams as exc:
                out.append(TheoremReport(key, (n,) + tuple(p), Verdict.VACUOUS, detail=str(exc)))
    return out


# -- report rendering --------------------------------------------------------

FIELDS = (
    "theorem", "params", "verdict", "claimed_value", "claimed_decimal", "found_value",
    "found_decimal", "family_match", "class_size", "witnesses", "claimed", "detail", "evidence",
)


def _row(r: TheoremReport, n: Optional[int] = None) -> dict:
    def rat(x):
        return "" if x is None else format_rational(x)

    def dec(x):
        return "" if x is None else decimal_string(x)

    return {
        "theorem": r.theorem,
        "params": ",".join(map(str, r.params)),
        "verdict": r.verdict.value,
        "claimed_value": rat(r.claimed_value),
        "claimed_decimal": dec(r.claimed_value),
        "found_value": rat(r.found_value),
        "found_decimal": dec(r.found_value),
        "family_match": "" if r.family_match is None else ("yes" if r.family_match else "no"),
        "class_size": r.class_size,
        "witnesses": [c.hex() for c in r.witnesses],
        "claimed": [c.hex() for c in r.claimed],
        "detail": r.detail,
        "evidence": list(r.evidence),
    }


def report_emit(reports: Sequence[TheoremReport], fmt: str = "text") -> bytes:
    fmt = fmt.lower()
    rows = [_row(r) for r in reports]
    if fmt == "json":
        return (json.dumps(rows, indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            flat = dict(row)
            for k in ("witnesses", "claimed", "evidence"):
                flat[k] = ";".join(flat[k])
            w.writerow(flat)
        return buf.getvalue().encode()
    if fmt == "text":
        cols = ("theorem", "params", "verdict", "claimed_value", "found_value", "family_match", "class_size")
        table = [[str(row[c]) for c in cols] for row in rows]
        widths = [max([len(c)] + [len(t[i]) for t in table]) for i, c in enumerate(cols)]
        lines = ["  " + "  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        for row, cells in zip(rows, table):
            flag = "! " if row["verdict"] == "FAIL" else "  "
            lines.append(flag + "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
            if row["detail"]:
                lines.append("    " + row["detail"])
            for e in row["evidence"]:
                lines.append("    edges: " + e)
        return ("\n".join(lines) + "\n").encode()
    raise UnsupportedFormat(f"unsupported report format {fmt!r}")


def all_pass(reports: Iterable[TheoremReport]) -> bool:
    return all(r.verdict is Verdict.PASS for r in reports)
