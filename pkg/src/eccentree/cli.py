"""Command-line entry point (``eccentree`` or ``python -m eccentree``)."""
from __future__ import annotations

import argparse
import json
import os
import sys

from .enumeration import canonical_code, count_free_trees, filter_class, free_trees
from .errors import TreeError
from .families import FamilySpec
from .formats import read_tree_file, to_graph6, write_edgelist
from .harness import (
    FUZZ_KINDS,
    THEOREMS,
    all_pass,
    extremal_search,
    fuzz_transforms,
    report_emit,
    verify_range,
)
from .invariants import all_invariants, decimal_string, format_rational
from .parameters import ParamClass
from .transforms import MoveKind, apply_transform


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.split(",") if x.strip()]


def _n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    return (int(lo), int(hi)) if sep else (int(lo), int(lo))


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_invariants(args) -> int:
    t = read_tree_file(_read(args.file))
    prof = t.profile
    print(f"n {t.n}")
    print(f"diameter {prof.diameter}")
    print(f"radius {prof.radius}")
    for kind, val in all_invariants(t).items():
        print(f"{kind.value} {format_rational(val)} {decimal_string(val)}")
    return 0


def cmd_family(args) -> int:
    spec = FamilySpec.parse(f"{args.name}:{args.params}")
    trees = spec.build()
    print("\n".join(write_edgelist(t) for t in trees), end="")
    return 0


def cmd_transform(args) -> int:
    t = read_tree_file(_read(args.input))
    roots = _ints(args.roots) if args.roots is not None else None
    out, meta = apply_transform(MoveKind(args.kind), t, args.source, args.target, roots)
    sys.stdout.write(write_edgelist(out))
    held = "yes" if meta["precondition_held"] else "no"
    extra = "".join(f" {k}={v}" for k, v in meta.items() if k not in ("kind", "precondition_held"))
    print(f"# kind={meta['kind']} precondition_held={held}{extra}")
    return 0


def cmd_enumerate(args) -> int:
    if args.count_only and args.cls is None:
        print(count_free_trees(args.n, max_n=args.max_n))
        return 0
    stream = free_trees(args.n, max_n=args.max_n)
    if args.cls:
        stream = filter_class(stream, ParamClass.parse(args.cls))
    if args.count_only:
        print(sum(1 for _ in stream))
        return 0
    for t in stream:
        if args.emit == "graph6":
            print(to_graph6(t))
        else:
            print(write_edgelist(t))
    return 0


def cmd_extremal(args) -> int:
    res = extremal_search(
        args.n, None if args.cls == "all" else ParamClass.parse(args.cls), args.objective, args.exclude,
        workers=args.workers, max_n=args.max_n,
    )
    print(f"class {res.cls or 'all'} n={res.n} objective={res.objective.value} size={res.class_size}")
    if res.value is None:
        print("empty class")
        return 0
    print(f"value {format_rational(res.value)} {decimal_string(res.value)}")
    print(f"witnesses {len(res.witnesses)}")
    for t in res.witness_trees:
        print(f"# code {canonical_code(t).hex()}")
        print(write_edgelist(t))
    return 0


def cmd_verify(args) -> int:
    lo, hi = _n_range(args.n)
    params = _ints(args.params) or None
    reports = verify_range(
        args.theorem, lo, hi, params,
        workers=args.workers, max_n=args.max_n, trials=args.trials, seed=args.seed,
    )
    sys.stdout.buffer.write(report_emit(reports, args.format))
    sys.stdout.flush()
    return 0 if reports and all_pass(reports) else 1


def cmd_fuzz(args) -> int:
    s = fuzz_transforms(args.kind, args.trials, args.seed, n_min=args.n_min, n_max=args.n_max,
                        require_held=args.require_held)
    out = dict(kind=s.kind, **s.as_dict(), flag_mismatch=s.flag_mismatch, violations=s.violations[:10])
    print(json.dumps(out, indent=2))
    return 0 if s.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eccentree", description="Exact eccentricity invariants of trees.")
    p.add_argument("--max-n", type=int, default=int(os.environ.get("ECCENTREE_MAX_N", "20")),
                   help="largest n the enumerator accepts (env ECCENTREE_MAX_N)")
    p.add_argument("--workers", type=int, default=int(os.environ.get("ECCENTREE_WORKERS", "1")),
                   help="processes for class searches (env ECCENTREE_WORKERS)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="all invariants of one tree (edge list or graph6; - for stdin)")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("family", help="build a named family member")
    s.add_argument("--name", required=True)
    s.add_argument("--params", default="", help="comma separated; double spiders use L1,L2|R1,R2")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("transform", help="apply one grafting rewrite")
    s.add_argument("--kind", required=True, choices=[k.value for k in MoveKind])
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--from", dest="source", type=int)
    s.add_argument("--to", dest="target", type=int)
    s.add_argument("--roots")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("enumerate", help="all free trees on N vertices")
    s.add_argument("n", type=int)
    s.add_argument("--class", dest="cls")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--emit", choices=["graph6", "edgelist"], default="graph6")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("extremal", help="extremal REE over a class")
    s.add_argument("n", type=int)
    s.add_argument("--class", dest="cls", required=True, help="SELECTOR=ARGS, or 'all'")
    s.add_argument("--objective", choices=["max", "min"], default="max")
    s.add_argument("--exclude", choices=["cnd", "tndpq"])
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("verify", help="check a theorem over a range of n")
    s.add_argument("theorem", type=str.upper, choices=THEOREMS)
    s.add_argument("--n", required=True, help="A or A..B")
    s.add_argument("--params")
    s.add_argument("--format", choices=["json", "csv", "text"], default="text")
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=42)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("fuzz", help="random monotonicity checks of a rewrite")
    s.add_argument("kind", choices=FUZZ_KINDS)
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--n-min", type=int, default=4)
    s.add_argument("--n-max", type=int, default=16)
    s.add_argument("--require-held", action="store_true",
                   help="keep drawing until TRIALS applications satisfy the hypothesis")
    s.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TreeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
