"""Command-line interface.

Exit codes: 0 ok, 2 usage, 3 size guard, 4 verification failure,
5 methods disagree.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any, Sequence

from . import bench, eulerian, oracle, report, shelling, sigma, verify
from .errors import DomainError, ResourceError, limits

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_VERIFY = 4
EXIT_DISAGREE = 5

METHODS = {
    "tableaux": sigma.sigma_tableaux,
    "hpoly": sigma.sigma_hpoly,
    "oracle": oracle.sigma_oracle,
}


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(kind: str, message: str, **extra: Any) -> str:
    return report.dumps({"error": {"kind": kind, "message": message, **extra}})


def cmd_sum(args) -> int:
    n, s = args.n, args.s
    if args.method == "all":
        results, timings = {}, {}
        for name, fn in METHODS.items():
            if name == "oracle" and oracle.count_members(n, s) > limits().max_enum:
                print(f"oracle skipped: {oracle.count_members(n, s)} members exceed the enumeration guard",
                      file=sys.stderr)
                continue
            t0 = time.perf_counter()
            results[name] = fn(n, s)
            timings[name] = time.perf_counter() - t0
        for name, secs in timings.items():
            print(f"{name}: {secs * 1e3:.3f} ms", file=sys.stderr)
        first = next(iter(results.values()))
        if any(t != first for t in results.values()):
            detail = {name: [str(v) for v in t.entries] for name, t in results.items()}
            _emit(_error("disagreement", f"methods disagree for n={list(n)}, s={s}", results=detail), None)
            return EXIT_DISAGREE
        tensor, agreement = first, True
    else:
        t0 = time.perf_counter()
        tensor = METHODS[args.method](n, s)
        timings = {args.method: time.perf_counter() - t0}
        agreement = True
    if args.format == "json":
        doc = report.sum_document(n, s, args.method, tensor, agreement)
        if args.timings:
            doc["timings_s"] = {k: round(v, 6) for k, v in timings.items()}
        text = report.dumps(doc)
    elif args.format == "csv":
        text = report.tensor_csv(tensor)
    else:
        text = report.tensor_plain(tensor)
    _emit(text, args.out)
    return EXIT_OK


def cmd_eulerian(args) -> int:
    p = eulerian.check_multiplicity(args.p)
    if args.method == "brute":
        poly = eulerian.eulerian_poly_brute(p)
    else:
        poly = eulerian.eulerian_poly_closed(p)
    if args.format == "json":
        text = report.dumps({"p": list(p), "method": args.method,
                             "coefficients": report.poly_strings(poly), "degree": poly.degree})
    else:
        text = f"A_{list(p)}(t) = {poly}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_hvector(args) -> int:
    x = args.x
    f = shelling.f_vector(x)
    h = shelling.h_from_f(f)
    lemma_ok = shelling.verify_lemma_hpoly(x)
    if args.format == "json":
        text = report.dumps({"x": list(x), "f": [str(v) for v in f], "h": report.poly_strings(h),
                             "lemma_ok": lemma_ok})
    else:
        text = f"f = {list(f)}\nh(t) = {h}\nlemma_ok = {lemma_ok}\n"
    _emit(text, args.out)
    return EXIT_OK if lemma_ok else EXIT_VERIFY


def cmd_enumerate(args) -> int:
    n, s = args.n, args.s
    members = []
    for rt in oracle.row_tuples(n, s):
        t = oracle.row_tuple_to_tensor(rt, n)
        members.append({"rows": [list(r) for r in rt],
                        "support": [{"index": list(x), "value": str(t[x])} for x in t.support()]})
    if args.format == "json":
        text = report.dumps({"n": list(n), "s": s, "count": str(len(members)), "members": members})
    else:
        lines = [f"{len(members)} width-one tensors"]
        for m in members:
            lines.append("  " + " ".join(f"{tuple(e['index'])}x{e['value']}" for e in m["support"]))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    scope = verify.Scope(max_d=args.max_d, max_n=args.max_n, max_s=args.max_s, L=args.L)
    if args.corrupt_binomial:
        with verify.corrupted_binomial():
            results = verify.run_checks(scope, args.check)
    else:
        results = verify.run_checks(scope, args.check)
    passed = all(r.passed for r in results)
    if args.format == "json":
        text = report.dumps({"scope": vars(scope), "passed": passed, "checks": [r.to_json() for r in results]})
    else:
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases)" for r in results]
        for r in results:
            if r.counterexample is not None:
                lines.append(f"  {r.name}: {json.dumps(r.counterexample)}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_bench(args) -> int:
    grid = bench.DEFAULT_GRID if args.grid is None else bench.parse_grid(args.grid)
    try:
        rows = bench.run_bench(grid, warmup=args.warmup, repeat=args.repeat, include_oracle=args.include_oracle)
    except bench.DigestMismatch as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DISAGREE
    _emit(report.rows_csv(bench.CSV_COLUMNS, (r.cells() for r in rows)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="widthone", description="Sums of width-one tensors and supporting identities.")
    parser.add_argument("--max-entries", type=int, help="dense tensor size guard (env WIDTHONE_MAX_ENTRIES)")
    parser.add_argument("--max-enum", type=int, help="enumeration size guard (env WIDTHONE_MAX_ENUM)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "plain")):
        p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("sum", help="sum of all width-one tensors of shape n with entry sum s")
    p.add_argument("--n", type=int_list, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--method", choices=[*METHODS, "all"], default="tableaux")
    p.add_argument("--timings", action="store_true", help="embed wall times in the JSON output")
    common(p, ("json", "csv", "plain"))
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("eulerian", help="multiset Eulerian polynomial A_p(t)")
    p.add_argument("--p", type=int_list, required=True)
    p.add_argument("--method", choices=["closed", "brute"], default="closed")
    common(p)
    p.set_defaults(func=cmd_eulerian)

    p = sub.add_parser("hvector", help="f-vector and h-polynomial of the order complex of [x1]x...x[xd]")
    p.add_argument("--x", type=int_list, required=True)
    common(p)
    p.set_defaults(func=cmd_hvector)

    p = sub.add_parser("enumerate", help="list every width-one tensor of shape n with entry sum s")
    p.add_argument("--n", type=int_list, required=True)
    p.add_argument("--s", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the identity grid")
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-s", type=int, default=4)
    p.add_argument("--L", type=int, default=10)
    p.add_argument("--check", action="append", choices=list(verify.CHECKS), help="run only these checks")
    p.add_argument("--corrupt-binomial", action="store_true", help=argparse.SUPPRESS)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the tableaux and h-polynomial formulas (CSV)")
    p.add_argument("--grid", help='cells as "n1,n2:s1,s2;..."; empty string for no cells')
    p.add_argument("--warmup", type=int, default=1)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--include-oracle", action="store_true")
    p.add_argument("--out", help="write CSV to this path instead of stdout")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {"WIDTHONE_MAX_ENTRIES": args.max_entries, "WIDTHONE_MAX_ENUM": args.max_enum}
    saved = {k: os.environ.get(k) for k in overrides}
    for key, value in overrides.items():
        if value is not None:
            os.environ[key] = str(value)
    try:
        return args.func(args)
    except ResourceError as exc:
        sys.stdout.write(_error("guard", str(exc)))
        return EXIT_GUARD
    except ValueError as exc:
        sys.stdout.write(_error("domain", str(exc)))
        return EXIT_USAGE
    finally:
        for key, value in saved.items():
            if value is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = value


if __name__ == "__main__":
    sys.exit(main())
