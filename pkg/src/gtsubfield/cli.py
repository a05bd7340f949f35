"""Command-line front end: ``gtsubfield {cosets,run,reproduce,genmat}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .exponents import all_cosets
from .galois import FieldError, build_field
from .jobs import JobError, format_report, format_suite, genmat, load_job, run_job, run_suite


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _fail(err: JobError) -> int:
    sys.stderr.write(json.dumps(err.to_json()) + "\n")
    return 2


def cmd_cosets(args) -> int:
    try:
        field = build_field(args.p, args.s, args.modulus)
    except FieldError as exc:
        return _fail(JobError("bad_field", str(exc)))
    cosets = all_cosets(field, args.r)
    print(f"GF({field.p}^{field.s}) modulus {list(field.modulus)}  r={args.r}")
    for c in cosets:
        members = ", ".join(str(list(m)) if args.r > 1 else str(m[0]) for m in c.members)
        leader = list(c.leader) if args.r > 1 else c.leader[0]
        print(f"I_{leader}: {{{members}}}  n_b={c.size}")
    total = sum(c.size for c in cosets)
    n = field.order**args.r
    print(f"{len(cosets)} cosets; sum of n_b = {total} = (q-1)^r = {n}: {'ok' if total == n else 'MISMATCH'}")
    return 0 if total == n else 1


def cmd_run(args) -> int:
    try:
        job = load_job(args.job)
        if args.budget is not None:
            job.budget = args.budget
        report = run_job(job)
    except JobError as exc:
        return _fail(exc)
    if args.out:
        Path(args.out).write_text(_dump(report))
    if args.json:
        sys.stdout.write(_dump(report))
    else:
        print(format_report(report))
    return 0


def cmd_genmat(args) -> int:
    try:
        code = genmat(load_job(args.job), args.which)
    except JobError as exc:
        return _fail(exc)
    if args.format == "json":
        sys.stdout.write(_dump(code.to_json()))
    else:
        print(code.to_text())
    return 0


def cmd_reproduce(args) -> int:
    start = time.perf_counter()
    rows = run_suite(args.suite, args.budget)
    if args.json:
        sys.stdout.write(_dump(rows))
    else:
        print(format_suite(rows))
        print(f"elapsed {time.perf_counter() - start:.1f}s")
    return 0 if all(r["pass"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtsubfield", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cosets", help="list the cyclotomic cosets of {0..q-2}^r")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--modulus", type=lambda t: [int(c) for c in t.split(",")], default=None,
                   help="comma-separated coefficients, lowest degree first")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("run", help="build the codes of a JSON job file")
    p.add_argument("--job", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", default=None, help="also write the JSON report here")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("reproduce", help="recompute the bundled code-parameter tables")
    p.add_argument("--suite", choices=["rs16", "gf8", "gf9", "all"], default="all")
    p.add_argument("--budget", type=int, default=1 << 28)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("genmat", help="export a generator matrix")
    p.add_argument("--job", required=True)
    p.add_argument("--which", choices=["code", "subfield", "dual"], default="subfield")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_genmat)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
