"""Command-line front end.

Exit codes: 0 success, 1 a ``verify`` check failed, 2 bad input,
3 degenerate forbidden set (capacity undefined), 4 resource guard tripped,
5 internal invariant violated.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
from typing import Sequence, TextIO

from . import specfile
from .capacity import capacity, capacity_spectral
from .checks import FAIL, run_checks
from .cluster import cluster_genfun
from .errors import (
    DegenerateError,
    ExactDivisionError,
    InputError,
    InternalError,
    NoRootError,
    ResourceError,
)
from .nonoverlap import DEFAULT_SEARCH_BUDGET, levenshtein_bound, max_variable_length_code
from .randomsets import random_reduced_set
from .series import DEFAULT_BRUTE_BUDGET, iter_counts, recurrence_from_genfun
from .words import FAMILIES

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DEGENERATE, EXIT_RESOURCE, EXIT_INTERNAL = range(6)


def _eps(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError("eps must lie in (0, 1)")
    return v


def _add_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--input", metavar="FILE", help="constraint spec file (JSON)")
    g.add_argument("--spec", metavar="JSON", help="inline constraint spec")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gjcodes",
        description="Exact counts and capacities of forbidden-substring constrained codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genfun", help="canonical T/S and the count recurrence")
    _add_input(p)
    _add_format(p)

    p = sub.add_parser("count", help="table of N_F(n)")
    _add_input(p)
    _add_format(p)
    p.add_argument("--n", type=int, help="emit n = 0..N (or only N with --only)")
    p.add_argument("--n-from", type=int)
    p.add_argument("--n-to", type=int)
    p.add_argument("--only", action="store_true", help="with --n, emit just N(n)")

    p = sub.add_parser("capacity", help="capacity with a guaranteed error bound")
    _add_input(p)
    _add_format(p)
    p.add_argument("--eps", type=_eps, default=1e-6)

    p = sub.add_parser("verify", help="cross-check cluster, brute force and transfer matrix")
    _add_input(p, required=False)
    _add_format(p)
    p.add_argument("--eps", type=_eps, default=1e-9)
    p.add_argument("--n", type=int, default=16, help="largest n compared")
    p.add_argument("--budget", type=int, default=DEFAULT_BRUTE_BUDGET, help="brute-force budget")
    p.add_argument("--random", type=int, metavar="K", help="also check K random reduced sets")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--q", type=int, nargs="+", default=[2, 3], help="alphabet sizes for --random")

    p = sub.add_parser("bound-nonoverlap", help="bound on variable-length non-overlapping codes")
    _add_format(p)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--search", action="store_true", help="also compute the exact maximum")
    p.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    p.add_argument("--min-length", type=int, choices=(1, 2), default=1)

    p = sub.add_parser("families", help="list the named constraint families")
    _add_format(p)
    return parser


def _load(args) -> specfile.ForbiddenSet:
    return specfile.load(args.input) if args.input else specfile.loads(args.spec)


def _emit(out: TextIO, args, doc, text: str) -> None:
    if args.format == "json":
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_genfun(args, out: TextIO) -> int:
    F = _load(args)
    _, f = cluster_genfun(F)
    rec = recurrence_from_genfun(f)
    doc = {"genfun": f.to_json(), "recurrence": {"a": list(rec.a), "b": list(rec.b)}}
    text = f"T(x) = {f.T}\nS(x) = {f.S}\nrecurrence: {rec.describe()}"
    _emit(out, args, doc, text)
    return EXIT_OK


def cmd_count(args, out: TextIO) -> int:
    if args.n is not None:
        if args.n_from is not None or args.n_to is not None:
            raise InputError("use either --n or --n-from/--n-to")
        lo, hi = (args.n, args.n) if args.only else (0, args.n)
    elif args.n_to is not None:
        lo, hi = (args.n_from or 0), args.n_to
    else:
        raise InputError("count needs --n or --n-to")
    if lo < 0 or hi < lo:
        raise InputError(f"bad range n = {lo}..{hi}")
    F = _load(args)
    _, f = cluster_genfun(F)
    # rows are written as they are produced; only the recurrence window is kept
    for n, v in enumerate(iter_counts(f)):
        if n > hi:
            break
        if n >= lo:
            if args.format == "json":
                out.write(json.dumps({"n": n, "N": v}) + "\n")
            else:
                out.write(f"{n}\t{v}\n")
    return EXIT_OK


def cmd_capacity(args, out: TextIO) -> int:
    F = _load(args)
    _, f = cluster_genfun(F)
    try:
        c1 = capacity(f, args.eps)
    except DegenerateError as exc:
        _emit(out, args, {"status": "degenerate", "detail": str(exc)},
              f"capacity undefined: {exc}")
        return EXIT_DEGENERATE
    doc = {"cluster": c1.to_json()}
    lines = [f"cluster:  {c1.value:.10f} +- {c1.eps:.1e}"]
    try:
        c2 = capacity_spectral(F, args.eps)
        doc["spectral"] = c2.to_json()
        lines.append(f"spectral: {c2.value:.10f} +- {c2.eps:.1e}")
    except ResourceError as exc:
        doc["spectral"] = {"status": "skipped", "detail": str(exc)}
        lines.append(f"spectral: skipped ({exc})")
    _emit(out, args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    targets = []
    if args.input or args.spec:
        targets.append(("input", _load(args)))
    if args.random:
        rng = random.Random(args.seed)
        for i in range(args.random):
            q = args.q[i % len(args.q)]
            targets.append((f"random[{i}]", random_reduced_set(rng, q)))
    if not targets:
        raise InputError("verify needs --input/--spec or --random K")
    failed = False
    reports = []
    for label, F in targets:
        checks = run_checks(F, args.n, args.eps, args.budget)
        failed |= any(c.status == FAIL for c in checks)
        reports.append({"set": label, "forbidden": F.strings(), "q": F.q,
                        "checks": [c.to_json() for c in checks]})
        if args.format == "text":
            out.write(f"{label}: q={F.q} {F.strings()}\n")
            for c in checks:
                out.write(f"  {c.status:4}  {c.name}: {c.detail}\n")
    if args.format == "json":
        _emit(out, args, {"ok": not failed, "results": reports}, "")
    else:
        out.write("all checks passed\n" if not failed else "SOME CHECKS FAILED\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bound(args, out: TextIO) -> int:
    rep = levenshtein_bound(args.q, args.n)
    doc = rep.to_json()
    text = f"bound C({args.q}, <={args.n}) <= {rep.bound} = {float(rep.bound):.6f}, floor {rep.floor}"
    if args.search:
        res = max_variable_length_code(args.q, args.n, args.budget, args.min_length)
        doc["search"] = res.to_json() | {"min_length": args.min_length}
        text += f"\nexhaustive maximum {res.size} (lengths {args.min_length}..{args.n}): {res.witness.strings()}"
    _emit(out, args, doc, text)
    return EXIT_OK


def cmd_families(args, out: TextIO) -> int:
    doc = {}
    lines = []
    for name, cls in FAMILIES.items():
        params = [f.name for f in dataclasses.fields(cls)]
        summary = (cls.__doc__ or "").strip().splitlines()[0] if cls.__doc__ else ""
        doc[name] = {"params": params, "summary": summary}
        lines.append(f"{name}({', '.join(params)})  {summary}")
    _emit(out, args, doc, "\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "genfun": cmd_genfun,
    "count": cmd_count,
    "capacity": cmd_capacity,
    "verify": cmd_verify,
    "bound-nonoverlap": cmd_bound,
    "families": cmd_families,
}


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except DegenerateError as exc:
        err.write(f"degenerate: {exc}\n")
        return EXIT_DEGENERATE
    except ResourceError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (InternalError, ExactDivisionError, NoRootError) as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
