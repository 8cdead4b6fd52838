"""Command-line interface.

Exit codes: 0 solved/verified, 1 usage error, 2 unresolved, 3 verification
failure, 4 parse error.  Results go to stdout, progress to stderr and
certificates to files.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import bounds
from .certificate import Certificate, ParseError, certificate_failure, parse_certificate
from .construct import circulant_witness, polycirculant_search
from .graph import GraphError, decode_graph
from .search import CORE_CAP, EXTENDED_CAP, Problem, compute_number, default_cap, find_witness, violation

OK, USAGE, UNRESOLVED, FAILED, PARSE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as "unresolved"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _real(s: str) -> float:
    """A positive real; ``e^X`` is accepted for exp(X)."""
    t = s.strip()
    try:
        v = math.exp(float(t[2:])) if t.startswith("e^") else float(t)
    except (ValueError, OverflowError):
        raise argparse.ArgumentTypeError(f"not a real number: {s!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError("constants must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="irramsey", description="Exact search and bound checks for irredundant Ramsey numbers.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def problem_flags(p, required=True):
        p.add_argument("--kind", choices=["s", "t", "r"], required=required, help="problem kind")
        p.add_argument("--m", type=int, default=3, help="blue parameter (default 3)")
        p.add_argument("--n", type=int, required=required, help="red parameter")

    def run_flags(p):
        p.add_argument("--tier", choices=["core", "extended"], default="core",
                       help=f"core caps searches at N <= {CORE_CAP}, extended at N <= {EXTENDED_CAP} (default core)")
        p.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
        p.add_argument("--budget", type=float, default=None, help="wall-clock seconds before giving up (default none)")
        p.add_argument("--out", type=Path, default=Path("."), help="directory for certificates (default .)")

    p = sub.add_parser("search", help="compute the number and write both certificates")
    problem_flags(p)
    run_flags(p)
    p.add_argument("--order", type=int, default=None, help="search cap N (default: the tier cap)")

    for name, what in (("witness", "find a good coloring on --order vertices"),
                       ("exhaust", "show there is no good coloring on --order vertices")):
        p = sub.add_parser(name, help=what)
        problem_flags(p)
        run_flags(p)
        p.add_argument("--order", type=int, required=True, help="number of vertices")
        if name == "witness":
            p.add_argument("--method", choices=["dfs", "circulant", "polycirculant"], default="dfs",
                           help="dfs: first graph in generation order; circulant: scan of circulant graphs; "
                                "polycirculant: seeded local search over Z_7 orbits, t(3,n) only (default dfs)")
            p.add_argument("--seed", type=int, default=1, help="polycirculant seed (default 1)")

    p = sub.add_parser("check", help="evaluate the good-coloring predicate on a graph file")
    p.add_argument("path", type=Path, help="IRX witness file or a single graph line")
    problem_flags(p, required=False)

    p = sub.add_parser("verify", help="re-verify a certificate file")
    p.add_argument("path", type=Path)
    p.add_argument("--fast", action="store_true", help="check exhaustion traces structurally only")

    p = sub.add_parser("bounds", help="run numeric inequality suites")
    p.add_argument("--suite", default="all", choices=["all", *bounds.SUITES],
                   help="suite name; 'all' runs every suite whose inequality is claimed to hold (default all)")
    p.add_argument("--variant", choices=["1", "1/4"], default="1", help="power of log n in the t(3,n) bound (default 1)")
    p.add_argument("--c1", type=_real, default=1.0, help="lower-bound constant (default 1)")
    p.add_argument("--c2", type=_real, default=math.exp(100), help="upper-bound constant (default e^100)")
    p.add_argument("--c4", type=_real, default=1.0, help="m = 4 Spencer constant (default 1)")
    p.add_argument("--json", action="store_true", help="one JSON object per row instead of a table")

    p = sub.add_parser("selftest", help="run the quick oracle and property checks")
    p.add_argument("--json", action="store_true", help="one JSON object per check")
    return ap


def _log(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _problem(args) -> Problem:
    try:
        return Problem(args.kind, args.m, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _cap(args, p: Problem) -> int:
    cap = args.order if args.order is not None else default_cap(p, args.tier)
    if cap < 1:
        raise UsageError("--order must be positive")
    limit = default_cap(p, args.tier)
    if cap > limit:
        raise UsageError(f"{args.tier} tier refuses N = {cap} for {p} (limit {limit})")
    if args.threads < 1:
        raise UsageError("--threads must be positive")
    return cap


def _write(cert: Certificate, out: Path) -> Path:
    out.mkdir(parents=True, exist_ok=True)
    path = cert.write(out / cert.filename())
    _log(f"wrote {path}")
    return path


def cmd_search(args) -> int:
    p = _problem(args)
    cap = _cap(args, p)
    _log(f"searching {p} up to N = {cap}")
    res = compute_number(p, cap, threads=args.threads, budget=args.budget)
    _log(f"{res.report.node_count} nodes in {res.report.elapsed:.2f}s; counts {[c for _, c in res.report.counts]}")
    if res.witness is not None:
        _write(res.witness, args.out)
    if res.solved:
        _write(res.exhaustion, args.out)
        print(res.value)
        return OK
    print(f"unresolved: {p} >= {res.lower_bound} ({res.reason})")
    return UNRESOLVED


def cmd_witness(args) -> int:
    p = _problem(args)
    cap = _cap(args, p)
    if args.method == "dfs":
        g = find_witness(p, cap, budget=args.budget)
    elif args.method == "circulant":
        found = circulant_witness(p, cap)
        g = found and found[1]
    else:
        if cap % 7:
            raise UsageError("polycirculant search needs --order divisible by 7")
        try:
            g = polycirculant_search(p, 7, cap // 7, seed=args.seed, budget=args.budget or 600.0)
        except ValueError as e:
            raise UsageError(str(e)) from None
    if g is None:
        print(f"no witness on {cap} vertices found")
        return UNRESOLVED
    _write(Certificate(p, "witness", cap, witness=g), args.out)
    print(f"{p} > {cap}")
    return OK


def cmd_exhaust(args) -> int:
    p = _problem(args)
    cap = _cap(args, p)
    res = compute_number(p, cap, threads=args.threads, budget=args.budget)
    if not res.solved:
        why = "time budget" if res.reason == "budget" else f"good colorings on {res.lower_bound - 1} vertices"
        print(f"unresolved: {why}")
        return UNRESOLVED
    _write(res.exhaustion, args.out)
    # an earlier zero also settles the requested order, by heredity
    print(f"{p} <= {res.value}")
    return OK


def cmd_check(args) -> int:
    text = args.path.read_text(encoding="ascii")
    if text.startswith("IRX"):
        cert = parse_certificate(text)
        if cert.claim != "witness":
            raise ParseError("check needs a witness certificate or a graph line", 1)
        g, p = cert.witness, cert.problem
        if args.kind is not None or args.n is not None:
            p = Problem(args.kind or p.kind, args.m, args.n if args.n is not None else p.n)
    else:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError("expected a single graph line", 1)
        try:
            g = decode_graph(lines[0])
        except GraphError as e:
            raise ParseError(str(e), 1) from None
        if args.kind is None or args.n is None:
            raise UsageError("a bare graph line needs --kind and --n")
        p = _problem(args)
    why = violation(p, g)
    if why is None:
        print(f"good coloring for {p} on {g.order} vertices")
        return OK
    print(f"not good for {p}: {why}")
    return FAILED


def cmd_verify(args) -> int:
    cert = parse_certificate(args.path.read_text(encoding="ascii"))
    why = certificate_failure(cert, fast=args.fast)
    if why is None:
        print(f"verified: {cert.header()}")
        return OK
    print(f"verification failed: {why}")
    return FAILED


def _params(args) -> bounds.BoundParams:
    v = 1.0 if args.variant == "1" else 0.25
    return bounds.BoundParams(c1=args.c1, c2=args.c2, c4=args.c4, log_exponent_variant=v)


def _fmt(x) -> str:
    return repr(float(x)) if isinstance(x, float) else str(x)


def cmd_bounds(args) -> int:
    params = _params(args)
    names = bounds.CLAIMED if args.suite == "all" else (args.suite,)
    ok = True
    if not args.json:
        print("n\tvalue\tbound\tmargin\tverdict")
    for name in names:
        res = bounds.run_suite(name, params)
        for c in res.checks:
            row = c.row()
            if args.json:
                print(json.dumps(row))
            else:
                print("\t".join(_fmt(row[k]) for k in ("n", "value", "bound", "margin", "verdict")))
        bad = sum(1 for c in res.checks if not c)
        _log(f"{name} (variant {params.variant_name}): {len(res.checks)} rows, {bad} failing")
        ok = ok and res.passed
    return OK if ok else FAILED


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    results = run_selftest(progress=_log)
    for name, passed, detail in results:
        if args.json:
            print(json.dumps({"check": name, "verdict": "PASS" if passed else "FAIL", "detail": detail}))
        else:
            print(f"{'PASS' if passed else 'FAIL'}\t{name}\t{detail}")
    return OK if all(r[1] for r in results) else FAILED


COMMANDS = {
    "search": cmd_search,
    "witness": cmd_witness,
    "exhaust": cmd_exhaust,
    "check": cmd_check,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "selftest": cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        _log(f"irramsey: error: {e}")
        return USAGE
    except ParseError as e:
        _log(f"irramsey: parse error: {e}")
        return PARSE
    except ValueError as e:
        _log(f"irramsey: error: {e}")
        return USAGE
    except OSError as e:
        _log(f"irramsey: {e}")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
