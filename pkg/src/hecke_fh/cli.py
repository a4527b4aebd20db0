"""
Command-line interface: ``hecke-fh <verb> [options]``.

Exit codes: 0 success, 1 a verification failed, 2 usage error,
3 a resource bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import combinatorics as cb
from . import composed as dc
from . import fh_constants as fh
from . import hecke as hk
from . import symfunc as sf
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _partition(text: str | None, flag: str):
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return cb.parse_partition(text)
    except (ValueError, cb.CombinatoricsError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _composition(text: str | None):
    if text is None or text == "":
        return ()
    try:
        return cb.check_composition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--c: {exc}") from exc


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 1:
        raise UsageError("--n must be positive")
    if args.n > args.max_n:
        raise hk.BoundExceeded(f"n={args.n} exceeds the compute bound {args.max_n}")
    return args.n


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _label(p) -> str:
    return cb.render_partition(p) or "0"


# ---------------------------------------------------------------------------

def cmd_basis(args) -> int:
    n = _need_n(args)
    if args.kind == "generic-norms":
        comps = [_composition(args.c)] if args.c is not None else (
            [()] + [c for k in range(1, n + 1) for c in cb.compositions(k)])
        items = [(c, dc.generic_norm(c, n)) for c in comps]
        payload = [{"c": list(c), "terms": x.to_json()} for c, x in items]
        lines = [f"M_({cb.render_composition(c)}),{n} = {x}" for c, x in items]
    else:
        make = hk.norm if args.kind == "norms" else hk.geck_rouquier
        prefix = "N" if args.kind == "norms" else "Gamma"
        items = [(lam, make(lam, args.max_n)) for lam in cb.partitions(n)]
        payload = [{"lambda": list(lam), "terms": x.to_json()} for lam, x in items]
        lines = [f"{prefix}_{_label(lam)} = {x}" for lam, x in items]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_mult(args) -> int:
    n = _need_n(args)
    if args.x is not None or args.y is not None:
        if args.x is None or args.y is None:
            raise UsageError("--x and --y go together")
        try:
            x, y = hk.parse_element(n, args.x), hk.parse_element(n, args.y)
        except (ValueError, cb.CombinatoricsError) as exc:
            raise UsageError(str(exc)) from exc
        prod = x * y
        _emit(args, {"n": n, "terms": prod.to_json()}, [str(prod)])
        return EXIT_OK
    lam, mu = _partition(args.lam, "--lambda"), _partition(args.mu, "--mu")
    if args.kind == "norms":
        x, y = hk.norm_completed(lam, n, args.max_n), hk.norm_completed(mu, n, args.max_n)
        coords = fh.norm_coordinates(x * y) if not (x.is_zero() or y.is_zero()) else {}
        prefix = "N"
    else:
        coords = fh.a_constants_at_n(lam, mu, n, "direct", args.max_n)
        prefix = "Gamma"
    payload = {"n": n, "basis": args.kind,
               "entries": [{"label": list(k), "coeff": v.to_json()} for k, v in coords.items()]}
    lines = [f"({v})·{prefix}_{_label(k)}" for k, v in coords.items()]
    _emit(args, payload, lines or ["0"])
    return EXIT_OK


def _extra_nodes(table: fh.ATable, k: int, max_n: int) -> list:
    lo = max(sum(table.lam) + len(table.lam), sum(table.mu) + len(table.mu), 1)
    return list(range(max(lo, max_n - k + 1), max_n + 1))[-k:] if k > 0 else []


def cmd_constants(args) -> int:
    lam, mu = _partition(args.lam, "--lambda"), _partition(args.mu, "--mu")
    if args.kind == "g":
        table = fh.g_constants(lam, mu, bound=args.max_n)
        payload = table.to_json()
        lines = [f"g^{_label(nu)} = {v}" for nu, v in table.entries.items()]
        lines.append(f"levels {table.levels}, onset {table.onset}")
        _emit(args, payload, lines)
        return EXIT_OK
    table = fh.cached_a_polynomials(lam, mu, args.cache_dir, args.max_n)
    payload = {"table": table.to_json()}
    lines = [f"a^{_label(nu)}(n) = {p}" for nu, p in table.entries.items()]
    code = EXIT_OK
    if args.verify_extra:
        nodes = _extra_nodes(table, args.verify_extra, args.max_n)
        report = fh.verify_theorem1(lam, mu, nodes, table, args.max_n, args.jobs)
        payload["report"] = report.to_json()
        lines.append(f"held-out check at n={nodes}: {'all match' if report.all_match else 'MISMATCH'}")
        code = EXIT_OK if report.all_match else EXIT_FAIL
    _emit(args, payload, lines)
    return code


def cmd_verify(args) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    checks = [(s, c) for s in suites for c in run_suite(s, args.max_n)]
    ok = all(c.ok for _, c in checks)
    payload = {"max_n": args.max_n, "pass": ok,
               "checks": [dict(suite=s, **c.to_json()) for s, c in checks]}
    lines = [f"{'PASS' if c.ok else 'FAIL'}  [{s}] {c.name}" + (f"  ({c.detail})" if c.detail else "")
             for s, c in checks]
    lines.append("all checks passed" if ok else "some checks FAILED")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_transition(args) -> int:
    if args.n is None or args.n < 0:
        raise UsageError("--n is required")
    mat = sf.m2e_matrix(args.n) if args.direction == "m2e" else sf.e2m_matrix(args.n)
    data = mat.to_json()
    width = max([len(x) for x in data["labels"]] + [4])
    lines = [" " * (width + 2) + " ".join(f"{x:>{width}}" for x in data["labels"])]
    for lab, row in zip(data["labels"], data["rows"]):
        lines.append(f"{lab:>{width}}: " + " ".join(f"{v:>{width}}" for v in row))
    _emit(args, data, lines)
    return EXIT_OK


def cmd_cache(args) -> int:
    root = fh.cache_dir(args.cache_dir)
    if args.action == "clear":
        count = fh.clear_cache(args.cache_dir)
        _emit(args, {"removed": count, "dir": str(root)}, [f"removed {count} file(s) from {root}"])
    elif args.action == "list":
        files = sorted(p.name for p in root.glob("*.json")) if root.is_dir() else []
        _emit(args, {"dir": str(root), "files": files}, files or [f"(empty) {root}"])
    else:
        _emit(args, {"dir": str(root)}, [str(root)])
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-n", type=int, default=hk.COMPUTE_BOUND,
                        help="ceiling on n for Hecke algebra work (default %(default)s)")
    common.add_argument("--cache-dir", default=None,
                        help="table cache directory (overrides HECKE_FH_CACHE)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for per-n checks")

    parser = argparse.ArgumentParser(
        prog="hecke-fh",
        description="Hecke algebra centers and Farahat-Higman structure constants.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("basis", parents=[common], help="print a basis of the center")
    p.add_argument("kind", choices=("norms", "gamma", "generic-norms"))
    p.add_argument("--n", type=int)
    p.add_argument("--c", help="composition for generic-norms, e.g. 2,1")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("mult", parents=[common],
                       help="multiply T-basis elements or completed central classes")
    p.add_argument("kind", nargs="?", choices=("gamma", "norms"), default="gamma")
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--x", help="element as 'perm:exp=coeff;exp=coeff, perm, ...'")
    p.add_argument("--y")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("constants", parents=[common], help="g or a structure-constant tables")
    p.add_argument("kind", choices=("g", "a"))
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--verify-extra", type=int, default=0, metavar="K",
                   help="recompute the a-table directly at K extra nodes")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("verify", parents=[common], help="run self-check suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transition", parents=[common], help="E2M or M2E matrix")
    p.add_argument("--n", type=int)
    p.add_argument("--direction", choices=("e2m", "m2e"), default="m2e")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the table cache")
    p.add_argument("action", choices=("path", "list", "clear"))
    p.set_defaults(func=cmd_cache)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hecke-fh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except hk.BoundExceeded as exc:
        print(f"hecke-fh: resource bound: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (fh.ConstantsError, ArithmeticError) as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
