"""Command-line entry point: ``addikit <subcommand> ...``.

Every run prints one JSON report on stdout (or a plain table with
``--format table``).  Exit status: 0 on success, 2 when a bound is infeasible
or an asserted result is falsified, 1 on usage, input or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from addikit import __version__, bounds
from addikit.additive_code import AdditiveCode
from addikit.config import enumeration_budget
from addikit.construction_a import (
    PartialSemifield,
    construct_a,
    construct_a_with_basis_change,
    desarguesian_partial_semifield,
    load_semifield,
)
from addikit.construction_b import ConstructionBParams, build_code_b, build_family
from addikit.errors import (
    AddikitError,
    BudgetExceeded,
    InternalInconsistency,
    RankDeficientCode,
)
from addikit.linalg import MatrixFq
from addikit.linear_code import LinearCode, NAMED_CODES, ghw_table_csv, load_code
from addikit.linearity import SubspaceFamily, certify_nonlinear, divisibility_precheck
from addikit.reproduce import CHECKS, run as run_checks
from addikit.tower import TowerContext

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker threads (results do not depend on it)")
    common.add_argument("--budget", type=int, default=None, help="enumeration cap (default: $ADDIKIT_BUDGET or 2^26)")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings in the report")

    parser = _Parser(prog="addikit", description="Additive codes from linear codes: constructions, bounds, certificates.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("construct-a", parents=[common], help="additive code from a linear code and a partial semifield")
    a.add_argument("--code", required=True, help=f"generator JSON file or one of {sorted(NAMED_CODES)}")
    a.add_argument("--h", type=int, required=True)
    a.add_argument("--semifield", help="partial semifield JSON (default: Desarguesian)")
    a.add_argument("--basis-change", help="nonsingular k x k matrix JSON {rows, cols, entries}")
    a.add_argument("--basis", type=_int_list, help="alternative e_1..e_h as comma-separated F_{q^h} reps")
    a.add_argument("--no-verify", action="store_true", help="skip the brute-force distance")

    b = sub.add_parser("construct-b", parents=[common], help="norm-trace additive code")
    for name in ("q", "s", "t", "h"):
        b.add_argument(f"--{name}", type=int, required=True)
    b.add_argument("--lambdas", type=_int_list, help="comma-separated F_{q^s} reps")
    b.add_argument("--no-verify", action="store_true")
    b.add_argument("--emit-code", action="store_true", help="include the generator matrix")

    md = sub.add_parser("mindist", parents=[common], help="brute-force minimum distance")
    md.add_argument("--code", required=True, help="linear or additive code JSON, or a named code")

    g = sub.add_parser("ghw", parents=[common], help="generalised Hamming weights")
    g.add_argument("--code", required=True)
    g.add_argument("--j", type=int, help="single weight index (default: whole hierarchy)")
    g.add_argument("--csv", action="store_true", help="print the hierarchy as CSV instead of JSON")

    bd = sub.add_parser("bound", parents=[common], help="Griesmer-type bounds")
    bsub = bd.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    gl = bsub.add_parser("griesmer", parents=[common])
    gl.add_argument("--k", type=int, required=True)
    gl.add_argument("--d", type=int, required=True)
    gl.add_argument("--q", type=int, required=True)
    gl.add_argument("--n", type=int, help="also report whether n meets the bound")
    gw = bsub.add_parser("ghw", parents=[common])
    gw.add_argument("--j", type=int, required=True)
    gw.add_argument("--d", type=int, required=True)
    gw.add_argument("--q", type=int, required=True)
    ad = bsub.add_parser("additive", parents=[common])
    for name in ("n", "r", "h", "q"):
        ad.add_argument(f"--{name}", type=int, required=True)
    ad.add_argument("--d", type=int, help="check this d (default: report the largest feasible d)")

    c = sub.add_parser("certify-nonlinear", parents=[common], help="non-linearity certificate for a norm-trace code")
    for name in ("q", "s", "t", "h"):
        c.add_argument(f"--{name}", type=int, required=True)
    c.add_argument("--max-m", type=int, default=3)

    r = sub.add_parser("reproduce", parents=[common], help="re-run the headline checks")
    r.add_argument("target", choices=["all", *CHECKS])
    return parser


# -- subcommands: each returns (outputs, exit status) ----------------------------


def _cmd_construct_a(args):
    C = load_code(args.code)
    A = load_semifield(args.semifield) if args.semifield else desarguesian_partial_semifield(C.q, C.k, args.h)
    if A.h != args.h:
        raise UsageError(f"semifield has h = {A.h}, --h is {args.h}")
    ctx = TowerContext(C.q, h=args.h)
    if args.basis_change:
        B = MatrixFq.from_json(json.loads(Path(args.basis_change).read_text()), C.field).entries
        res = construct_a_with_basis_change(C, A, B, ctx, args.budget, args.jobs, basis=args.basis, verify=not args.no_verify)
    else:
        res = construct_a(C, A, ctx, args.budget, verify=not args.no_verify, jobs=args.jobs, basis=args.basis)
    return {"code": res.code.to_json(), "params": res.report()}, EXIT_OK


def _cmd_construct_b(args):
    params = ConstructionBParams(args.q, args.s, args.t, args.h, tuple(args.lambdas) if args.lambdas else None)
    res = build_code_b(params, budget=args.budget, verify=not args.no_verify, jobs=args.jobs)
    out = {"report": res.report()}
    if args.emit_code:
        out["code"] = res.code.to_json()
    return out, EXIT_OK


def _load_any(source: str):
    if source in NAMED_CODES:
        return NAMED_CODES[source]()
    obj = json.loads(Path(source).read_text())
    return AdditiveCode.from_json(obj) if "h" in obj else LinearCode.from_json(obj)


def _cmd_mindist(args):
    code = _load_any(args.code)
    d = code.min_distance(args.budget, args.jobs)
    h = getattr(code, "h", 1)
    return {"n": code.n, "k": code.k, "q": code.field.order if h == 1 else code.q, "h": h, "d": d}, EXIT_OK


def _cmd_ghw(args):
    C = load_code(args.code)
    if args.j is not None:
        return {"j": args.j, "d_j": C.ghw(args.j, args.budget)}, EXIT_OK
    return {"hierarchy": C.ghw_hierarchy(args.budget)}, EXIT_OK


def _cmd_bound(args):
    if args.kind == "griesmer":
        n_min = bounds.griesmer_linear(args.k, args.d, args.q)
        out = {"k": args.k, "d": args.d, "q": args.q, "n_min": n_min}
        if args.n is not None:
            out["n"] = args.n
            out["verdict"] = "feasible" if args.n >= n_min else "infeasible"
            return out, EXIT_OK if args.n >= n_min else EXIT_FALSIFIED
        return out, EXIT_OK
    if args.kind == "ghw":
        return {"j": args.j, "d": args.d, "q": args.q, "lower_bound": bounds.ghw_lower_bound(args.j, args.d, args.q)}, EXIT_OK
    if args.d is None:
        max_d = bounds.additive_griesmer_max_d(args.n, args.r, args.h, args.q)
        out = {"n": args.n, "r": args.r, "h": args.h, "q": args.q, "max_d": max_d}
        if max_d:
            out["at_max"] = bounds.additive_griesmer_check(args.n, args.r, args.h, args.q, max_d).to_json()
        return out, EXIT_OK
    inst = bounds.additive_griesmer_check(args.n, args.r, args.h, args.q, args.d)
    return inst.to_json(), EXIT_OK if inst.feasible else EXIT_FALSIFIED


def _cmd_certify(args):
    fam = build_family(ConstructionBParams(args.q, args.s, args.t, args.h))
    cert = certify_nonlinear(SubspaceFamily.from_norm_trace(fam), max_m=args.max_m, budget=args.budget)
    out = cert.to_json()
    out["divisibility_precheck"] = divisibility_precheck(args.s, args.t, args.h)
    return out, EXIT_OK


def _cmd_reproduce(args):
    results = run_checks(args.target, jobs=args.jobs)
    out = {"checks": [r.to_json(args.timing) for r in results], "all_passed": all(r.passed for r in results)}
    return out, EXIT_OK if out["all_passed"] else EXIT_FALSIFIED


COMMANDS = {
    "construct-a": _cmd_construct_a,
    "construct-b": _cmd_construct_b,
    "mindist": _cmd_mindist,
    "ghw": _cmd_ghw,
    "bound": _cmd_bound,
    "certify-nonlinear": _cmd_certify,
    "reproduce": _cmd_reproduce,
}


def _inputs(args) -> dict:
    skip = {"format", "timing", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _table(outputs, prefix: str = "") -> list[str]:
    lines = []
    if isinstance(outputs, dict):
        for k, v in outputs.items():
            nested = isinstance(v, dict) or (isinstance(v, list) and v and isinstance(v[0], dict))
            if nested and v:
                lines.append(f"{prefix}{k}:")
                lines += _table(v, prefix + "  ")
            else:
                lines.append(f"{prefix}{k:<20} {v}")
    elif isinstance(outputs, list):
        for i, item in enumerate(outputs):
            lines.append(f"{prefix}- [{i}]")
            lines += _table(item, prefix + "  ")
    return lines


def _emit(report: dict, fmt: str, stream) -> None:
    if fmt == "table":
        stream.write("\n".join(_table(report)) + "\n")
    else:
        stream.write(json.dumps(report, indent=2, default=_json_default) + "\n")


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"not JSON serialisable: {type(o).__name__}")


def main(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"addikit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "subcommand": args.command if args.command != "bound" else f"bound {args.kind}",
        "version": __version__,
        "inputs": _inputs(args),
        "budget": {"enumeration_cap": enumeration_budget(args.budget)},
    }
    t0 = time.perf_counter()
    try:
        if args.command == "ghw" and args.csv:
            stdout.write(ghw_table_csv(load_code(args.code), args.budget))
            return EXIT_OK
        outputs, status = COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        report["error"] = {"type": "BudgetExceeded", "message": str(exc), "cap": exc.cap, "needed": exc.needed}
        report["budget"]["exceeded"] = True
        _emit(report, args.format, stdout)
        return EXIT_USAGE
    except (InternalInconsistency, RankDeficientCode) as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        _emit(report, args.format, stdout)
        return EXIT_FALSIFIED
    except (AddikitError, UsageError, OSError, ValueError, KeyError) as exc:
        print(f"addikit: error: {exc}", file=sys.stderr)
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        _emit(report, args.format, stdout)
        return EXIT_USAGE
    report["outputs"] = outputs
    report["budget"]["exceeded"] = False
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 3)}
    _emit(report, args.format, stdout)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
