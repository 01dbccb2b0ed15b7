"""Command-line front end.

Subcommands: lucas, binom, catalan, verify, selftest.  Exit codes:
0 all good, 1 falsification or disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, Tuple

from . import oracles, selftest
from .binom import LucanomialEngine
from .catalan import ALL_CHECKS, DEFAULT_CHECKS, CatalanVerifier, SweepConfig
from .lucas import LucasCache, lemma21_check, product_identity_check
from .poly import Polynomial

JOBS_ENV_VAR = "LUCASCAT_JOBS"


def _parse_point(text: str) -> Tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected two comma-separated integers, e.g. 2,-1")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR)
    if raw is None:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        return 1
    return max(jobs, 1)


def _print_poly(p: Polynomial, fmt: str, spec: Optional[Tuple[int, int]]) -> None:
    if spec is not None:
        print(p.evaluate(*spec))
        return
    if fmt == "json":
        print(json.dumps(p.to_json_terms(), separators=(",", ":")))
    elif fmt == "csv":
        print("s_exp,t_exp,coeff")
        for se, te, c in p.terms():
            print(f"{se},{te},{c}")
    else:
        print(p.to_text())


def _cmd_lucas(args) -> int:
    cache = LucasCache()
    _print_poly(cache.lucas(args.n), args.format, args.spec)
    return 0


def _cmd_binom(args) -> int:
    engine = LucanomialEngine()
    factorial = engine.binom_factorial(args.m, args.k)
    recurrence = engine.binom_recurrence(args.m, args.k)
    if factorial != recurrence:
        print(
            f"route disagreement for ({args.m} choose {args.k}):\n"
            f"  factorial:  {factorial.to_text()}\n"
            f"  recurrence: {recurrence.to_text()}",
            file=sys.stderr,
        )
        return 1
    _print_poly(factorial, args.format, args.spec)
    return 0


def _cmd_catalan(args) -> int:
    verifier = CatalanVerifier()
    status = 0
    if args.method == "division":
        result = verifier.catalan_via_division(args.n)
    elif args.method == "identity":
        result = verifier.catalan_via_identity(args.n)
    else:
        division = verifier.catalan_via_division(args.n)
        identity = verifier.catalan_via_identity(args.n)
        result = division
        agree = division == identity
        if not agree:
            status = 1
    _print_poly(result, args.format, args.spec)
    if args.method == "both" and args.spec is None:
        print(f"agree={str(agree).lower()}")
    if args.require_positive and not result.is_positive:
        verdict = result.positivity()
        if verdict.is_zero:
            print("positivity failed: zero polynomial", file=sys.stderr)
        else:
            se, te, c = verdict.offending
            print(
                f"positivity failed at s^{se}*t^{te} with coefficient {c}",
                file=sys.stderr,
            )
        status = 1
    return status


def _cmd_verify(args) -> int:
    checks = tuple(dict.fromkeys(args.checks.split(",")))
    eval_points = ((2, -1),) if "specializations" in checks else ()
    config = SweepConfig(
        max_n=args.max_n,
        checks=checks,
        jobs=args.jobs,
        fmt=args.format,
        spec_point=args.spec,
        eval_points=eval_points,
    )
    verifier = CatalanVerifier()
    cache = verifier.cache
    all_ok = True
    rows = []
    if config.fmt == "csv":
        print("n,term_count,total_degree,max_coeff_bits,all_ok")
    for report in verifier.iter_sweep(config):
        n = report.n
        ok = True
        details = []
        if "identity" in checks:
            if not (report.division_ok and report.identity_ok):
                ok = False
        if "positivity" in checks and not report.positivity_ok:
            ok = False
        if report.failure_detail and not ok:
            details.append(report.failure_detail)
        if "lemma21" in checks:
            product = product_identity_check(cache, n)
            diagonal = lemma21_check(cache, n, n)
            if not (product.holds and diagonal.holds):
                ok = False
                details.append(f"product/addition law failed at n={n}")
        values = report.values or {}
        value_at = values.get(config.spec_point) if config.spec_point else None
        if "specializations" in checks:
            expected = oracles.catalan_number(n)
            got = values.get((2, -1))
            if got != expected:
                ok = False
                details.append(
                    f"specialization (2,-1) gave {got}, Catalan oracle says {expected}"
                )
        all_ok = all_ok and ok
        if config.fmt == "json":
            obj = report.to_json_obj()
            obj["checks_ok"] = ok
            if value_at is not None:
                obj["value_at"] = str(value_at)
            print(json.dumps(obj, separators=(",", ":")))
        elif config.fmt == "csv":
            p = report.catalan_poly
            d = report.catalan_digest or {}
            row = [
                str(n),
                str(p.term_count if p else d.get("term_count", 0)),
                str(p.total_degree if p else d.get("total_degree", -1)),
                str(p.max_coeff_bits if p else d.get("max_coeff_bits", 0)),
                str(ok).lower(),
            ]
            print(",".join(row))
        else:
            line = f"n={n} {'PASS' if ok else 'FAIL'}"
            if value_at is not None:
                s_val, t_val = config.spec_point
                line += f" value@({s_val},{t_val})={value_at}"
            if details:
                line += "  [" + "; ".join(details) + "]"
            print(line)
    if config.fmt == "text":
        verdict = "all checks passed" if all_ok else "FAILURES detected"
        print(f"verified n=1..{config.max_n} ({','.join(checks)}): {verdict}")
    return 0 if all_ok else 1


def _cmd_selftest(args) -> int:
    results = selftest.run_all(args.seed, args.cases)
    ok = True
    for result in results:
        status = "PASS" if result.ok else "FAIL"
        print(f"{result.name}: {status} ({result.cases} cases)")
        for failure in result.failures:
            print(f"  {failure}")
        ok = ok and result.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucascat",
        description="Exact Lucas polynomials, lucanomials, and Lucas-Catalan verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument(
            "--spec",
            type=_parse_point,
            default=None,
            metavar="S,T",
            help="evaluate at an integer point instead of printing symbolically",
        )

    p_lucas = sub.add_parser("lucas", help="print the Lucas polynomial {n}")
    p_lucas.add_argument("--n", type=int, required=True)
    add_common(p_lucas)
    p_lucas.set_defaults(func=_cmd_lucas)

    p_binom = sub.add_parser("binom", help="print the lucanomial {m choose k}")
    p_binom.add_argument("--m", type=int, required=True)
    p_binom.add_argument("--k", type=int, required=True)
    add_common(p_binom)
    p_binom.set_defaults(func=_cmd_binom)

    p_catalan = sub.add_parser("catalan", help="print the Lucas-Catalan polynomial")
    p_catalan.add_argument("--n", type=int, required=True)
    p_catalan.add_argument("--method", choices=("division", "identity", "both"), default="both")
    p_catalan.add_argument("--require-positive", action="store_true")
    add_common(p_catalan)
    p_catalan.set_defaults(func=_cmd_catalan)

    p_verify = sub.add_parser("verify", help="run the verification sweep")
    p_verify.add_argument("--max-n", type=int, required=True)
    p_verify.add_argument(
        "--checks",
        default=",".join(DEFAULT_CHECKS),
        help=f"comma-separated subset of {{{','.join(ALL_CHECKS)}}}",
    )
    p_verify.add_argument(
        "--jobs",
        type=int,
        default=_default_jobs(),
        help=f"parallel report assembly width (default from ${JOBS_ENV_VAR} or 1)",
    )
    add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_self = sub.add_parser("selftest", help="run the randomized kernel property suites")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.add_argument("--cases", type=int, default=1000)
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    # coefficients and evaluations legitimately reach tens of thousands
    # of decimal digits; lift CPython's int-to-str conversion guard so
    # explicit user-requested output is not truncated by an exception
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError,) as exc:
        parser.exit(2, f"error: {exc}\n")
        return 2  # unreachable; keeps type checkers happy


if __name__ == "__main__":
    sys.exit(main())
