"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain
error, 4 internal theorem violation. JSON goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .arith import parse_rational, rational_to_str
from .core import MomentFunctional, ReiswichParam, pm_original, reiswich_closed, reiswich_recursive
from .errors import CertificationError, DomainError, ParseError, TheoremViolation
from .orbit import PrecisionConfig, minimal_orbit_vector
from .roots import refine_until_certified, roots_with_count
from .unipoly import UniPoly
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_THEOREM = 4

# options whose value may legitimately start with "-" (negative rationals)
_VALUE_OPTIONS = {"--tau"}


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _render_poly(p: UniPoly, fmt: str, **meta) -> str:
    if fmt == "plain":
        return p.to_plain()
    if fmt == "latex":
        return p.to_latex()
    return json.dumps({**meta, "coefficients": p.to_json()})


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_gen(args) -> int:
    param = ReiswichParam(args.tau)
    _require_degree(args.n)
    if args.method == "closed":
        p = reiswich_closed(param, args.n)
    else:
        p = reiswich_recursive(param, args.n)
    if args.cross_check:
        other = reiswich_recursive(param, args.n) if args.method == "closed" else reiswich_closed(param, args.n)
        if other != p:
            raise TheoremViolation("closed form and recursion disagree")
    print(_render_poly(p, args.format, tau=rational_to_str(param.tau), n=args.n, method=args.method))
    return EXIT_OK


def cmd_pm(args) -> int:
    p = pm_original(args.m)
    print(_render_poly(p, args.format, m=args.m))
    return EXIT_OK


def cmd_roots(args) -> int:
    param = ReiswichParam(args.tau)
    _require_degree(args.n)
    digits = _digits(args)
    p = reiswich_closed(param, args.n)
    out = []
    for e in roots_with_count(p, args.n, max_width=parse_rational(f"1/{10 ** (digits + 5)}")):
        if not (0 < e.lo and e.hi < 1):
            raise TheoremViolation(f"root enclosure {e} outside (0, 1)")
        out.append(refine_until_certified(p, e, digits).to_json(digits))
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    taus = args.tau or None
    kwargs = {"seed": args.seed, "jobs": args.jobs}
    if taus:
        kwargs["taus"] = [ReiswichParam(t).tau for t in taus]
    report = run_suite(args.suite, args.max_n, **kwargs)
    payload = report.to_json()
    payload["max_n"] = args.max_n
    _emit(payload)
    for rec in report.failures:
        print(f"FAIL {rec.check_id}: {json.dumps(rec.witness)}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_orbit(args) -> int:
    vec = minimal_orbit_vector(args.m, PrecisionConfig(_digits(args)))
    _emit(vec.to_json())
    return EXIT_OK


def cmd_moments(args) -> int:
    _require_degree(args.max_n)
    fn = MomentFunctional(args.tau)
    _emit([rational_to_str(q) for q in fn.moments(args.max_n)])
    return EXIT_OK


def _require_degree(n: int) -> None:
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")


def _digits(args) -> int:
    if args.digits is not None:
        return args.digits
    return PrecisionConfig.from_env().decimal_digits


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="reiswich", description="Exact Reiswich polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tau(p, **kw):
        p.add_argument("--tau", type=_rational_arg, help="parameter as p/q, must exceed -1", **kw)

    def add_format(p):
        p.add_argument("--format", choices=("json", "plain", "latex"), default="plain")

    p = sub.add_parser("gen", help="print R^tau_n")
    add_tau(p, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("closed", "recursive"), default="closed")
    p.add_argument("--cross-check", action="store_true", help="fail unless both constructions agree")
    add_format(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("pm", help="print the original product form P_m")
    p.add_argument("--m", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_pm)

    p = sub.add_parser("roots", help="certified root enclosures of R^tau_n in (0, 1)")
    add_tau(p, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify", help="run exact verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=8)
    add_tau(p, action="append")
    p.add_argument("--seed", type=int, default=None, help="adds randomized evaluation checks")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbit", help="minimal orbit vector for type D_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--digits", type=int, default=None)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("moments", help="moments 0..max_n of the measure")
    add_tau(p, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_moments)
    return parser


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    """Glue ``--tau -1/2`` into ``--tau=-1/2`` so argparse sees a value, not a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_normalize_argv(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (DomainError, CertificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
