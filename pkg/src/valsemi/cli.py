"""Command line front end.

    valsemi gen      (--gens L | --gens-file F | --example1) --bound B
    valsemi count    (--gens L | --gens-file F | --example1) --at X
    valsemi check    (--gens L | --gens-file F | --example1) --n N --dmax D [--fail-on-violation]
    valsemi example1 (--n N | --n-range A..B) [--jobs J]
    valsemi monomial --weights W --d D [--poly P]

Exit status: 0 success, 1 usage error, 2 computation error, 3 violation under
``check --fail-on-violation``.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

from valsemi import report
from valsemi.exact_arith import format_rational, parse_rational, parse_rational_list
from valsemi.obstruction import check, example1_certificate, example1_generators, minimum_generator
from valsemi.semigroup_engine import (
    DEFAULT_BUDGET,
    ExplicitList,
    SemigroupError,
    enumerate_up_to,
    read_generator_file,
)
from valsemi.valuation_lab import (
    DimensionMismatch,
    MonomialValuation,
    parse_polynomial,
    value_of,
    verify_lemma1,
    verify_lemma2,
)

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VIOLATION = 0, 1, 2, 3
BUDGET_ENV = "VALSEMI_BUDGET"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(flag):
    def conv(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects a positive integer, got {text!r}") from None
        if value < 1:
            raise argparse.ArgumentTypeError(f"{flag} expects a positive integer, got {text!r}")
        return value

    return conv


def _positive_rational(flag):
    def conv(text):
        try:
            value = parse_rational(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"{flag}: {exc}") from None
        if value <= 0:
            raise argparse.ArgumentTypeError(f"{flag} must be positive, got {text!r}")
        return value

    return conv


def _positive_list(flag):
    def conv(text):
        try:
            values = parse_rational_list(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"{flag}: {exc}") from None
        bad = [format_rational(v) for v in values if v <= 0]
        if bad:
            raise argparse.ArgumentTypeError(f"{flag} entries must be positive, got {', '.join(bad)}")
        return values

    return conv


def _range(text):
    parts = text.split("..")
    try:
        a, b = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--n-range expects A..B, got {text!r}") from None
    if not 1 <= a <= b:
        raise argparse.ArgumentTypeError(f"--n-range needs 1 <= A <= B, got {text!r}")
    return range(a, b + 1)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text", "csv"], default="text")
    common.add_argument("--budget", type=_positive_int("--budget"), default=None,
                        help=f"element budget (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    common.add_argument("--timestamps", action="store_true", help="add a generated_at field")

    source = _Parser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--gens", type=_positive_list("--gens"), help="comma separated generators")
    group.add_argument("--gens-file", help="file with one generator per line")
    group.add_argument("--example1", action="store_true", help="the C(2m,m)-per-interval profile")

    parser = _Parser(prog="valsemi", description="Value semigroup bounds and obstruction certificates.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common, source], help="list semigroup elements up to a bound")
    p.add_argument("--bound", type=_positive_rational("--bound"), required=True)

    p = sub.add_parser("count", parents=[common, source], help="count elements below x")
    p.add_argument("--at", type=_positive_rational("--at"), required=True)

    p = sub.add_parser("check", parents=[common, source], help="test the counting inequality")
    p.add_argument("--n", type=_positive_int("--n"), required=True)
    p.add_argument("--dmax", type=_positive_int("--dmax"), required=True)
    p.add_argument("--fail-on-violation", action="store_true")
    p.add_argument("--all-rows", action="store_true", help="fill every row instead of stopping at the witness")

    p = sub.add_parser("example1", parents=[common], help="certificates for the counterexample")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_positive_int("--n"))
    g.add_argument("--n-range", type=_range)
    p.add_argument("--jobs", type=_positive_int("--jobs"), default=1)

    p = sub.add_parser("monomial", parents=[common], help="lemma checks for a monomial valuation")
    p.add_argument("--weights", type=_positive_list("--weights"), required=True)
    p.add_argument("--d", type=_positive_int("--d"), required=True)
    p.add_argument("--poly", help="polynomial to evaluate, e.g. 'x^2 + 3/2 y'")
    return parser


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env is None:
        return DEFAULT_BUDGET
    try:
        value = int(env)
    except ValueError:
        value = 0
    if value < 1:
        raise UsageError(f"{BUDGET_ENV} must be a positive integer, got {env!r}")
    return value


def _source(args, reach):
    """Generator spec plus its JSON description; ``reach`` is the largest value needed."""
    if args.example1:
        horizon = max(1, math.ceil(reach))
        return example1_generators(horizon), {"kind": "example1", "horizon": horizon}
    if args.gens_file is not None:
        try:
            spec = read_generator_file(args.gens_file)
        except OSError as exc:
            raise UsageError(f"--gens-file: {exc}") from None
        except ValueError as exc:
            raise UsageError(f"--gens-file: {exc}") from None
    else:
        spec = ExplicitList(args.gens)
    return spec, {"kind": "explicit", "generators": [format_rational(g) for g in spec.generators]}


def _run(args) -> tuple[dict, int]:
    budget = _budget(args)
    if args.format == "csv" and args.command != "check":
        raise UsageError("--format csv is only available for check")
    status = EXIT_OK
    if args.command == "gen":
        spec, desc = _source(args, args.bound)
        doc = report.gen_doc(desc, enumerate_up_to(spec, args.bound, budget=budget))
    elif args.command == "count":
        spec, desc = _source(args, args.at)
        s0 = minimum_generator(spec)
        count = 0 if args.at <= s0 else len(enumerate_up_to(spec, args.at, open_bound=True, budget=budget))
        doc = report.count_doc(desc, args.at, s0, count)
    elif args.command == "check":
        spec, desc = _source(args, args.dmax + 1)
        result = check(spec, args.n, args.dmax, budget=budget, early_exit=not args.all_rows)
        doc = report.check_doc(desc, result)
        if args.fail_on_violation and result.verdict.violated:
            status = EXIT_VIOLATION
    elif args.command == "example1":
        ns = [args.n] if args.n is not None else list(args.n_range)
        if args.jobs > 1 and len(ns) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                certs = list(pool.map(_certificate, ns, [budget] * len(ns)))
        else:
            certs = [_certificate(n, budget) for n in ns]
        doc = report.example1_doc(certs)
    else:
        v = MonomialValuation(args.weights)
        value = None
        if args.poly is not None:
            try:
                f = parse_polynomial(args.poly)
                value = (str(f), value_of(v, f))
            except DimensionMismatch as exc:
                raise UsageError(f"--poly: {exc}") from None
            except ValueError as exc:
                raise UsageError(f"--poly: {exc}") from None
        doc = report.monomial_doc(
            v.weights, args.d, verify_lemma1(v, args.d), verify_lemma2(v, args.d, budget=budget), value
        )
    return doc, status


def _certificate(n, budget):
    return example1_certificate(n, budget=budget)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return report.to_json(doc)
    if fmt == "csv":
        return report.check_csv(doc)
    return report.to_text(doc)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, status = _run(args)
    except UsageError as exc:
        print(f"valsemi: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemigroupError as exc:
        print(f"valsemi: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.timestamps:
        doc["generated_at"] = datetime.now(timezone.utc).isoformat()
    sys.stdout.write(render(doc, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
