"""Command-line front end: verification suites and membership queries."""

from __future__ import annotations

import argparse
import os
import sys

from .filtered import TruncationParams
from .groebner import InputError
from .poly import StructuralError, parse
from .report import INDETERMINATE_STATUS, PASS, Report
from .rewrite import CHART_VARS, Member, NotMember, rewrite_membership
from .trivial import verify_smoothext

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INDETERMINATE = 3

SUITES = ("family1", "family2", "smoothext", "section7", "gluing",
          "sequence-axioms", "cross-family")


def _trunc_scale() -> float:
    raw = os.environ.get("LND_TRUNC_SCALE")
    if not raw:
        return 1.0
    try:
        value = float(raw)
    except ValueError as exc:
        raise StructuralError(f"bad LND_TRUNC_SCALE value {raw!r}") from exc
    if value <= 0:
        raise StructuralError("LND_TRUNC_SCALE must be positive")
    return value


def _truncations(args, default_fn, nu_max: int):
    """Per-level truncations from flags, the env scale, or suite defaults."""
    scale = _trunc_scale()
    out = {}
    for nu in range(nu_max + 1):
        if args.trunc_len is not None or args.trunc_deg is not None:
            base = default_fn(nu)
            out[nu] = TruncationParams(
                args.trunc_len if args.trunc_len is not None else base.word_length,
                args.trunc_deg if args.trunc_deg is not None else base.degree)
        else:
            out[nu] = default_fn(nu).scaled(scale)
    return out


def run_suite(args) -> Report:
    from . import sl2
    from .blowup import verify_section7_cases
    from .filtered import verify_sequence_axioms

    name = args.suite
    if name == "family1":
        if args.n < 1:
            raise UsageError("family1 needs --n >= 1 (n = 0 is family2 with p = q = 1)")
        trunc = _truncations(args, lambda nu: sl2.family1_truncation(args.n, nu),
                             args.nu_max)
        return sl2.verify_family1(args.n, args.nu_max, trunc)
    if name == "family2":
        trunc = _truncations(
            args, lambda nu: sl2.family2_truncation(args.p, args.q, nu),
            max(args.nu_max, 2))
        return sl2.verify_family2(args.p, args.q, args.nu_max, trunc)
    if name == "smoothext":
        return verify_smoothext()
    if name == "section7":
        return verify_section7_cases()
    if name == "gluing":
        if args.n < 1:
            raise UsageError("gluing needs --n >= 1")
        return sl2.gluing_checks(args.n)
    if name == "sequence-axioms":
        report = Report("sequence-axioms", (("nu_max", args.nu_max),))
        sequence = sl2.sl2_sequence(args.nu_max)
        report.extend(verify_sequence_axioms(sequence))
        if args.n >= 1:
            trunc = _truncations(
                args, lambda nu: sl2.family1_truncation(args.n, nu), args.nu_max)
            from .filtered import IdealSequence
            sub = sl2.family1_subalgebra(args.n)
            fam = IdealSequence.compute(sub, args.nu_max, trunc[args.nu_max])
            report.extend(verify_sequence_axioms(fam))
        return report
    if name == "cross-family":
        trunc = _truncations(
            args, lambda nu: sl2.family2_truncation(1, 1, nu), args.nu_max)
        return sl2.verify_cross_family(args.nu_max, trunc)
    raise UsageError(f"unknown suite {name!r}")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaext",
        description="Exact verification of bundle-extension identities")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--n", type=int, default=1)
    verify.add_argument("--p", type=int, default=1)
    verify.add_argument("--q", type=int, default=1)
    verify.add_argument("--nu-max", type=int, default=2)
    verify.add_argument("--trunc-len", type=int, default=None)
    verify.add_argument("--trunc-deg", type=int, default=None)
    verify.add_argument("--format", choices=("text", "structured"),
                        default="text")
    verify.add_argument("--seed", type=int, default=0)

    member = sub.add_parser("membership",
                            help="rewrite a polynomial in t, v, u into chart generators")
    member.add_argument("polynomial")
    member.add_argument("--n", type=int, default=1)
    member.add_argument("--max-steps", type=int, default=10000)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS

    if args.command == "membership":
        try:
            poly = parse(args.polynomial, CHART_VARS)
        except StructuralError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.n < 1:
            print("membership needs --n >= 1", file=sys.stderr)
            return EXIT_USAGE
        trace = rewrite_membership(poly, args.n, args.max_steps)
        for line in trace.lines():
            print(line)
        print(f"note\t{trace.note}")
        if isinstance(trace.result, Member):
            return EXIT_PASS
        if isinstance(trace.result, NotMember):
            return EXIT_FAIL
        return EXIT_INDETERMINATE

    try:
        report = run_suite(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (StructuralError, InputError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "structured":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.text())
    if report.overall == PASS:
        return EXIT_PASS
    if report.overall == INDETERMINATE_STATUS:
        return EXIT_INDETERMINATE
    return EXIT_FAIL


def entry():
    raise SystemExit(main())
