"""Command-line front end.

Exit codes: 0 success, 1 parse or usage error, 2 ill-formed intervals,
3 equivalence budget exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from mltl.benchgen import GenConfig, TraceLenPolicy, write_benchmarks
from mltl.errors import (
    BudgetExceeded,
    CrossCheckFailed,
    DichotomyViolation,
    IllFormedInterval,
    ParseError,
)
from mltl.parser import parse_formula, parse_trace, print_formula, print_trace
from mltl.progression import classify, progress_steps
from mltl.semantics import EquivBudget, evaluate, find_counterexample
from mltl.syntax import intervals_welldef
from mltl.transforms import complen, convert_nnf

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ILL_FORMED = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _formula(text: str, *, welldef: bool = True):
    f = parse_formula(text)
    if welldef and not intervals_welldef(f):
        raise IllFormedInterval(f)
    return f


def _trace(path: str):
    try:
        return parse_trace(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise _UsageError(f"cannot read trace file {path}: {exc.strerror}") from exc


def _budget(args) -> EquivBudget:
    return EquivBudget(max_alphabet=args.max_alpha, max_length=args.max_len)


def cmd_check(args, out):
    f = _formula(args.formula, welldef=False)
    if not intervals_welldef(f):
        out.write("ill-formed\n")
        return EXIT_ILL_FORMED
    out.write("well-formed\n")
    return EXIT_OK


def cmd_eval(args, out):
    f = _formula(args.formula)
    out.write("true\n" if evaluate(_trace(args.trace), f) else "false\n")
    return EXIT_OK


def cmd_progress(args, out):
    f = _formula(args.formula)
    residual = f
    for residual in progress_steps(f, _trace(args.trace)):
        if args.steps:
            out.write(print_formula(residual) + "\n")
    if not args.steps:
        out.write(print_formula(residual) + "\n")
    return EXIT_OK


def cmd_classify(args, out):
    verdict = classify(_formula(args.formula), _trace(args.trace), _budget(args))
    if verdict.resolved:
        out.write(verdict.kind.value + "\n")
    else:
        out.write(f"RESIDUAL {print_formula(verdict.residual)}\n")
    return EXIT_OK


def cmd_nnf(args, out):
    out.write(print_formula(convert_nnf(_formula(args.formula))) + "\n")
    return EXIT_OK


def cmd_complen(args, out):
    out.write(f"{complen(_formula(args.formula, welldef=False))}\n")
    return EXIT_OK


def cmd_equiv(args, out):
    witness = find_counterexample(_formula(args.formula1), _formula(args.formula2), _budget(args))
    if witness is None:
        out.write("equivalent\n")
    else:
        out.write("inequivalent\n")
        out.write(print_trace(witness))
    return EXIT_OK


def cmd_gen(args, out):
    try:
        cfg = GenConfig(
            seed=args.seed,
            max_depth=args.depth,
            max_bound=args.bound,
            num_props=args.props,
            num_cases=args.cases,
            trace_len_policy=TraceLenPolicy.parse(args.policy),
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.out == "-":
        write_benchmarks(cfg, out, jobs=args.jobs)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            write_benchmarks(cfg, fh, jobs=args.jobs)
    return EXIT_OK


def cmd_selftest(args, out):
    from mltl.theorems import run_all

    results = run_all(args.cases, args.seed)
    for r in results:
        out.write(f"{'PASS' if r.ok else 'FAIL'} {r}\n")
        for failure in r.failures:
            print(f"  counterexample: {failure}", file=sys.stderr)
    return EXIT_OK if all(r.ok for r in results) else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="mltl", description="Mission-time LTL toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def budget_opts(p):
        p.add_argument("--max-alpha", type=int, default=4, help="largest alphabet to enumerate")
        p.add_argument("--max-len", type=int, default=12, help="longest trace to enumerate")

    p = sub.add_parser("check", help="parse and check interval well-definedness")
    p.add_argument("formula")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="decide whether a trace satisfies a formula")
    p.add_argument("formula")
    p.add_argument("trace")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("progress", help="progress a formula through a trace")
    p.add_argument("formula")
    p.add_argument("trace")
    p.add_argument("--steps", action="store_true", help="print the residual after every state")
    p.set_defaults(func=cmd_progress)

    p = sub.add_parser("classify", help="progress and resolve the residual to TRUE/FALSE if possible")
    p.add_argument("formula")
    p.add_argument("trace")
    budget_opts(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("nnf", help="negation normal form")
    p.add_argument("formula")
    p.set_defaults(func=cmd_nnf)

    p = sub.add_parser("complen", help="computation length")
    p.add_argument("formula")
    p.set_defaults(func=cmd_complen)

    p = sub.add_parser("equiv", help="bounded semantic equivalence with a witness trace")
    p.add_argument("formula1")
    p.add_argument("formula2")
    budget_opts(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("gen", help="write labelled benchmark records as JSON lines")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--props", type=int, default=2)
    p.add_argument("--policy", default="at-complen", help="at-complen | above-complen:N | below-complen")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", default="-", help="output file, '-' for stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="run the randomised correctness suites")
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args, out)
    except _UsageError as exc:
        err.write(f"mltl: {exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        err.write(f"mltl: parse error: {exc}\n")
        return EXIT_USAGE
    except IllFormedInterval as exc:
        err.write(f"mltl: {exc}\n")
        return EXIT_ILL_FORMED
    except BudgetExceeded as exc:
        err.write(f"mltl: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (DichotomyViolation, CrossCheckFailed) as exc:
        err.write(f"mltl: internal invariant violated: {exc}\n")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
