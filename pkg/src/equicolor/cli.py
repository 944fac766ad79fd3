"""Command-line front end.

Subcommands: ``color`` (run an algorithm and self-verify), ``verify``
(exact factor of a coloring file), ``gen`` (instance generators),
``oracle`` (exhaustive searches), ``mc`` (Monte-Carlo suites), and
``bench`` (parameter sweeps with a CSV table and figures).

Exit codes: 0 ok, 1 verification failed, 2 precondition violated,
3 budget exceeded, 64 usage error, 65 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fileio
from .core import Coloring, format_rational, parse_rational
from .errors import (
    AttemptsExhausted,
    BudgetExceeded,
    FormatError,
    PreconditionViolated,
)
from .instances import (
    gen_eqx_counterexample,
    gen_lower_bound_instance,
    gen_random_bounded_degree,
    oracle_chromatic_number,
    oracle_max_weight_independent_set,
    oracle_min_alpha_eq1,
)
from .lowmax import chromatic_initial_coloring, greedy_coloring, low_max_wt_eq1
from .partitioneq import partition_equitable_coloring
from .randomized import (
    class_probability_closed_form,
    concentration_bound,
    copied_pair_instance,
    cycle_dependent_instance,
    estimate_class_probability,
    independent_bernoulli_instance,
    monte_carlo_tail,
)
from .swap2eq1 import two_eq1_coloring
from .verify import (
    check_partition_equitable,
    eq1_factor,
    eqx_factor,
    is_proper,
    violating_edge,
)
from .weightedeq1 import (
    eps_eq1_coloring,
    eq1_coloring_distinct_weights,
    eq1_coloring_sqrt,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64
EXIT_PARSE = 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise UsageError(message)


def _error_record(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _format_factor(report) -> str:
    if report.infinite:
        return "inf"
    return fileio._format_weight(report.factor)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equicolor")
    sub = parser.add_subparsers(dest="command", required=True)

    color = sub.add_parser("color", help="run a coloring algorithm")
    color.add_argument("--algo", required=True, choices=[
        "2eq1", "partition", "eq1-d", "eq1-sqrt", "eps-eq1", "lowmax", "random",
    ])
    color.add_argument("--k", type=int, required=True)
    color.add_argument("--eps", type=str)
    color.add_argument("--input", required=True)
    color.add_argument("--output")
    color.add_argument("--seed", type=int, default=0)
    color.add_argument("--partition", dest="partition_path")
    color.add_argument("--max-attempts", type=int, default=16)
    color.add_argument("--initial", choices=["greedy", "chromatic"],
                       default="greedy")
    color.add_argument("--no-verify", action="store_true")
    color.add_argument("--no-weight-bound", action="store_true",
                       help="skip the max-weight precondition of --algo "
                            "random; outputs are still verified exactly")

    verify = sub.add_parser("verify", help="exact factor of a coloring file")
    verify.add_argument("--input", required=True)
    verify.add_argument("--coloring", required=True)
    verify.add_argument("--mode", choices=["eq1", "eqx", "partition"],
                        default="eq1")
    verify.add_argument("--partition", dest="partition_path")
    verify.add_argument("--threshold", type=str)

    gen = sub.add_parser("gen", help="emit instance files")
    gen.add_argument("kind", choices=["lower-bound", "eqx", "random"])
    gen.add_argument("--delta", type=int, default=3)
    gen.add_argument("--n", type=int, default=12)
    gen.add_argument("--beta", type=str, default="4/1")
    gen.add_argument("--weights", default="uniform",
                     choices=["uniform", "geometric", "few-distinct"])
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output")

    oracle = sub.add_parser("oracle", help="exhaustive desk-scale searches")
    oracle.add_argument("kind", choices=["min-alpha", "chromatic", "mwis"])
    oracle.add_argument("--input", required=True)
    oracle.add_argument("--k", type=int)
    oracle.add_argument("--mode", choices=["eq1", "eqx"], default="eq1")

    mc = sub.add_parser("mc", help="Monte-Carlo suites")
    mc.add_argument("kind", choices=["class-prob", "tail"])
    mc.add_argument("--input")
    mc.add_argument("--k", type=int, default=8)
    mc.add_argument("--trials", type=int, default=10000)
    mc.add_argument("--seed", type=int, default=0)
    mc.add_argument("--t", type=str, default="1/1")

    bench = sub.add_parser("bench", help="parameter sweep with CSV and figures")
    bench.add_argument("--output-dir", required=True)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--sizes", type=str, default="40,80,160")
    bench.add_argument("--delta", type=int, default=3)
    bench.add_argument("--no-runtime", action="store_true")
    bench.add_argument("--no-figures", action="store_true")
    return parser


def _cmd_color(args) -> int:
    eps = parse_rational(args.eps) if args.eps else None
    needs_eps = args.algo in ("eps-eq1", "lowmax", "random")
    if needs_eps and eps is None:
        raise UsageError(f"--eps is required for --algo {args.algo}")
    g = fileio.parse_instance(_read(args.input))

    if args.algo == "2eq1":
        coloring = two_eq1_coloring(g, args.k)
        bound = Fraction(2)
    elif args.algo == "partition":
        if not args.partition_path:
            raise UsageError("--partition is required for --algo partition")
        partition = fileio.parse_partition(_read(args.partition_path))
        coloring = partition_equitable_coloring(g, partition, args.k)
        bound = None
        if not args.no_verify and not check_partition_equitable(
            coloring, partition, args.k
        ):
            _error_record("VerificationFailed", "partition equitability")
            return EXIT_VERIFY
    elif args.algo == "eq1-d":
        coloring = eq1_coloring_distinct_weights(g, args.k)
        bound = Fraction(1)
    elif args.algo == "eq1-sqrt":
        coloring = eq1_coloring_sqrt(g, args.k)
        bound = Fraction(1)
    elif args.algo == "eps-eq1":
        coloring = eps_eq1_coloring(g, args.k, eps)
        bound = 1 + 3 * eps
    elif args.algo == "lowmax":
        if args.initial == "chromatic":
            initial = chromatic_initial_coloring(g)
        else:
            initial = greedy_coloring(g)
        coloring = low_max_wt_eq1(g, args.k, eps, initial)
        bound = 1 + 7 * eps
    else:  # random
        from .randomized import randomized_eps_eq1

        coloring = randomized_eps_eq1(
            g, args.k, eps, args.max_attempts, args.seed,
            enforce_weight_bound=not args.no_weight_bound,
        )
        bound = 1 + 25 * eps

    if bound is not None and not args.no_verify:
        report = eq1_factor(g, coloring)
        if not is_proper(g, coloring) or not report.satisfies(bound):
            _error_record("VerificationFailed", f"factor {_format_factor(report)}")
            return EXIT_VERIFY
    _write(args.output, fileio.format_coloring(coloring))
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = fileio.parse_instance(_read(args.input))
    coloring = fileio.parse_coloring(_read(args.coloring))
    if args.mode == "partition":
        if not args.partition_path:
            raise UsageError("--partition is required for --mode partition")
        partition = fileio.parse_partition(_read(args.partition_path))
        ok = is_proper(g, coloring) and check_partition_equitable(
            coloring, partition, coloring.k
        )
        print("ok" if ok else "fail")
        return EXIT_OK if ok else EXIT_VERIFY

    if not is_proper(g, coloring):
        edge = violating_edge(g, coloring)
        _error_record("ImproperColoring", f"edge {edge} is monochromatic")
        return EXIT_VERIFY
    report = eq1_factor(g, coloring) if args.mode == "eq1" else eqx_factor(g, coloring)
    print(_format_factor(report))
    if args.threshold is not None:
        threshold = parse_rational(args.threshold)
        if report.infinite or not report.satisfies(threshold):
            return EXIT_VERIFY
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "lower-bound":
        g = gen_lower_bound_instance(args.delta)
    elif args.kind == "eqx":
        g = gen_eqx_counterexample(args.n, parse_rational(args.beta))
    else:
        g = gen_random_bounded_degree(args.n, args.delta,
                                      weight_model=args.weights,
                                      seed=args.seed)
    _write(args.output, fileio.format_instance(g))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = fileio.parse_instance(_read(args.input))
    if args.kind == "min-alpha":
        if args.k is None:
            raise UsageError("--k is required for min-alpha")
        report = oracle_min_alpha_eq1(g, args.k, mode=args.mode)
        alpha = "inf" if report.infinite else fileio._format_weight(report.min_alpha)
        print(f"min-alpha {alpha}")
        print(f"exhausted {'yes' if report.exhausted_space else 'no'}")
        print(f"nodes {report.nodes}")
        return EXIT_OK if report.exhausted_space else EXIT_BUDGET
    if args.kind == "chromatic":
        print(f"chromatic {oracle_chromatic_number(g)}")
        return EXIT_OK
    best_set, weight = oracle_max_weight_independent_set(g)
    print(f"mwis-weight {fileio._format_weight(weight)}")
    print("mwis-set {}".format(" ".join(str(v) for v in best_set)).rstrip())
    return EXIT_OK


def _cmd_mc(args) -> int:
    if args.kind == "class-prob":
        if not args.input:
            raise UsageError("--input is required for class-prob")
        g = fileio.parse_instance(_read(args.input))
        delta = g.max_degree()
        lo, hi = Fraction(1, args.k + delta + 1), Fraction(1, args.k)
        ok = True
        for v in range(g.n):
            estimate, radius = estimate_class_probability(
                g, args.k, v, 0, args.trials, args.seed + v
            )
            closed = class_probability_closed_form(g, args.k, v)
            inside = abs(estimate - closed) <= 4 * radius
            banded = lo - 4 * radius <= estimate <= hi + 4 * radius
            ok = ok and inside and banded
            print(f"vertex {v} estimate {format_rational(estimate)} "
                  f"closed {format_rational(closed)} "
                  f"radius {format_rational(radius)} "
                  f"{'ok' if inside and banded else 'off'}")
        return EXIT_OK if ok else EXIT_VERIFY

    t = parse_rational(args.t)
    ok = True
    suite = [
        ("independent", independent_bernoulli_instance(16)),
        ("copied-pair", copied_pair_instance()),
        ("cycle", cycle_dependent_instance(9)),
    ]
    for name, instance in suite:
        empirical = monte_carlo_tail(instance, t, args.trials, args.seed)
        bound = min(concentration_bound(instance, t), Fraction(1))
        slack = Fraction(3, 2 * max(1, int(args.trials ** Fraction(1, 2))))
        good = empirical <= bound + slack
        ok = ok and good
        print(f"{name} empirical {format_rational(empirical)} "
              f"bound {float(bound):.6f} {'ok' if good else 'off'}")
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_bench(args) -> int:
    from .bench import run_bench

    sizes = [int(s) for s in args.sizes.split(",") if s]
    run_bench(args.output_dir, sizes=sizes, delta=args.delta, seed=args.seed,
              include_runtime=not args.no_runtime,
              include_figures=not args.no_figures)
    return EXIT_OK


_DISPATCH = {
    "color": _cmd_color,
    "verify": _cmd_verify,
    "gen": _cmd_gen,
    "oracle": _cmd_oracle,
    "mc": _cmd_mc,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _DISPATCH[args.command](args)
    except UsageError as exc:
        _error_record("UsageError", str(exc))
        return EXIT_USAGE
    except FormatError as exc:
        _error_record("FormatError", str(exc))
        return EXIT_PARSE
    except PreconditionViolated as exc:
        _error_record("PreconditionViolated", str(exc))
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        _error_record("BudgetExceeded", str(exc))
        return EXIT_BUDGET
    except AttemptsExhausted as exc:
        _error_record("AttemptsExhausted", str(exc))
        return EXIT_VERIFY
    except ValueError as exc:
        _error_record("ValueError", str(exc))
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
