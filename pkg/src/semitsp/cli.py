"""Command-line interface.

Subcommands: analyze, complete, solve, gen, bench. Exit codes: 0 ok,
1 usage, 2 parse/validation, 3 solver error, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .christofides import solve_christofides
from .completion import complete_graph
from .errors import (
    InternalInvariantViolation,
    ParseError,
    SemitspError,
    SolverError,
    ValidationError,
)
from .exact import HELD_KARP_MAX, exact_tsp_held_karp
from .graphs import CompleteWeightedGraph, WeightedGraph
from .instances import (
    gen_example1,
    gen_random,
    gen_star_family,
    instance_to_json,
    load_instance,
)
from .mst import solve_mst2
from .relaxation import (
    classify,
    compare_bounds,
    suzuki_bound,
    suzuki_exponent,
)
from .reports import GUARANTEE_RTOL, METHOD_EXACT, SolveReport

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_SOLVER = 3
EXIT_VERIFY = 4

CSV_COLUMNS = [
    "n", "seed", "beta", "gamma", "method", "tour_weight", "optimum", "ratio",
    "bound_2g", "bound_3g2", "bound_4b", "bound_b2b", "bound_32b2", "bound_3b2b2",
]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _VerificationFailure(Exception):
    pass


def _require_complete(instance) -> CompleteWeightedGraph:
    g = instance.graph
    if isinstance(g, CompleteWeightedGraph):
        return g
    raise ValidationError(
        "this command needs a complete instance; run `complete` first"
    )


def _cmd_analyze(args) -> int:
    instance = load_instance(args.file)
    g = _require_complete(instance)
    classification, profile = classify(g)
    bounds = compare_bounds(profile.beta, profile.gamma)
    if g.n >= 2:
        exponent = suzuki_exponent(g.n)
        bound = suzuki_bound(profile.beta, g.n)
    else:
        exponent, bound = 0, 1.0
    if args.json:
        print(json.dumps({
            "name": instance.name,
            "n": g.n,
            "beta": profile.beta,
            "gamma": profile.gamma,
            "beta_witness": profile.beta_witness,
            "gamma_witness": profile.gamma_witness,
            "classification": str(classification),
            "suzuki_exponent": exponent,
            "suzuki_bound": bound,
            "suzuki_ok": profile.gamma <= bound * (1.0 + GUARANTEE_RTOL),
            "bounds": {key: value for key, value in bounds},
        }))
    else:
        print(f"n={g.n}")
        print(f"beta={profile.beta:g} gamma={profile.gamma:g}")
        print(f"beta_witness={profile.beta_witness} gamma_witness={profile.gamma_witness}")
        print(f"classification={classification}")
        ok = profile.gamma <= bound * (1.0 + GUARANTEE_RTOL)
        print(f"suzuki_bound=beta^{exponent}={bound:g} satisfied={ok}")
        chain = " <= ".join(f"{key}={value:g}" for key, value in bounds)
        print(f"bounds: {chain}")
    return EXIT_OK


def _cmd_complete(args) -> int:
    instance = load_instance(args.file)
    g = instance.graph
    if isinstance(g, CompleteWeightedGraph):
        edges = [
            (u, v, float(g.w[u, v]))
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ]
        g = WeightedGraph.from_edges(g.n, edges)
    result = complete_graph(g)
    text = instance_to_json(result.complete, name=instance.name)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    print(f"filler_weight={result.filler_weight!r}", file=sys.stderr)
    return EXIT_OK


def _solve(g: CompleteWeightedGraph, method: str, root: int) -> SolveReport:
    if method == "mst2":
        return solve_mst2(g, root=root)
    if method == "christofides":
        return solve_christofides(g)
    tour = exact_tsp_held_karp(g)
    from .relaxation import relaxation_profile

    profile = relaxation_profile(g)
    return SolveReport(
        method=METHOD_EXACT,
        tour=tour,
        lower_bound=tour.weight,
        beta=profile.beta,
        gamma=profile.gamma,
        guarantee_factor=1.0,
        achieved_ratio=1.0,
    )


def _cmd_solve(args) -> int:
    instance = load_instance(args.file)
    g = _require_complete(instance)
    report = _solve(g, args.method, args.root)
    verified = None
    optimum = None
    if args.verify:
        if g.n > args.oracle_cap:
            raise SolverError(
                f"--verify needs n <= {args.oracle_cap}, instance has n={g.n}"
            )
        optimum = exact_tsp_held_karp(g).weight
        limit = report.guarantee_factor * optimum * (1.0 + GUARANTEE_RTOL)
        verified = report.tour.weight <= limit
    if args.json:
        doc = {
            "name": instance.name,
            "n": g.n,
            "method": report.method,
            "tour": list(report.tour.order),
            "tour_weight": report.tour.weight,
            "lower_bound": report.lower_bound,
            "beta": report.beta,
            "gamma": report.gamma,
            "guarantee_factor": report.guarantee_factor,
            "achieved_ratio": report.achieved_ratio,
        }
        if args.verify:
            doc["optimum"] = optimum
            doc["verified"] = verified
        print(json.dumps(doc))
    else:
        print(f"method={report.method} n={g.n}")
        print(f"tour={report.tour.order}")
        print(f"tour_weight={report.tour.weight!r}")
        print(f"lower_bound={report.lower_bound!r}")
        print(f"beta={report.beta:g} gamma={report.gamma:g}")
        print(f"guarantee_factor={report.guarantee_factor:g}")
        print(f"achieved_ratio={report.achieved_ratio:g}")
        if args.verify:
            print(f"optimum={optimum!r} verified={verified}")
    if args.verify and not verified:
        raise _VerificationFailure(
            f"tour weight {report.tour.weight} exceeds "
            f"{report.guarantee_factor} * optimum = {report.guarantee_factor * optimum}"
        )
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "example1":
        g = gen_example1()
    elif args.kind == "star":
        g = gen_star_family(args.n, args.gamma)
    else:
        g = gen_random(args.n, args.seed, args.low, args.high)
    text = instance_to_json(g, name=args.kind)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _bench_rows(sizes, seeds, low, high, exact_cap):
    from .relaxation import relaxation_profile

    rows = []
    for n in sizes:
        for seed in seeds:
            g = gen_random(n, seed, low, high)
            profile = relaxation_profile(g)
            bounds = dict(compare_bounds(profile.beta, profile.gamma))
            optimum = None
            if n <= exact_cap:
                optimum = exact_tsp_held_karp(g).weight
            for report in (solve_mst2(g), solve_christofides(g)):
                ratio = (
                    report.tour.weight / optimum
                    if optimum is not None
                    else report.achieved_ratio
                )
                rows.append({
                    "n": n,
                    "seed": seed,
                    "beta": repr(profile.beta),
                    "gamma": repr(profile.gamma),
                    "method": report.method,
                    "tour_weight": repr(report.tour.weight),
                    "optimum": "" if optimum is None else repr(optimum),
                    "ratio": repr(ratio),
                    "bound_2g": repr(bounds["2g"]),
                    "bound_3g2": repr(bounds["3g2"]),
                    "bound_4b": repr(bounds["4b"]),
                    "bound_b2b": repr(bounds["b2b"]),
                    "bound_32b2": repr(bounds["32b2"]),
                    "bound_3b2b2": repr(bounds["3b2b2"]),
                })
    rows.sort(key=lambda r: (r["n"], r["seed"], r["method"]))
    return rows


def _cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    seeds = [int(tok) for tok in args.seeds.split(",") if tok]
    rows = _bench_rows(sizes, seeds, args.low, args.high, args.exact_cap)
    with open(args.output, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.output}")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="semitsp")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="compute beta, gamma and the bound chain")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("complete", help="extend an instance to a complete graph")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("solve", help="produce a tour with a bound certificate")
    p.add_argument("file")
    p.add_argument("--method", choices=["mst2", "christofides", "exact"],
                   default="mst2")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--verify", action="store_true",
                   help="check the guarantee against the exact optimum")
    p.add_argument("--oracle-cap", type=int, default=HELD_KARP_MAX)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("kind", choices=["example1", "star", "random"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--gamma", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--low", type=float, default=1.0)
    p.add_argument("--high", type=float, default=10.0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="emit a per-instance CSV of bounds and ratios")
    p.add_argument("--sizes", required=True, help="comma-separated instance sizes")
    p.add_argument("--seeds", required=True, help="comma-separated seeds")
    p.add_argument("--low", type=float, default=1.0)
    p.add_argument("--high", type=float, default=10.0)
    p.add_argument("--exact-cap", type=int, default=12,
                   help="compute the optimum for n up to this size")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ValidationError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except _VerificationFailure as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except (SolverError, InternalInvariantViolation) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_SOLVER
    except SemitspError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as e:
        print(f"io error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
