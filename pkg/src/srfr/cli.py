"""Command-line driver.

Exit codes: 0 on success, 1 for an invalid configuration or input, 2 when an
experiment's success fraction falls below ``--assert-min`` (or a decode fails).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from . import instance_io
from .codes import (
    BlackBoxPLS,
    EvalParams,
    ReceivedWord,
    encode,
    inject_errors,
    plswe_pipeline,
    random_error_pattern,
    srfrwe_solve,
)
from .degrees import generic_pivot_degrees, nice_form, witness_matrix
from .experiments import KINDS, REGIMES, ConfigError, ExperimentConfig, emit_report, run_experiment
from .field import PrimeField
from .poly import Polynomial
from .reconstruct import srfr_solve
from .sampling import random_coprime, random_poly, random_poly_matrix, trial_rng

EXIT_OK, EXIT_CONFIG, EXIT_REGIME = 0, 1, 2


def int_vector(text: str) -> tuple[int, ...]:
    """Parse ``"3,3,1"`` (commas, semicolons or spaces) into a tuple."""
    parts = [t for t in text.replace(";", ",").replace(" ", ",").split(",") if t]
    try:
        return tuple(int(t) for t in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers separated by commas, got {text!r}") from None


def _vec_str(v: Sequence[Polynomial]) -> str:
    return "(" + ", ".join(str(q) for q in v) + ")"


def cmd_solve(args) -> int:
    inst = instance_io.load(args.instance)
    space = srfr_solve(inst)
    if args.json:
        out = {
            "rank": space.rank,
            "kdim": space.kdim,
            "pivot_degrees": list(space.basis.pivot_degrees),
            "row_degrees": list(space.basis.row_degrees),
            "generators": [[list(q.coeffs) for q in g] for g in space.generators],
            "generator_row_degrees": list(space.row_degrees),
        }
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"rank s = {space.rank}, dim_K = {space.kdim}")
    print(f"pivot degrees {space.basis.pivot_degrees}, row degrees {space.basis.row_degrees}")
    for g, r in zip(space.generators, space.row_degrees):
        print(f"  rdeg {r}: (v; d) = {_vec_str(g)}")
    if space.unique:
        print("unique solution up to polynomial multiples")
    return EXIT_OK


def cmd_predict(args) -> int:
    shift = args.shift or (0,) * len(args.f)
    prof = generic_pivot_degrees(args.f, shift, args.r)
    print(f"delta = {prof.pivot_degrees}")
    print(f"rho   = {prof.row_degrees}")
    if args.trace:
        for mon, taken in prof.selection:
            print(f"  {mon}: {'take' if taken else 'skip'}")
    if list(args.f) == sorted(args.f, reverse=True) and args.r is None:
        nf = nice_form(args.f, shift)
        status = "applies" if nf.applies else f"does not apply ({', '.join(nf.failed)} fails)"
        print(f"closed form {nf.row_degrees} {status}")
    return EXIT_OK


def cmd_witness(args) -> int:
    field = PrimeField(args.p)
    w = witness_matrix(args.f, args.d, field)
    for row in w.M:
        print("[" + ", ".join(str(q) for q in row) + "]")
    for b in w.trace:
        print(f"  block {b.block} borrows {b.count} column(s) of block {b.source} from x^{b.start}, s' = {b.shift}")
    print(f"independent: {w.independent}")
    return EXIT_OK if w.independent else EXIT_REGIME


def _decode_params(args) -> tuple[int, int, int]:
    n, D = args.n, args.D
    if args.code == "rs":
        n, D = 1, 1
    elif args.code == "irs":
        D = 1
    if args.f is not None:
        f = args.f
    elif args.code == "irs":
        f = args.N + args.eps + math.ceil(args.eps / n)
    else:
        f = args.N + D + 2 * args.eps - 1
    return n, D, f


def cmd_decode(args) -> int:
    field = PrimeField(args.p)
    if args.input:
        data = json.loads(Path(args.input).read_text())
        field = PrimeField(data["p"])
        rows = tuple(tuple(int(x) % field.p for x in r) for r in data["rows"])
        params = EvalParams(field, tuple(data["alphas"]), len(rows), data["N"], data.get("D", 1), data["eps"])
        res = srfrwe_solve(ReceivedWord(field, rows), params)
        truth = None
    else:
        n, D, f = _decode_params(args)
        rng = trial_rng(args.seed, 0)
        alphas = [int(x) for x in rng.choice(field.p, size=f, replace=False)]
        v = [random_poly(rng, field, args.N) for _ in range(n)]
        d = Polynomial.one(field)
        if D > 1:
            while True:
                d = random_coprime(rng, field, D, ())
                if all(d.evaluate(x) for x in alphas):
                    break
        errors = args.eps if args.errors is None else args.errors
        pattern = random_error_pattern(rng, field, n, f, errors, mode=args.mode)
        word = inject_errors(encode(v, d, alphas), pattern)
        params = EvalParams(field, tuple(alphas), n, args.N, D, args.eps)
        res = srfrwe_solve(word, params)
        truth = (v, d)
        print(f"f = {f} points, errors at {list(pattern.support)}")
        print(f"sent     v = {_vec_str(v)}, d = {d}")
    if not res.success:
        print(f"decoding failed (rank {res.rank}, dim_K {res.kdim})")
        return EXIT_REGIME
    print(f"decoded  v = {_vec_str(res.v)}, d = {res.d}")
    print(f"detected error positions {list(res.error_positions)}, locator degree {res.lambda_degree}")
    if res.ambiguous:
        print(f"warning: solution space has rank {res.rank}; returned the minimal generator")
    if truth is not None and not res.matches(*truth):
        print("decoded fraction differs from the transmitted one")
        return EXIT_REGIME
    return EXIT_OK


def cmd_plswe(args) -> int:
    field = PrimeField(args.p)
    rng = trial_rng(args.seed, 0)
    n, k = args.n, args.deg
    A = random_poly_matrix(rng, field, n, n, k + 1)
    b = tuple(random_poly(rng, field, k + 1) for _ in range(n))
    N = D = n * k + 1
    f = N + D + 2 * args.eps - 1
    if f > field.p:
        raise ValueError(f"need {f} evaluation points but F_{field.p} has only {field.p}")
    points = [int(x) for x in rng.permutation(field.p)]
    alphas, spare = points[:f], points[f:]
    faults = {}
    for j in sorted(int(j) for j in rng.choice(f, size=args.eps, replace=False)):
        col = [0] * n
        while not any(col):
            col = [int(x) for x in rng.integers(0, field.p, size=n)]
        faults[alphas[j]] = tuple(col)
    box = BlackBoxPLS(A, b, faults)
    res = plswe_pipeline(box, EvalParams(field, tuple(alphas), n, N, D, args.eps), spare)
    v, d = res.expected
    print(f"Cramer:  v = {_vec_str(v)}, d = {d}")
    if res.skipped:
        print(f"skipped singular points {list(res.skipped)}")
    print(f"faulty points {sorted(faults)}")
    if not res.decode.success:
        print("decoding failed")
        return EXIT_REGIME
    print(f"decoded: v = {_vec_str(res.decode.v)}, d = {res.decode.d}")
    print(f"matches Cramer: {res.matches}")
    return EXIT_OK if res.matches else EXIT_REGIME


def cmd_experiment(args) -> int:
    cfg = ExperimentConfig(
        kind=args.kind,
        p=args.p,
        n=args.n,
        f=args.f or (),
        N=args.N or (),
        D=args.D,
        eps=args.eps,
        trials=args.trials,
        seed=args.seed,
        regime=args.regime,
        shift=args.shift or (),
        moduli=args.moduli,
        error_mode=args.mode,
        max_degree=args.max_degree,
        timing=args.timing,
        workers=args.workers,
    )
    result = run_experiment(cfg)
    if args.csv:
        emit_report(result, args.csv, args.json)
    elif args.json:
        Path(args.json).write_text(json.dumps(result.summary(), indent=2, sort_keys=True) + "\n")
    summary = result.summary()
    frac = summary["fraction"]
    shown = "n/a" if frac is None else f"{frac:.4f}"
    print(f"{cfg.kind}: {summary['successes']}/{summary['trials']} successes ({shown})")
    if summary["rank_histogram"]:
        print("rank histogram: " + ", ".join(f"s={k}: {v}" for k, v in summary["rank_histogram"].items()))
    if args.assert_min is not None and frac is not None and frac < args.assert_min:
        print(f"success fraction {frac:.4f} below required {args.assert_min}", file=sys.stderr)
        return EXIT_REGIME
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="srfr", description="Simultaneous rational function reconstruction tools.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve one SRFR instance from a file")
    sp.add_argument("instance", help="instance file (see srfr.instance_io)")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("predict", help="generic pivot and row degrees for f and a shift")
    sp.add_argument("--f", type=int_vector, required=True)
    sp.add_argument("--shift", type=int_vector)
    sp.add_argument("--r", type=int, help="rank (default: sum f)")
    sp.add_argument("--trace", action="store_true", help="print the monomial selection")
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("witness", help="Krylov matrix realizing the family F_d")
    sp.add_argument("--f", type=int_vector, required=True)
    sp.add_argument("--d", type=int_vector, required=True)
    sp.add_argument("--p", type=int, default=10007)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("decode", help="decode a (random or given) received word")
    sp.add_argument("code", choices=("rs", "irs", "srfrwe"))
    sp.add_argument("--p", type=int, default=10007)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--N", type=int, default=3)
    sp.add_argument("--D", type=int, default=2)
    sp.add_argument("--eps", type=int, default=1)
    sp.add_argument("--f", type=int, help="number of evaluation points (default: the code's radius)")
    sp.add_argument("--errors", type=int, help="errors to inject (default: eps)")
    sp.add_argument("--mode", choices=("full", "sparse"), default="full")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--input", help="JSON file with p, alphas, rows, N, D, eps")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("plswe", help="solve a random polynomial system through a faulty black box")
    sp.add_argument("--p", type=int, default=10007)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--deg", type=int, default=1, help="degree of A and b")
    sp.add_argument("--eps", type=int, default=1, help="number of faulty evaluations")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_plswe)

    sp = sub.add_parser("experiment", help="seeded Monte Carlo experiment")
    sp.add_argument("kind", choices=KINDS)
    sp.add_argument("--p", type=int, default=10007)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--f", type=int_vector)
    sp.add_argument("--N", type=int_vector)
    sp.add_argument("--D", type=int, default=1)
    sp.add_argument("--eps", type=int, default=0)
    sp.add_argument("--shift", type=int_vector)
    sp.add_argument("--regime", choices=REGIMES, default="threshold")
    sp.add_argument("--moduli", choices=("random", "monomial"), default="random")
    sp.add_argument("--mode", choices=("full", "sparse"), default="full", help="error sampling")
    sp.add_argument("--max-degree", type=int, default=6, help="rank-bound: largest sampled modulus degree")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="record wall time (reports no longer byte-identical)")
    sp.add_argument("--csv", help="per-trial CSV report path")
    sp.add_argument("--json", help="JSON summary path")
    sp.add_argument("--assert-min", type=float, help="exit 2 if the success fraction is below this")
    sp.set_defaults(func=cmd_experiment)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    try:
        return args.func(args)
    except (ConfigError, instance_io.InstanceFormatError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
