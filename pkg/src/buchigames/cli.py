"""Command-line front end: gen, solve, verify, bench.

Exit codes: 0 ok, 1 check failed, 2 parse error, 3 invariant violation,
64 bad flags, 65 oracle strategy space over the cap.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import SOLVERS
from .generators import FAMILIES, GenSpec, generate
from .graph import ParseError, parse_game, serialize_game
from .oracle import DEFAULT_CAP, OracleCapExceeded, oracle_solve
from .report import CSV_COLUMNS, SCHEMA_VERSION, run_solver
from .results import InvariantViolation
from .strategy import (StrategyError, extract_strategies, format_strategies,
                       parse_strategies, verify_player1, verify_player2)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3
EXIT_USAGE, EXIT_CAP = 64, 65


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_game(path):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    return parse_game(data)


def _ids(states):
    return " ".join(str(s) for s in states)


def _csv_list(text, conv=str):
    items = [x.strip() for x in text.split(",") if x.strip()]
    if not items:
        raise UsageError("empty list")
    try:
        return [conv(x) for x in items]
    except ValueError:
        raise UsageError(f"bad list item in {text!r}") from None


def cmd_gen(args):
    spec = GenSpec(args.family, args.n, d=args.d, seed=args.seed,
                   buchi_density=args.buchi_density, trap_size=args.trap_size)
    data = serialize_game(generate(spec))
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
    return EXIT_OK


def cmd_solve(args):
    g = _read_game(args.input)
    res, rep = run_solver(SOLVERS[args.algorithm], g, check=args.check)
    print(_ids(res.w2_sorted()))
    print(_ids(res.w1_sorted()))
    status = EXIT_OK
    if args.emit_strategies or args.verify_strategies:
        sigma1, pi2 = extract_strategies(g, res)
        if args.emit_strategies:
            with open(args.emit_strategies, "w") as fh:
                fh.write(format_strategies(sigma1, pi2))
        if args.verify_strategies:
            for who, v in (("player 1", verify_player1(g, res.w1, sigma1)),
                           ("player 2", verify_player2(g, res.w2, pi2))):
                if not v:
                    print(f"{who} strategy rejected ({v.clause}): {v.message}", file=sys.stderr)
                    status = EXIT_FAIL
    if args.metrics == "json":
        text = rep.to_json()
        if args.metrics_out:
            with open(args.metrics_out, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text, file=sys.stderr)
    return status


def cmd_verify(args):
    g = _read_game(args.input)
    if not (args.oracle or args.cross or args.strategies):
        raise UsageError("nothing to verify: pass --oracle, --cross or --strategies")
    failures = []
    results = {}
    if args.cross or args.strategies:
        results = {name: solve(g) for name, solve in SOLVERS.items()}
    if args.cross:
        ref = results["classical"]
        for name, res in results.items():
            if res.w2 != ref.w2:
                diff = sorted(set(res.w2) ^ set(ref.w2))
                failures.append(f"{name} disagrees with classical on states {diff}")
    if args.oracle:
        verdict = oracle_solve(g, cap=args.cap)
        if verdict.w1 != verdict.w1_swapped:
            diff = sorted(set(verdict.w1) ^ set(verdict.w1_swapped))
            failures.append(f"oracle quantifier orders disagree on states {diff}")
        res = results.get("classical") or SOLVERS["classical"](g)
        if res.w2 != verdict.w2:
            diff = sorted(set(res.w2) ^ set(verdict.w2))
            failures.append(f"classical disagrees with the oracle on states {diff}")
        print(f"oracle examined {verdict.strategy_pairs_examined} strategy pairs")
    if args.strategies:
        with open(args.strategies) as fh:
            strategies = parse_strategies(fh.read())
        res = results["classical"]
        for strat in strategies:
            try:
                strat.validate(g)
            except StrategyError as exc:
                failures.append(f"player {strat.player} strategy malformed: {exc}")
                continue
            if strat.player == 1:
                v = verify_player1(g, res.w1, strat)
            else:
                v = verify_player2(g, res.w2, strat)
            if not v:
                failures.append(f"player {strat.player} strategy rejected "
                                f"({v.clause}): {v.message}; witness {v.witness}")
    for line in failures:
        print(line)
    if not failures:
        print("ok")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_bench(args):
    sizes = _csv_list(args.sizes, int)
    algorithms = _csv_list(args.algorithms)
    bad = [a for a in algorithms if a not in SOLVERS]
    if bad:
        raise UsageError(f"unknown algorithms {bad}")
    rows = []
    best = 0.0
    for size in sorted(sizes):
        spec = GenSpec(args.family, size, d=args.d, seed=args.seed,
                       buchi_density=args.buchi_density, trap_size=args.trap_size)
        g = generate(spec)
        for name in algorithms:
            _, rep = run_solver(SOLVERS[name], g)
            best = max(best, rep.envelope_c)
            rows.append(rep.csv_row(args.family, size, args.seed))
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    print(f"max envelope_c = {best:.6g}", file=sys.stderr)
    return EXIT_OK


def build_parser():
    p = _Parser(prog="buchigames", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s report-schema {SCHEMA_VERSION}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="emit a generated game")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--d", type=int, default=2)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--buchi-density", type=float, default=0.5)
    gen.add_argument("--trap-size", type=int, default=1)
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_gen)

    solve = sub.add_parser("solve", help="compute winning regions")
    solve.add_argument("--algorithm", choices=sorted(SOLVERS), default="classical")
    solve.add_argument("--input", default="-")
    solve.add_argument("--metrics", choices=("json", "none"), default="none")
    solve.add_argument("--metrics-out")
    solve.add_argument("--emit-strategies", metavar="FILE")
    solve.add_argument("--verify-strategies", action="store_true")
    solve.add_argument("--check", action="store_true", help="assert invariants while solving")
    solve.set_defaults(func=cmd_solve)

    ver = sub.add_parser("verify", help="cross-check solvers, oracle or strategies")
    ver.add_argument("--input", default="-")
    ver.add_argument("--oracle", action="store_true")
    ver.add_argument("--cross", action="store_true")
    ver.add_argument("--strategies", metavar="FILE")
    ver.add_argument("--cap", type=int, default=DEFAULT_CAP)
    ver.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="CSV of work counts over a size sweep")
    bench.add_argument("--family", choices=FAMILIES, required=True)
    bench.add_argument("--sizes", required=True)
    bench.add_argument("--algorithms", default="classical,alternative,improved,dovetail")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--d", type=int, default=2)
    bench.add_argument("--buchi-density", type=float, default=0.5)
    bench.add_argument("--trap-size", type=int, default=1)
    bench.add_argument("--out")
    bench.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        if isinstance(exc, ParseError):
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        if isinstance(exc, OracleCapExceeded):
            print(f"oracle refused: strategy space {exc.product} exceeds cap {exc.cap}",
                  file=sys.stderr)
            return EXIT_CAP
        if isinstance(exc, StrategyError):
            print(f"strategy file error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
