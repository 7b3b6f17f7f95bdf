"""Command-line front end.

Exit codes: 0 clean, 1 finding (identity mismatch, unimodality
counterexample, failed limit check), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import analysis, bijection, genfun
from .partitions import Partition, oracle_series

EXIT_OK, EXIT_FINDING, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json"), default="plain")
    common.add_argument("--output", "-o", default="-", help="output file (default: stdout)")
    common.add_argument("--threads", type=_pos, default=1, help="worker cap")
    common.add_argument("--timing", action="store_true", help="include elapsed_ms in reports")

    parser = argparse.ArgumentParser(
        prog="kregular",
        description="Generating functions, bijection and unimodality scans for k-regular partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="compare both sides of the identity")
    p.add_argument("--k", type=_pos, default=2)
    p.add_argument("--xmax", type=_nonneg, default=8)
    p.add_argument("--qmax", type=_nonneg, default=24)
    p.add_argument("--left", choices=genfun.LEFT_METHODS, default="product")
    p.add_argument("--right", choices=genfun.RIGHT_METHODS, default="recurrence")

    p = sub.add_parser("table", parents=[common], help="print a-, b- or b_k-polynomials")
    p.add_argument("--which", choices=("a", "b", "b_k"), default="b")
    p.add_argument("--k", type=_pos, default=2)
    p.add_argument("--max", type=_nonneg, default=4, help="bound on the index sum")

    p = sub.add_parser("bijection", help="reduce, trace or rebuild a partition")
    bsub = p.add_subparsers(dest="action", required=True)
    for action in ("reduce", "trace"):
        q = bsub.add_parser(action, parents=[common])
        q.add_argument("--k", type=_pos, default=2)
        q.add_argument("partition", type=_partition, help='e.g. "3 6 10 10 15 19 19"')
    q = bsub.add_parser("build", parents=[common])
    q.add_argument("--k", type=_pos, default=2)
    q.add_argument("--base", type=_partition, required=True, help='e.g. "1 2 3 3 4 5 5"')
    q.add_argument("--lambda", dest="lam", type=_partition, default=Partition())

    p = sub.add_parser("oracle", parents=[common], help="series built by listing partitions")
    p.add_argument("--k", type=_pos, default=2)
    p.add_argument("--xmax", type=_nonneg, default=8)
    p.add_argument("--qmax", type=_nonneg, default=24)

    p = sub.add_parser("scan", parents=[common], help="unimodality scan of b-polynomials")
    p.add_argument("--k", type=_pos, default=2)
    p.add_argument("--bound", type=_nonneg, default=8, help="bound on the index sum")

    p = sub.add_parser("bessel", parents=[common], help="q -> 1 limits and q-analog comparison")
    p.add_argument("--bound", type=_nonneg, default=6)
    return parser


def _cmd_verify(args):
    rep = genfun.verify_identity(args.k, args.xmax, args.qmax, args.left, args.right, workers=args.threads)
    data = rep.to_dict(timing=args.timing)
    lines = [f"k={rep.k} xmax={rep.xmax} qmax={rep.qmax} left={rep.left_method} right={rep.right_method}"]
    lines += [f"mismatch x^{x} q^{q}: lhs={lc} rhs={rc}" for x, q, lc, rc in rep.mismatches]
    lines.append(f"status: {rep.status}")
    if args.timing:
        lines.append(f"elapsed_ms: {data['elapsed_ms']}")
    return data, lines, EXIT_OK if rep.ok else EXIT_FINDING


def _cmd_table(args):
    entries = []
    lines = []
    if args.which in ("a", "b"):
        if args.k != 2:
            raise UsageError(f"table --which {args.which} exists for k = 2 only; use --which b_k")
        fn = genfun.a_recur if args.which == "a" else genfun.b_poly
        for m in range(args.max + 1):
            lines.append(f"m={m}")
            for n in range(args.max - m + 1):
                poly = fn(m, n)
                entries.append({"index": [m, n], "poly": poly.to_json()})
                lines.append(f"  {args.which}({m}, {n}) = {poly}")
    else:
        for idx in genfun.iter_indices_by_sum(args.k, args.max):
            poly = genfun.b_poly_k(args.k, idx)
            entries.append({"index": list(idx), "poly": poly.to_json()})
            lines.append(f"b{idx} = {poly}")
    data = {"which": args.which, "k": args.k, "max": args.max, "entries": entries}
    return data, lines, EXIT_OK


def _pair_dict(red: bijection.ReducedPair) -> dict:
    out = {
        "k": red.k,
        "base": str(red.base),
        "word": list(red.word),
        "lambda": str(red.lam),
    }
    if red.k == 2:
        out["pairs"] = red.pairs
        out["singletons"] = red.singletons
        out["repeat_positions"] = list(red.repeat_positions)
        out["forbidden"] = sorted(bijection.forbidden_sizes(red.pairs, red.singletons, red.repeat_positions))
    return out


def _cmd_bijection(args):
    if args.action == "build":
        red = bijection.ReducedPair.from_base(args.base, args.lam, args.k)
        result = bijection.build(red)
        return {"k": args.k, "base": str(red.base), "lambda": str(red.lam), "partition": str(result)}, [
            str(result)
        ], EXIT_OK
    red = bijection.reduce(args.partition, args.k)
    if args.action == "reduce":
        data = _pair_dict(red)
        data["partition"] = str(args.partition)
        return data, [f"base={red.base}", f"lambda={red.lam}"], EXIT_OK
    steps = [
        {"step": i, "partition": str(part), "lambda": str(lam)}
        for i, (part, lam) in enumerate(bijection.reduce_trace(args.partition, args.k), start=1)
    ]
    data = {"partition": str(args.partition), "steps": steps, "result": _pair_dict(red)}
    return data, bijection.format_trace(args.partition, args.k), EXIT_OK


def _cmd_oracle(args):
    ser = oracle_series(args.k, args.xmax, args.qmax)
    data = {"k": args.k, "series": ser.to_json()}
    lines = [f"x^{d}: {s}" for d, s in ser.items()]
    return data, lines, EXIT_OK


def _cmd_scan(args):
    rep = analysis.scan_unimodality(args.k, args.bound)
    data = rep.to_dict(timing=args.timing)
    lines = [f"k={rep.k} sum_bound={rep.sum_bound} checked={rep.checked} (expected {rep.expected_count})"]
    lines += [f"counterexample b{idx} = {poly}" for idx, poly in rep.counterexamples]
    lines.append(f"counterexamples: {len(rep.counterexamples)}")
    return data, lines, EXIT_OK if rep.holds else EXIT_FINDING


def _cmd_bessel(args):
    limits = []
    for m in range(args.bound + 1):
        for n in range(args.bound - m + 1):
            lim = analysis.limit_q1(genfun.b_poly(m, n))
            limits.append({"m": m, "n": n, "limit": str(lim), "bessel": str(analysis.bessel_coeff(m, n))})
    ok = analysis.bessel_limit_check(args.bound)
    mism = analysis.q_bessel_mismatch(args.bound)
    data = {
        "bound": args.bound,
        "limit_check": ok,
        "limits": limits,
        "q_analog_mismatches": [
            {"m": m, "n": n, "b": genfun.b_poly(m, n).to_json(), "q_analog": analysis.q_bessel_analog(m, n).to_json()}
            for m, n in mism
        ],
    }
    lines = [f"b({e['m']}, {e['n']})(1) = {e['limit']}  bessel = {e['bessel']}" for e in limits]
    lines.append(f"limit check: {'pass' if ok else 'FAIL'}")
    lines += [
        f"differs at ({m}, {n}): b = {genfun.b_poly(m, n)}  q-analog = {analysis.q_bessel_analog(m, n)}"
        for m, n in mism
    ]
    total = comb(args.bound + 1, 2)
    lines.append(f"q-analog differs at {len(mism)} of {total} pairs with m >= 1")
    return data, lines, EXIT_OK if ok else EXIT_FINDING


COMMANDS = {
    "verify": _cmd_verify,
    "table": _cmd_table,
    "bijection": _cmd_bijection,
    "oracle": _cmd_oracle,
    "scan": _cmd_scan,
    "bessel": _cmd_bessel,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        data, lines, code = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"kregular: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(data, indent=2) if args.format == "json" else "\n".join(lines)
    if args.output == "-":
        print(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
