"""Command line front end: bitrev-bench run | tune-cobra | verify."""

import argparse
import logging
import sys

from .bench import (
    BenchConfig,
    METHOD_IDS,
    make_method,
    run_benchmark,
    tune_cobra,
    write_csv,
)
from .schedule import SCHEDULE_MAX_BITS
from .verify import audit_swap_counts, check_method

log = logging.getLogger("bitrev.cli")


def _parse_bits(text: str) -> tuple[int, int]:
    """'8..12' or a bare '8'."""
    lo, sep, hi = text.partition("..")
    try:
        b_min = int(lo)
        b_max = int(hi) if sep else b_min
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad bit range {text!r}, want MIN..MAX") from None
    return b_min, b_max


def _parse_qrange(text: str) -> list[int]:
    lo, hi = _parse_bits(text)
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty q range {text!r}")
    return list(range(lo, hi + 1))


def _parse_methods(text: str) -> tuple[str, ...]:
    if text == "all":
        return METHOD_IDS
    return tuple(m.strip() for m in text.split(",") if m.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitrev-bench",
        description="Benchmark and verify bit-reversed permutation methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="time methods over a size range and write CSV")
    run.add_argument("--methods", type=_parse_methods, default=METHOD_IDS,
                     metavar="A,B,...", help=f"comma list or 'all' (default); ids: {', '.join(METHOD_IDS)}")
    run.add_argument("--bits", type=_parse_bits, default=(8, 20), metavar="MIN..MAX")
    run.add_argument("--replicates", type=int, default=100, metavar="N")
    run.add_argument("--warmup", type=int, default=3, metavar="K")
    run.add_argument("--seed", type=int, default=0, metavar="S")
    run.add_argument("--cobra-q", default=None, metavar="Q|auto",
                     help="buffer block bits; 'auto' tunes per size")
    run.add_argument("--base-bits", type=int, default=9, metavar="B")
    run.add_argument("--depth-limit", type=int, default=1, metavar="D")
    run.add_argument("--threads", type=int, default=0, metavar="T",
                     help="workers for the parallel method; 0 = BITREV_THREADS or CPU count")
    run.add_argument("--verify", action="store_true",
                     help="check the final state of every cell against the oracle")
    run.add_argument("--mem-cap-gib", type=float, default=1.0, metavar="G",
                     help="per-cell allocation estimate cap (raise to reach b=30)")
    run.add_argument("--out", default="bench.csv", metavar="FILE.csv")

    tune = sub.add_parser("tune-cobra", help="pick the fastest buffer width for one size")
    tune.add_argument("--bits", type=int, required=True, metavar="B")
    tune.add_argument("--q", type=_parse_qrange, required=True, metavar="LO..HI")
    tune.add_argument("--replicates", type=int, default=5, metavar="N")
    tune.add_argument("--in-place", action="store_true", help="tune the in-place variant")
    tune.add_argument("--seed", type=int, default=0, metavar="S")
    tune.add_argument("--out", default=None, metavar="FILE.csv",
                      help="also write the full timing table")

    ver = sub.add_parser("verify", help="check every method against the oracle")
    ver.add_argument("--bits", type=int, default=14, metavar="MAX")
    ver.add_argument("--trials", type=int, default=1, metavar="N")
    ver.add_argument("--threads", type=int, default=0, metavar="T")
    return parser


def _cmd_run(args) -> int:
    cobra_q = None
    tune_q = False
    if args.cobra_q is not None:
        if args.cobra_q == "auto":
            tune_q = True
        else:
            cobra_q = int(args.cobra_q)
    cfg = BenchConfig(
        methods=tuple(args.methods),
        b_min=args.bits[0],
        b_max=args.bits[1],
        replicates=args.replicates,
        warmup=args.warmup,
        cobra_q=cobra_q,
        tune_cobra_q=tune_q,
        base_bits=args.base_bits,
        depth_limit=args.depth_limit,
        threads=args.threads,
        seed=args.seed,
        verify=args.verify,
        out=args.out,
        memory_cap_bytes=int(args.mem_cap_gib * 2**30),
    )
    records = run_benchmark(cfg)
    write_csv(records, cfg.out)
    print(f"wrote {len(records)} records to {cfg.out}")
    return 0


def _cmd_tune(args) -> int:
    variant = "cobra_inplace" if args.in_place else "cobra"
    result = tune_cobra(
        args.bits,
        args.q,
        replicates=args.replicates,
        seed=args.seed,
        variant=variant,
    )
    print(f"{variant} at b={args.bits}:")
    for q in sorted(result.means):
        marker = " <- best" if q == result.best_q else ""
        print(f"  q={q:<2d} mean {result.means[q] / (1 << args.bits):.3e} s/element{marker}")
    if args.out:
        write_csv(result.records, args.out)
        print(f"wrote {len(result.records)} records to {args.out}")
    return 0


def _cmd_verify(args) -> int:
    failures = 0
    for method in METHOD_IDS:
        fn = make_method(method, threads=args.threads)
        report = check_method(fn, args.bits, trials=args.trials, name=method)
        print(report.summary())
        failures += not report.passed
    audit_max = min(args.bits, SCHEDULE_MAX_BITS)
    audit = audit_swap_counts(audit_max)
    bad = [b for b, ok in audit.items() if not ok]
    print(f"swap counts b=1..{audit_max}: " + ("ok" if not bad else f"FAIL at {bad}"))
    failures += bool(bad)
    return 1 if failures else 0


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "tune-cobra":
        return _cmd_tune(args)
    return _cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
