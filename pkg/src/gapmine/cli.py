"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 format error, 4 oracle size refusal.
Errors are also reported on stderr as one JSON object with an ``error``
category and a ``message``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from gapmine.baseline import OracleLimitError
from gapmine.bench import BenchConfig, bench_grid, make_synthetic_corpus, rows_to_csv, run_algo, write_corpus
from gapmine.formats import (
    DatasetSummary,
    FormatError,
    load,
    parse_query,
    render_csv,
    render_json,
    result_rows,
)
from gapmine.model import ContractError, MiningParams
from gapmine.result import Strategies
from gapmine.search import MAXLEN_BELOW_QUERY

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_LIMIT = 4


class UsageError(Exception):
    pass


def _fail(category: str, message: str, code: int) -> int:
    print(json.dumps({"error": category, "message": message}), file=sys.stderr)
    return code


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_constraints(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mingap", type=int, default=0)
    p.add_argument("--maxgap", type=int, default=3)
    p.add_argument("--minlen", type=int, default=1)
    p.add_argument("--maxlen", type=int, default=10)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapmine",
        description="Targeted non-overlapping sequential pattern mining with gap and length constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="mine frequent target patterns")
    run.add_argument("--input", required=True)
    run.add_argument("--format", choices=["chars", "spmf"], default="chars")
    run.add_argument("--flatten", action="store_true", help="split multi-item itemsets (spmf)")
    run.add_argument("--minsup", type=int, required=True)
    _add_constraints(run)
    run.add_argument("--query", required=True,
                     help="characters (chars) or comma-separated integers (spmf)")
    run.add_argument("--algo", choices=["bfs", "dfs", "baseline", "oracle"], default="dfs")
    run.add_argument("--no-sprp", action="store_true")
    run.add_argument("--no-iprp", action="store_true")
    run.add_argument("--no-bpep", action="store_true")
    run.add_argument("--no-dpep", action="store_true")
    run.add_argument("--iprp-mode", choices=["safe", "anchored"], default="safe")
    run.add_argument("--output")
    run.add_argument("--output-format", choices=["csv", "json"], default="csv")
    run.add_argument("--stats", help="write run statistics as JSON")

    bench = sub.add_parser("bench", help="run a benchmark grid and write CSV")
    bench.add_argument("--input", help="dataset (default: bundled synthetic corpus)")
    bench.add_argument("--format", choices=["chars", "spmf"], default="chars")
    bench.add_argument("--flatten", action="store_true")
    bench.add_argument("--minsup", type=_int_list, required=True, help="e.g. 40,60,80")
    bench.add_argument("--query", action="append", required=True, help="repeat for several queries")
    bench.add_argument("--algo", default="bfs,dfs,baseline")
    bench.add_argument("--variant", default="v2", help="v1 (extension pruning only), v2 (all)")
    _add_constraints(bench)
    bench.add_argument("--jobs", type=int, default=1, help="parallel cells; drops timing columns")
    bench.add_argument("--measure-memory", action="store_true")
    bench.add_argument("--output")

    synth = sub.add_parser("synth", help="write a synthetic protein-like corpus")
    synth.add_argument("--output", required=True)
    synth.add_argument("-n", type=int, default=200)
    synth.add_argument("--seed", type=int, default=7)
    return parser


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_run(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    db = load(args.input, args.format, args.flatten)
    load_time = time.perf_counter() - t0
    query = parse_query(args.query, db.symbols)
    params = MiningParams.build(args.minsup, (args.mingap, args.maxgap),
                                (args.minlen, args.maxlen), query)
    strategies = Strategies(
        sprp=not args.no_sprp, iprp=not args.no_iprp,
        bpep=not args.no_bpep, dpep=not args.no_dpep, iprp_mode=args.iprp_mode,
    )
    result = run_algo(args.algo, db, params, strategies)
    result.stats.timings["load"] = load_time
    if MAXLEN_BELOW_QUERY in result.stats.flags:
        print(f"warning: maxlen {args.maxlen} is shorter than the query; no pattern can match",
              file=sys.stderr)

    rows = result_rows(result, db.symbols)
    text = render_csv(rows) if args.output_format == "csv" else render_json(rows)
    _write(text, args.output)
    if args.stats:
        payload = {
            "algo": args.algo,
            "params": {
                "minsup": args.minsup, "gap": [args.mingap, args.maxgap],
                "len": [args.minlen, args.maxlen], "query": args.query,
            },
            "strategies": {
                "sprp": strategies.sprp, "iprp": strategies.iprp, "bpep": strategies.bpep,
                "dpep": strategies.dpep, "iprp_mode": strategies.iprp_mode,
            },
            "dataset": DatasetSummary.of(db).to_dict(),
            "stats": result.stats.to_dict(),
        }
        Path(args.stats).write_text(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    config = BenchConfig(
        minsups=args.minsup,
        queries=args.query,
        algos=[a.strip() for a in args.algo.split(",") if a.strip()],
        variants=[v.strip() for v in args.variant.split(",") if v.strip()],
        gap=(args.mingap, args.maxgap),
        length=(args.minlen, args.maxlen),
        input=args.input,
        format=args.format,
        flatten=args.flatten,
        jobs=args.jobs,
        measure_memory=args.measure_memory,
    )
    for algo in config.algos:
        if algo not in ("bfs", "dfs", "baseline", "oracle"):
            raise UsageError(f"unknown algorithm {algo!r}")
    for v in config.variants:
        if v not in ("v1", "v2"):
            raise UsageError(f"unknown variant {v!r}")
    _write(rows_to_csv(bench_grid(config)), args.output)
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    write_corpus(make_synthetic_corpus(args.n, args.seed), args.output)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"run": cmd_run, "bench": cmd_bench, "synth": cmd_synth}
    try:
        return handlers[args.command](args)
    except (ContractError, UsageError) as e:
        return _fail("usage", str(e), EXIT_USAGE)
    except FormatError as e:
        return _fail("format", str(e), EXIT_FORMAT)
    except OracleLimitError as e:
        return _fail("resource_limit", str(e), EXIT_LIMIT)


if __name__ == "__main__":
    sys.exit(main())
