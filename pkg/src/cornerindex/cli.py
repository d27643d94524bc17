"""Command-line front end.

Subcommands: build, query, pnf, verify, experiment, bench. Exit codes:
0 success, 1 verification failure, 2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .corner import CornerIndex, build_index
from .oracle import (
    DEFAULT_MAX_TEXT,
    TextTooLongError,
    lemma1_witness_check,
    parikh_set_bruteforce,
    verify_interval_lemma,
)
from .persist import (
    CorruptIndexError,
    IndexFormatError,
    load_index,
    save_index,
)
from .pnf import pnf_from_index, verify_pnf_relations
from .rle import InputFormatError, encode, rho
from .textgen import coin_string, geometric_run_string

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

_TO_AB = str.maketrans("01", "ab")
_FROM_AB = str.maketrans("ab", "01")


def _read_text(path: str, alphabet: str) -> str:
    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            raw = fh.read()
    raw = raw.strip()
    if alphabet == "01":
        bad = re.search(r"[^01]", raw)
        if bad is not None:
            raise InputFormatError(
                f"invalid character {bad.group()!r} at index {bad.start()}; "
                "expected '0' or '1'",
                position=bad.start(),
            )
        return raw.translate(_TO_AB)
    return raw


def _map_out(s: str, alphabet: str) -> str:
    return s.translate(_FROM_AB) if alphabet == "01" else s


def _emit(fmt: str, fields: list[tuple[str, object]], out) -> None:
    if fmt == "jsonl":
        print(json.dumps(dict(fields)), file=out)
    elif fmt == "tsv":
        print("\t".join(k for k, _ in fields), file=out)
        print("\t".join(str(v) for _, v in fields), file=out)
    else:
        print("  ".join(f"{k}={v}" for k, v in fields), file=out)


def cmd_build(args) -> int:
    text = _read_text(args.input, args.alphabet)
    t0 = time.perf_counter()
    rle = encode(text)
    index = build_index(text)
    elapsed = time.perf_counter() - t0
    save_index(index, args.index)
    _emit(
        args.format,
        [
            ("n", index.n),
            ("rho", rho(rle)),
            ("lmin", len(index.l_min)),
            ("lmax", len(index.l_max)),
            ("peak_min", index.peak_min),
            ("peak_max", index.peak_max),
            ("elapsed_s", f"{elapsed:.3f}"),
        ],
        sys.stdout,
    )
    return EXIT_OK


def cmd_query(args) -> int:
    index = load_index(args.index)
    if args.input == "-":
        lines = sys.stdin
        close = None
    else:
        close = open(args.input, "r", encoding="ascii")
        lines = close
    bad_lines = 0
    try:
        for lineno, line in enumerate(lines, start=1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            try:
                if len(parts) != 2:
                    raise ValueError("expected two integers")
                x, y = int(parts[0]), int(parts[1])
            except ValueError as exc:
                bad_lines += 1
                print(f"line {lineno}: malformed query ({exc})", file=sys.stderr)
                continue
            verdict = index.query(x, y)
            if args.format == "jsonl":
                print(json.dumps({"x": x, "y": y, "occurs": verdict}))
            elif args.format == "tsv":
                print(f"{x}\t{y}\t{int(verdict)}")
            else:
                print(f"{x} {y} {'occurs' if verdict else 'not-occurs'}")
    finally:
        if close is not None:
            close.close()
    return EXIT_USAGE if bad_lines else EXIT_OK


def cmd_pnf(args) -> int:
    if (args.input is None) == (args.index is None):
        print("pnf: provide exactly one of --input or --index", file=sys.stderr)
        return EXIT_USAGE
    if args.input is not None:
        index = build_index(_read_text(args.input, args.alphabet))
    else:
        index = load_index(args.index)
    pair = pnf_from_index(index)
    print(_map_out(pair.pnf_a, args.alphabet))
    print(_map_out(pair.pnf_b, args.alphabet))
    return EXIT_OK


def _verify_one(text: str, max_n: int) -> list[tuple[str, bool]]:
    index = build_index(text)
    pi = parikh_set_bruteforce(text, max_n)
    grid_ok = True
    for x in range(index.total_a + 2):
        for y in range(index.total_b + 2):
            if index.query(x, y) != ((x, y) in pi):
                grid_ok = False
                break
        if not grid_ok:
            break
    checks = [("oracle-grid", grid_ok)]
    checks.append(("interval-lemma", verify_interval_lemma(text, max_n)))
    checks.append(("run-span-witnesses", lemma1_witness_check(text, max_n)))
    checks.append(("pnf-relations", verify_pnf_relations(index, pnf_from_index(index))))
    return checks


def cmd_verify(args) -> int:
    if (args.input is None) == (args.count is None):
        print("verify: provide exactly one of --input or --count", file=sys.stderr)
        return EXIT_USAGE
    if args.input is not None:
        texts = [_read_text(args.input, args.alphabet)]
    else:
        if args.length is None:
            print("verify: --count requires --length", file=sys.stderr)
            return EXIT_USAGE
        rng = random.Random(args.seed)
        texts = []
        for _ in range(args.count):
            length = rng.randint(1, args.length)
            if args.run_geometric is not None:
                texts.append(geometric_run_string(rng, length, args.run_geometric))
            else:
                texts.append(coin_string(rng, length))
    failures = 0
    for i, text in enumerate(texts):
        for name, ok in _verify_one(text, args.max_oracle_n):
            if not ok:
                failures += 1
                print(f"string {i}: {name}: FAIL")
            elif len(texts) == 1:
                print(f"{name}: PASS")
    if len(texts) > 1:
        print(f"verified {len(texts)} strings, {failures} failing checks")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def cmd_experiment(args) -> int:
    rng = random.Random(args.seed)
    texts: list[str] = []
    if args.input is not None:
        texts.append(_read_text(args.input, args.alphabet))
    else:
        if args.length is None or args.length < 1:
            print("experiment: --length must be at least 1", file=sys.stderr)
            return EXIT_USAGE
        for _ in range(args.count):
            if args.run_geometric is not None:
                texts.append(geometric_run_string(rng, args.length, args.run_geometric))
            else:
                texts.append(coin_string(rng, args.length))
    rows = []
    for text in texts:
        index = build_index(text)
        rows.append(
            (
                index.n,
                rho(encode(text)),
                len(index.l_min),
                len(index.l_max),
                index.peak_min,
                index.peak_max,
            )
        )
    header = ("n", "rho", "lmin", "lmax", "peak_min", "peak_max")
    if args.format == "jsonl":
        for row in rows:
            print(json.dumps(dict(zip(header, row))))
    else:
        print("\t".join(header))
        for row in rows:
            print("\t".join(str(v) for v in row))
    if rows:
        from statistics import median

        ratios_min = [r[2] / r[1] for r in rows if r[1]]
        ratios_max = [r[3] / r[1] for r in rows if r[1]]
        peak_ratio_min = [r[4] / r[2] for r in rows]
        peak_ratio_max = [r[5] / r[3] for r in rows]
        summary = {
            "median_lmin_over_rho": median(ratios_min) if ratios_min else None,
            "median_lmax_over_rho": median(ratios_max) if ratios_max else None,
            "median_peak_over_final_min": median(peak_ratio_min),
            "median_peak_over_final_max": median(peak_ratio_max),
        }
        if args.format == "jsonl":
            print(json.dumps({"summary": summary}))
        else:
            for key, value in summary.items():
                shown = "NA" if value is None else f"{value:.4f}"
                print(f"# {key}\t{shown}")
    return EXIT_OK


def _bench_worker(index: CornerIndex, queries) -> tuple[list[int], int]:
    timer = time.perf_counter_ns
    latencies = []
    hits = 0
    for x, y in queries:
        t0 = timer()
        if index.query(x, y):
            hits += 1
        latencies.append(timer() - t0)
    return latencies, hits


def cmd_bench(args) -> int:
    index = load_index(args.index)
    rng = random.Random(args.seed)
    queries = [
        (rng.randint(0, index.total_a), rng.randint(0, index.total_b))
        for _ in range(args.count)
    ]
    t0 = time.perf_counter()
    if args.threads <= 1 or not queries:
        results = [_bench_worker(index, queries)]
    else:
        chunk = (len(queries) + args.threads - 1) // args.threads
        batches = [queries[i : i + chunk] for i in range(0, len(queries), chunk)]
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(lambda b: _bench_worker(index, b), batches))
    wall = time.perf_counter() - t0
    latencies = sorted(ns for lats, _ in results for ns in lats)
    hits = sum(h for _, h in results)

    def pct(p: float) -> float:
        if not latencies:
            return 0.0
        k = min(len(latencies) - 1, int(p / 100.0 * len(latencies)))
        return latencies[k] / 1000.0

    fields = [
        ("queries", len(queries)),
        ("threads", args.threads),
        ("occurs", hits),
        ("not_occurs", len(queries) - hits),
        ("p50_us", f"{pct(50):.3f}"),
        ("p90_us", f"{pct(90):.3f}"),
        ("p99_us", f"{pct(99):.3f}"),
        ("max_us", f"{(latencies[-1] / 1000.0) if latencies else 0.0:.3f}"),
        ("throughput_qps", f"{(len(queries) / wall) if wall > 0 else 0.0:.0f}"),
        ("elapsed_s", f"{wall:.4f}"),
    ]
    _emit(args.format, fields, sys.stdout)
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, *flags: str) -> None:
    if "alphabet" in flags:
        p.add_argument("--alphabet", choices=("ab", "01"), default="ab",
                       help="letter pair used in text input/output")
    if "format" in flags:
        p.add_argument("--format", choices=("human", "tsv", "jsonl"),
                       default="human", help="output format")
    if "seed" in flags:
        p.add_argument("--seed", type=int, default=0,
                       help="random seed; fully determines generated inputs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cornerindex",
        description="Index a binary string for jumbled (letter-count) "
        "substring queries, using corner lists built from its run-length "
        "encoding.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an index from text")
    p.add_argument("--input", required=True, help="text file, or - for stdin")
    p.add_argument("--index", required=True, help="output index path")
    _add_common(p, "alphabet", "format")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("query", help="answer 'x y' query lines")
    p.add_argument("--index", required=True, help="index file to load")
    p.add_argument("--input", default="-", help="query lines, or - for stdin")
    _add_common(p, "format")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("pnf", help="print both prefix normal forms")
    p.add_argument("--input", help="text file, or - for stdin")
    p.add_argument("--index", help="previously built index")
    _add_common(p, "alphabet", "format")
    p.set_defaults(func=cmd_pnf)

    p = sub.add_parser("verify", help="cross-check the index against brute force")
    p.add_argument("--input", help="text file, or - for stdin")
    p.add_argument("--count", type=int, help="number of random strings instead")
    p.add_argument("--length", type=int, help="max length of random strings")
    p.add_argument("--run-geometric", type=float, metavar="P",
                   help="draw run lengths geometrically with parameter P")
    p.add_argument("--max-oracle-n", type=int, default=DEFAULT_MAX_TEXT,
                   help="refuse brute-force work beyond this text length")
    _add_common(p, "alphabet", "seed")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="tabulate list sizes over random strings")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--length", type=int, default=1024)
    p.add_argument("--run-geometric", type=float, metavar="P",
                   help="draw run lengths geometrically with parameter P")
    p.add_argument("--input", help="fixed text file instead of random strings")
    _add_common(p, "alphabet", "format", "seed")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("bench", help="time random queries against an index")
    p.add_argument("--index", required=True)
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--threads", type=int, default=1)
    _add_common(p, "format", "seed")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputFormatError, IndexFormatError, CorruptIndexError,
            TextTooLongError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
