"""Command line entry point: ``polysuffix <sort|factorize|verify|bench>``.

Exit codes: 0 success or match, 1 verification mismatch, 2 I/O or usage
error, 3 input outside the packed-encoding caps.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .alphabet import build_alphabet
from .encoding import dump_buffers
from .errors import CapViolation, EmptyInput
from .oracle import compare_arrays, oracle_doubling, oracle_naive, random_text, verify
from .parallel import ENV_WORKERS, ParallelConfig, parallel_map_suffixes
from .polynomial import factorize, render_key, render_polynomial
from .suffix_sort import suffix_array

EXIT_OK, EXIT_MISMATCH, EXIT_IO, EXIT_CAP = 0, 1, 2, 3

ENGINES = {
    "naive": lambda text, config: oracle_naive(text),
    "doubling": lambda text, config: oracle_doubling(text),
    "poly": lambda text, config: suffix_array(text, config),
}


class InputError(Exception):
    pass


def read_text(path: str, keep_trailing_newline: bool = False) -> bytes:
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if not keep_trailing_newline and data.endswith(b"\n"):
        data = data[:-2] if data.endswith(b"\r\n") else data[:-1]
    return data


def show(text) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8", "backslashreplace")
    return str(text)


def _int_list(value: str) -> list[int]:
    try:
        out = [int(v) for v in value.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}")
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("worker counts must be >= 1")
    return out


def _engine_list(value: str) -> list[str]:
    out = [v for v in value.split(",") if v]
    bad = [v for v in out if v not in ENGINES]
    if bad or not out:
        raise argparse.ArgumentTypeError(f"unknown engine(s) {bad}; choose from {sorted(ENGINES)}")
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polysuffix", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=["sort", "factorize", "verify", "bench"])
    parser.add_argument("--input", default="-", help="input file, or - for standard input (default)")
    parser.add_argument(
        "--engine",
        type=_engine_list,
        default=["poly"],
        help="poly, naive or doubling; bench accepts a comma-separated list",
    )
    parser.add_argument("--format", choices=["tsv", "json", "paper-table"], default="tsv")
    parser.add_argument(
        "--workers",
        type=_int_list,
        default=None,
        help=f"worker count (bench accepts a list such as 1,4); falls back to ${ENV_WORKERS}",
    )
    parser.add_argument("--chunk", type=int, default=256, help="index range size per work item")
    parser.add_argument("--backend", choices=["thread", "process"], default="thread")
    parser.add_argument("--random", type=int, default=None, metavar="N", help="verify N random texts instead of the input")
    parser.add_argument("--seed", type=int, default=0, help="seed for --random")
    parser.add_argument("--repeat", type=int, default=1, help="bench: best of this many runs")
    parser.add_argument("--binary", action="store_true", help="factorize: dump packed buffers as little-endian words")
    parser.add_argument("--keep-trailing-newline", action="store_true")
    return parser


def emit_json(command, n, result, timings, **extra):
    doc = {"command": command, "n": n, "result": result, "timings": timings}
    doc.update(extra)
    print(json.dumps(doc))


def cmd_sort(args, text, config) -> int:
    engine = args.engine[0]
    t0 = time.perf_counter()
    sa = ENGINES[engine](text, config).tolist()
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        emit_json("sort", len(text), sa, {engine: elapsed})
    elif args.format == "paper-table":
        polys = dict(factor_rows(text))
        print("Buckets\tCoefficient\tResidue\tSorted substrings")
        for i in sa:
            head, rest = polys[i].factors[0], polys[i].factors[1:]
            print(f"{render_key(head.degrees)}\t{head.coefficient}\t{render_polynomial(rest) or '-'}\t{show(text[i:])}")
    else:
        for i in sa:
            print(i)
    return EXIT_OK


def factor_rows(text):
    alphabet = build_alphabet(text)
    degrees = alphabet.degrees(text)
    for i in range(len(text)):
        p = factorize(degrees[i:], source_index=i)
        yield i, p


def cmd_factorize(args, text, config) -> int:
    if args.engine != ["poly"]:
        raise argparse.ArgumentTypeError("factorize requires --engine poly")
    if args.binary:
        buffers = parallel_map_suffixes(text, config)
        sys.stdout.buffer.write(dump_buffers(buffers))
        sys.stdout.buffer.flush()
        return EXIT_OK
    rows = []
    for i, p in factor_rows(text):
        head = p.factors[0]
        rows.append(
            {
                "index": i,
                "suffix": show(text[i:]),
                "polynomial": render_polynomial(p),
                "bucket": render_key(head.degrees),
                "coefficient": head.coefficient,
            }
        )
    # the packed encoding must accept everything we print
    parallel_map_suffixes(text, config)
    if args.format == "json":
        emit_json("factorize", len(text), rows, {})
    elif args.format == "paper-table":
        print("String\tPolynomial Representation\tBucket Assigned")
        for r in rows:
            print(f"{r['suffix']}\t{r['polynomial']}\t{r['bucket']}")
    else:
        for r in rows:
            print(f"{r['index']}\t{r['suffix']}\t{r['polynomial']}\t{r['bucket']}\t{r['coefficient']}")
    return EXIT_OK


def cmd_verify(args, text, config) -> int:
    t0 = time.perf_counter()
    if args.random is not None:
        rng = random.Random(args.seed)
        failures = []
        for _ in range(args.random):
            sample = random_text(rng)
            report = verify(sample, config)
            if not report.matches:
                failures.append({"text": sample, "first_divergence": report.first_divergence})
        elapsed = time.perf_counter() - t0
        ok = not failures
        if args.format == "json":
            emit_json("verify", args.random, {"matches": ok, "cases": args.random, "failures": failures}, {"verify": elapsed})
        else:
            print(f"{'match' if ok else 'mismatch'}\t{args.random - len(failures)}/{args.random}")
            for f in failures[:10]:
                print(f"mismatch at {f['first_divergence']}\t{f['text']}")
        return EXIT_OK if ok else EXIT_MISMATCH

    report = verify(text, config)
    elapsed = time.perf_counter() - t0
    if args.format == "json":
        emit_json(
            "verify",
            len(text),
            {"matches": report.matches, "first_divergence": report.first_divergence},
            {"verify": elapsed},
        )
    elif report.matches:
        print("match")
    else:
        print(f"mismatch\tfirst divergence at {report.first_divergence}")
    return EXIT_OK if report.matches else EXIT_MISMATCH


def _best_time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(max(1, repeat)):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cmd_bench(args, text, config) -> int:
    worker_counts = args.workers or [config.workers]
    rows = []
    outputs = {}
    for engine in args.engine:
        counts = worker_counts if engine == "poly" else [1]
        for w in counts:
            cfg = ParallelConfig(workers=w, chunk=args.chunk, backend=config.backend)
            seconds, sa = _best_time(lambda: ENGINES[engine](text, cfg), args.repeat)
            rows.append({"engine": engine, "workers": w, "seconds": seconds})
            outputs[(engine, w)] = sa
    reference = oracle_naive(text)
    verified = all(compare_arrays(sa, reference).matches for sa in outputs.values())
    if args.format == "json":
        emit_json("bench", len(text), rows, {f"{r['engine']}/{r['workers']}": r["seconds"] for r in rows}, verified=verified)
    else:
        print("engine\tworkers\tseconds")
        for r in rows:
            print(f"{r['engine']}\t{r['workers']}\t{r['seconds']:.6f}")
        print(f"verified: {str(verified).lower()}")
    return EXIT_OK if verified else EXIT_MISMATCH


COMMANDS = {"sort": cmd_sort, "factorize": cmd_factorize, "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.workers is None:
            config = ParallelConfig.from_env(chunk=args.chunk, backend=args.backend)
        else:
            config = ParallelConfig(workers=args.workers[0], chunk=args.chunk, backend=args.backend)
    except ValueError as exc:
        parser.error(str(exc))
    if args.command != "bench" and len(args.engine) > 1:
        parser.error("only bench accepts several engines")

    try:
        text = b"" if args.random is not None and args.command == "verify" else read_text(
            args.input, args.keep_trailing_newline
        )
        if not text and not (args.random is not None and args.command == "verify"):
            raise EmptyInput("input is empty")
        return COMMANDS[args.command](args, text, config)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except InputError as exc:
        print(f"polysuffix: {exc}", file=sys.stderr)
        return EXIT_IO
    except EmptyInput as exc:
        print(f"polysuffix: EmptyInput: {exc}", file=sys.stderr)
        return EXIT_IO
    except CapViolation as exc:
        print(f"polysuffix: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
