"""Deterministic worker-pool execution of the suffix pipeline.

Work is split into contiguous index ranges of ``chunk`` items.  Each task
reads shared, read-only inputs and returns its results; the caller writes
them into their slots, so every slot has exactly one writer and the output
does not depend on ``workers`` or ``chunk``.

The default thread backend shares memory with the caller.  The pure-Python
stages hold the GIL, so the process backend is what actually spreads CPU
work across cores.
"""

from __future__ import annotations

import os
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .alphabet import Alphabet, build_alphabet
from .buckets import Bucket, order_buckets, sort_within_bucket
from .encoding import WORD, encode_factor
from .polynomial import factor_at, run_ends

ENV_WORKERS = "POLYSUFFIX_WORKERS"


@dataclass(frozen=True)
class ParallelConfig:
    workers: int = 1
    chunk: int = 256
    backend: str = "thread"

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.chunk < 1:
            raise ValueError("chunk must be >= 1")
        if self.backend not in ("thread", "process"):
            raise ValueError(f"unknown backend {self.backend!r}")

    @classmethod
    def from_env(cls, default: int = 1, **kwargs) -> "ParallelConfig":
        workers = int(os.environ.get(ENV_WORKERS, default))
        return cls(workers=workers, **kwargs)

    def executor(self) -> Executor:
        if self.backend == "process":
            return ProcessPoolExecutor(max_workers=self.workers)
        return ThreadPoolExecutor(max_workers=self.workers)


def chunk_ranges(n: int, chunk: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]


def run_tasks(fn: Callable, tasks: Sequence[tuple], config: ParallelConfig) -> list:
    """Apply ``fn(*task)`` to every task; results come back in task order."""
    if config.workers == 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with config.executor() as pool:
        return list(pool.map(fn, *zip(*tasks)))


def _lead_words(degrees, ends, lo, hi):
    words, nexts = [], []
    for i in range(lo, hi):
        f, j = factor_at(degrees, i, ends)
        words.append(encode_factor(f))
        nexts.append(j)
    return words, nexts


def leading_factor_table(degrees: Sequence[int], config: ParallelConfig | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Encoded leading factor of every suffix and the start of its residue.

    Because factorization is a left-to-right scan, the factor tail of suffix
    ``i`` is exactly the factorization of suffix ``next[i]``.
    """
    config = config or ParallelConfig()
    degrees = list(map(int, degrees))
    ends = run_ends(degrees)
    tasks = [(degrees, ends, lo, hi) for lo, hi in chunk_ranges(len(degrees), config.chunk)]
    words, nexts = [], []
    for w, nx in run_tasks(_lead_words, tasks, config):
        words.extend(w)
        nexts.extend(nx)
    return np.array(words, dtype=WORD), np.array(nexts, dtype=np.int64)


def assemble_buffers(words: np.ndarray, nexts: np.ndarray) -> list[np.ndarray]:
    n = len(words)
    bufs: list[np.ndarray] = [None] * (n + 1)
    bufs[n] = np.zeros(1, dtype=WORD)
    for i in range(n - 1, -1, -1):
        tail = bufs[nexts[i]]
        buf = np.empty(len(tail) + 1, dtype=WORD)
        buf[0] = tail[0] + 1
        buf[1] = words[i]
        buf[2:] = tail[1:]
        bufs[i] = buf
    return bufs[:n]


def parallel_map_suffixes(text, config: ParallelConfig | None = None, alphabet: Alphabet | None = None) -> list[np.ndarray]:
    """Encoded polynomial buffer of every suffix, indexed by start position."""
    alphabet = alphabet or build_alphabet(text)
    words, nexts = leading_factor_table(alphabet.degrees(text), config)
    return assemble_buffers(words, nexts)


def _sorted_bucket(bucket: Bucket) -> Bucket:
    return Bucket(bucket.key, sort_within_bucket(bucket))


def parallel_bucket_sort(buckets: Iterable[Bucket], config: ParallelConfig | None = None) -> list[Bucket]:
    """Order the buckets, then sort each bucket's entries on the pool."""
    config = config or ParallelConfig()
    ordered = order_buckets(list(buckets))
    return run_tasks(_sorted_bucket, [(b,) for b in ordered], config)
