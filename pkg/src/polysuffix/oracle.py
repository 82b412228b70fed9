"""Reference suffix sorters and a random text corpus.

Neither oracle touches factors or packed words, and neither has alphabet or
run-length limits.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

import numpy as np

from .errors import EmptyInput


def oracle_naive(text) -> np.ndarray:
    """Sort start positions by comparing the suffixes themselves."""
    if len(text) == 0:
        raise EmptyInput("text must contain at least one symbol")
    return np.array(sorted(range(len(text)), key=lambda i: text[i:]), dtype=np.int64)


def oracle_doubling(text) -> np.ndarray:
    """Prefix-doubling (Manber-Myers style) suffix array.

    Ranks of 2k-prefixes are derived from pairs of k-prefix ranks; a missing
    second half ranks below every symbol.
    """
    n = len(text)
    if n == 0:
        raise EmptyInput("text must contain at least one symbol")
    _, rank = np.unique(np.array(list(text), dtype=object), return_inverse=True)
    rank = rank.astype(np.int64).ravel()
    sa = np.argsort(rank, kind="stable")
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        r1, r2 = rank[sa], second[sa]
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[sa] = np.concatenate(([0], np.cumsum((r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1]))))
        rank = new_rank
        if rank.max() == n - 1 or k >= n:
            return sa.astype(np.int64)
        k *= 2


@dataclass(frozen=True)
class OracleReport:
    matches: bool
    first_divergence: int | None = None


def compare_arrays(got, expected) -> OracleReport:
    got = np.asarray(got)
    expected = np.asarray(expected)
    if len(got) == len(expected) and np.array_equal(got, expected):
        return OracleReport(True)
    m = min(len(got), len(expected))
    diff = np.flatnonzero(got[:m] != expected[:m])
    return OracleReport(False, int(diff[0]) if len(diff) else m)


def verify(text, config=None) -> OracleReport:
    from .suffix_sort import suffix_array

    return compare_arrays(suffix_array(text, config), oracle_naive(text))


def random_text(
    rng: random.Random,
    max_length: int = 512,
    max_alphabet: int = 26,
    max_run: int = 63,
    symbols: str = string.ascii_lowercase,
) -> str:
    """Random text built run by run, so no run exceeds ``max_run``.

    Run lengths are mostly 1 with an occasional long run, which keeps both
    increasing stretches and repeat factors common.
    """
    k = rng.randint(1, min(max_alphabet, len(symbols)))
    alphabet = rng.sample(symbols, k)
    if k == 1:
        return alphabet[0] * rng.randint(1, min(max_length, max_run))
    length = rng.randint(1, max_length)
    out: list[str] = []
    prev = None
    while len(out) < length:
        c = rng.choice(alphabet)
        if c == prev:
            continue
        run = 1
        if rng.random() < 0.2:
            run = rng.randint(2, 4) if rng.random() < 0.8 else rng.randint(2, max_run)
        run = min(run, length - len(out))
        out.extend(c * run)
        prev = c
    return "".join(out)
