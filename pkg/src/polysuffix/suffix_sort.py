"""Suffix arrays from ordered leading-factor buckets."""

from __future__ import annotations

from functools import cmp_to_key
from itertools import chain, repeat
from typing import Iterator

import numpy as np

from .alphabet import build_alphabet
from .buckets import Bucket, assign_buckets
from .encoding import COEFF_SHIFT, DEGREE_MASK, compare_masks, mask_degrees
from .parallel import ParallelConfig, leading_factor_table, parallel_bucket_sort, parallel_map_suffixes
from .polynomial import Ordering, compare_streams


def _config(config, workers):
    if config is not None:
        return config
    return ParallelConfig(workers=workers) if workers else ParallelConfig.from_env()


def sorted_buckets(text, config: ParallelConfig | None = None, workers: int | None = None) -> list[Bucket]:
    """Run the whole pipeline and return buckets in order, entries sorted."""
    config = _config(config, workers)
    alphabet = build_alphabet(text)
    buffers = parallel_map_suffixes(text, config, alphabet)
    buckets = assign_buckets(buffers=buffers)
    del buffers
    return parallel_bucket_sort(buckets, config)


def suffix_array(text, config: ParallelConfig | None = None, workers: int | None = None) -> np.ndarray:
    buckets = sorted_buckets(text, config, workers)
    return np.array([e.suffix_index for b in buckets for e in b.entries], dtype=np.int64)


def _chain_terms(words, nexts, i) -> Iterator[int]:
    n = len(words)
    while i < n:
        w = int(words[i])
        degrees = mask_degrees(w & DEGREE_MASK)
        c = w >> COEFF_SHIFT
        yield from repeat(degrees[0], c) if c > 1 else degrees
        i = int(nexts[i])


def rank_reuse_sort(text, config: ParallelConfig | None = None) -> np.ndarray:
    """Suffix array that orders equal leading factors by their residues' ranks.

    Suffixes are placed in rounds of increasing factor count.  A residue has
    one factor fewer than its suffix, so by the time a suffix is placed the
    relative order of every residue it could be compared on is already known.
    Entries whose leading repeat counts differ are compared on term streams.
    """
    alphabet = build_alphabet(text)
    words, nexts = leading_factor_table(alphabet.degrees(text), config)
    words = words.tolist()
    nexts = nexts.tolist()
    n = len(words)

    counts = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        counts[i] = counts[nexts[i]] + 1
    levels: dict[int, list[int]] = {}
    for i in range(n):
        levels.setdefault(counts[i], []).append(i)

    rank = [0] * (n + 1)
    rank[n] = -1

    def cmp(i, j):
        if i == j:
            return Ordering.EQUAL
        wi, wj = words[i], words[j]
        order = compare_masks(wi & DEGREE_MASK, wj & DEGREE_MASK)
        if order:
            return order
        if wi == wj:
            ri, rj = rank[nexts[i]], rank[nexts[j]]
            return Ordering.LESS if ri < rj else Ordering.GREATER
        d = mask_degrees(wi & DEGREE_MASK)[0]
        return compare_streams(
            chain(repeat(d, wi >> COEFF_SHIFT), _chain_terms(words, nexts, nexts[i])),
            chain(repeat(d, wj >> COEFF_SHIFT), _chain_terms(words, nexts, nexts[j])),
        )

    key = cmp_to_key(cmp)
    placed: list[int] = []
    for level in sorted(levels):
        # the placed run and the new sorted run merge in one timsort pass
        placed = sorted(placed + sorted(levels[level], key=key), key=key)
        for r, p in enumerate(placed):
            rank[p] = r
    return np.array(placed, dtype=np.int64)
