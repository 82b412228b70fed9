"""Leading-factor buckets: assignment, bucket order and within-bucket order."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from itertools import chain, repeat
from typing import Sequence

import numpy as np

from .encoding import (
    DEGREE_MASK,
    buffer_terms,
    compare_encoded,
    compare_masks,
    divide_by_key,
    mask_degrees,
)
from .errors import DuplicateKey
from .polynomial import Ordering, compare_streams


@dataclass
class BucketEntry:
    suffix_index: int
    coefficient: int
    residue: np.ndarray = field(repr=False)

    def terms(self, key: int):
        """Term stream of the full suffix: the leading factor, then the residue."""
        degrees = mask_degrees(key)
        head = repeat(degrees[0], self.coefficient) if self.coefficient > 1 else degrees
        return chain(head, buffer_terms(self.residue))


@dataclass
class Bucket:
    key: int
    entries: list[BucketEntry] = field(default_factory=list)

    @property
    def degrees(self) -> tuple[int, ...]:
        return mask_degrees(self.key)


def assign_buckets(text=None, alphabet=None, buffers: Sequence[np.ndarray] | None = None) -> list[Bucket]:
    """Group every suffix under the degree set of its leading factor.

    Either ``text`` or precomputed ``buffers`` (indexed by start position) must
    be given.  Buckets come back in order of first appearance and entries in
    ascending suffix index.
    """
    if buffers is None:
        from .parallel import parallel_map_suffixes

        buffers = parallel_map_suffixes(text, alphabet=alphabet)
    buckets: dict[int, Bucket] = {}
    for i, buf in enumerate(buffers):
        key = int(buf[1]) & DEGREE_MASK
        coefficient, residue = divide_by_key(buf, key)
        bucket = buckets.get(key)
        if bucket is None:
            bucket = buckets[key] = Bucket(key)
        bucket.entries.append(BucketEntry(i, coefficient, residue))
    return list(buckets.values())


def order_buckets(buckets: Sequence[Bucket]) -> list[Bucket]:
    keys = [b.key for b in buckets]
    if len(set(keys)) != len(keys):
        raise DuplicateKey("bucket keys must be distinct")
    return sorted(buckets, key=cmp_to_key(lambda a, b: compare_masks(a.key, b.key)))


def compare_entries(key: int, e1: BucketEntry, e2: BucketEntry) -> Ordering:
    if e1.coefficient == e2.coefficient:
        return compare_encoded(e1.residue, e2.residue)
    # unequal repeat counts: the next residue symbol decides, so stream it
    return compare_streams(e1.terms(key), e2.terms(key))


def sort_within_bucket(bucket: Bucket) -> list[BucketEntry]:
    key = bucket.key
    return sorted(bucket.entries, key=cmp_to_key(lambda a, b: compare_entries(key, a, b)))
