"""Packed 32-bit factor words and counted polynomial buffers.

Word layout (normative)::

    bit  31 ......... 26 25 .............. 0
         coefficient (6)   degree mask (26)

Bit ``d`` of the mask is set when the term ``x**d`` occurs in the factor.  The
coefficient field stores the actual repeat count, so increasing-run factors
carry 1 there.  A polynomial buffer is a ``uint32`` array whose word 0 is the
factor count, followed by one word per factor.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import CoefficientOverflow, DegreeOverflow, MalformedWord, NotDivisible
from .polynomial import Factor, Ordering, Polynomial, compare_streams

DEGREE_BITS = 26
COEFF_SHIFT = DEGREE_BITS
DEGREE_MASK = (1 << DEGREE_BITS) - 1
MAX_COEFFICIENT = (1 << (32 - DEGREE_BITS)) - 1

WORD = np.uint32
EMPTY_BUFFER = np.zeros(1, dtype=WORD)
EMPTY_BUFFER.setflags(write=False)


def lowest_set_bit(n: int) -> int:
    return n & ~(n - 1)


def degree_mask(degrees: Iterable[int]) -> int:
    mask = 0
    for d in degrees:
        if d >= DEGREE_BITS:
            raise DegreeOverflow(f"degree {d} does not fit in a {DEGREE_BITS}-bit mask")
        mask |= 1 << d
    return mask


def mask_degrees(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = lowest_set_bit(mask)
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def encode_factor(f: Factor) -> int:
    if f.coefficient > MAX_COEFFICIENT:
        raise CoefficientOverflow(
            f"run of {f.coefficient} exceeds the {MAX_COEFFICIENT} limit of the coefficient field"
        )
    return (f.coefficient << COEFF_SHIFT) | degree_mask(f.degrees)


def decode_factor(word: int) -> Factor:
    word = int(word)
    mask = word & DEGREE_MASK
    coefficient = word >> COEFF_SHIFT
    if mask == 0 or coefficient == 0:
        raise MalformedWord(f"word {word:#010x} has an empty degree mask or coefficient")
    if coefficient > 1 and mask & (mask - 1):
        raise MalformedWord(f"word {word:#010x} repeats a multi-degree factor")
    return Factor(mask_degrees(mask), coefficient)


def encode_polynomial(p: Polynomial | Iterable[Factor]) -> np.ndarray:
    words = [encode_factor(f) for f in p]
    return np.array([len(words), *words], dtype=WORD)


def decode_polynomial(buf: np.ndarray) -> Polynomial:
    _check_buffer(buf)
    return Polynomial(tuple(decode_factor(w) for w in buf[1:]))


def _check_buffer(buf):
    if len(buf) == 0 or int(buf[0]) != len(buf) - 1:
        raise MalformedWord("buffer count word does not match its length")


def bucket_key(degrees: Iterable[int]) -> int:
    """Coefficient-free key word for a leading degree set."""
    mask = degree_mask(degrees)
    if mask == 0:
        raise MalformedWord("bucket key needs at least one degree")
    return mask


def divide_by_key(buf: np.ndarray, key: int) -> tuple[int, np.ndarray]:
    """Divide a buffer by a bucket key, returning ``(coefficient, residue)``.

    The XOR of the leading word with the key must leave no degree bits; only
    the coefficient field may survive.
    """
    if len(buf) < 2:
        raise NotDivisible("empty polynomial")
    lead = int(buf[1])
    if (lead ^ key) & DEGREE_MASK:
        raise NotDivisible(f"key {key:#x} does not divide leading factor {lead:#010x}")
    residue = np.empty(len(buf) - 1, dtype=WORD)
    residue[0] = buf[0] - 1
    residue[1:] = buf[2:]
    return lead >> COEFF_SHIFT, residue


def _first_difference_range(b1, b2, lo, hi):
    diff = np.flatnonzero(b1[lo:hi] != b2[lo:hi])
    return lo + int(diff[0]) if len(diff) else None


def find_first_difference(b1: np.ndarray, b2: np.ndarray, workers: int = 1, chunk: int = 4096) -> int | None:
    """Smallest payload index (>= 1) where the buffers differ, or None.

    If one buffer is a word-level prefix of the other, the first index past
    the shorter one is returned.  With ``workers > 1`` the payload range is
    split into chunks scanned concurrently and reduced by minimum; the answer
    does not depend on the split.
    """
    m = min(len(b1), len(b2))
    if workers <= 1 or m - 1 <= chunk:
        first = _first_difference_range(b1, b2, 1, m)
    else:
        from concurrent.futures import ThreadPoolExecutor

        bounds = [(lo, min(lo + chunk, m)) for lo in range(1, m, chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = pool.map(lambda r: _first_difference_range(b1, b2, *r), bounds)
            hits = [h for h in hits if h is not None]
        first = min(hits) if hits else None
    if first is not None:
        return first
    if len(b1) != len(b2):
        return m
    return None


def compare_masks(m1: int, m2: int) -> Ordering:
    """Order two increasing degree sets as single-factor term streams.

    Let b be the lowest bit of the XOR.  The side owning b is smaller unless
    the other side has nothing above b, in which case the other side is a
    strict prefix of it and comes first.
    """
    x = m1 ^ m2
    if x == 0:
        return Ordering.EQUAL
    b = lowest_set_bit(x)
    if m1 & b:
        return Ordering.LESS if m2 & ~(b - 1) else Ordering.GREATER
    return Ordering.GREATER if m1 & ~(b - 1) else Ordering.LESS


def buffer_terms(buf: np.ndarray, start: int = 1) -> Iterator[int]:
    """Lazily expand the term stream of ``buf`` from payload index ``start``."""
    for k in range(start, len(buf)):
        w = int(buf[k])
        mask = w & DEGREE_MASK
        coefficient = w >> COEFF_SHIFT
        if coefficient > 1:
            d = mask.bit_length() - 1
            for _ in range(coefficient):
                yield d
        else:
            while mask:
                low = lowest_set_bit(mask)
                yield low.bit_length() - 1
                mask ^= low


def compare_encoded(b1: np.ndarray, b2: np.ndarray) -> Ordering:
    """Compare two canonical polynomial buffers.

    Decided on the first differing word when both words exist, their
    coefficients agree and the masks differ; everything else is settled by
    streaming the terms from that factor onward.
    """
    i = find_first_difference(b1, b2)
    if i is None:
        return Ordering.EQUAL
    if i < len(b1) and i < len(b2):
        w1, w2 = int(b1[i]), int(b2[i])
        m1, m2 = w1 & DEGREE_MASK, w2 & DEGREE_MASK
        if m1 == 0 or m2 == 0 or w1 >> COEFF_SHIFT == 0 or w2 >> COEFF_SHIFT == 0:
            raise MalformedWord(f"malformed word at payload index {i}")
        if m1 != m2 and w1 >> COEFF_SHIFT == w2 >> COEFF_SHIFT:
            return compare_masks(m1, m2)
    return compare_streams(buffer_terms(b1, i), buffer_terms(b2, i))


@dataclass(frozen=True)
class DifferenceTrace:
    """Word-level account of one buffer comparison."""

    index: int | None
    xor_mask: int
    lowest_bit: int
    verdict: Ordering


def explain_comparison(b1: np.ndarray, b2: np.ndarray) -> DifferenceTrace:
    i = find_first_difference(b1, b2)
    x = 0
    if i is not None and i < len(b1) and i < len(b2):
        x = (int(b1[i]) ^ int(b2[i])) & DEGREE_MASK
    return DifferenceTrace(i, x, lowest_set_bit(x) if x else 0, compare_encoded(b1, b2))


# binary dump: per suffix, <u32 suffix index><u32 count><count x u32 words>, little-endian

def dump_buffers(buffers: Iterable[np.ndarray]) -> bytes:
    parts = []
    for index, buf in enumerate(buffers):
        parts.append(struct.pack("<I", index))
        parts.append(np.asarray(buf, dtype="<u4").tobytes())
    return b"".join(parts)


def load_buffers(data: bytes) -> list[tuple[int, np.ndarray]]:
    out = []
    pos = 0
    while pos < len(data):
        if pos + 8 > len(data):
            raise MalformedWord("truncated record header")
        index, count = struct.unpack_from("<II", data, pos)
        end = pos + 8 + 4 * count
        if end > len(data):
            raise MalformedWord(f"record for suffix {index} is truncated")
        words = np.frombuffer(data, dtype="<u4", count=count + 1, offset=pos + 4).astype(WORD)
        out.append((index, words))
        pos = end
    return out
