"""Run factorization of degree sequences and the order it induces.

A suffix is split greedily, left to right, into factors:

* a *repeat* factor ``m x**d`` covers a maximal run of ``m >= 2`` equal
  degrees ``d``;
* an *increasing* factor ``x**d1 . x**d2 ...`` covers a strictly increasing
  stretch and carries coefficient 1.

An increasing stretch stops as soon as the next degree is not larger than the
last one taken.  If that next degree equals the last one, the first symbol of
the equal run has already been consumed and the remainder becomes a repeat
factor, so ``gttt`` factors as ``(x²·x³)·2x³``.

Ordering is always decided on the expanded term streams: the polynomial order
is exactly the lexicographic order of the underlying strings, with a proper
prefix ordered first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import chain, repeat
from typing import Iterable, Iterator, Sequence

from .errors import EmptyInput


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Factor:
    degrees: tuple[int, ...]
    coefficient: int = 1

    def __post_init__(self):
        degrees = self.degrees
        if not degrees:
            raise ValueError("factor needs at least one degree")
        if degrees[0] < 0 or any(a >= b for a, b in zip(degrees, degrees[1:])):
            raise ValueError(f"factor degrees must be non-negative and strictly increasing: {degrees}")
        if self.coefficient < 1:
            raise ValueError("coefficient must be >= 1")
        if self.coefficient > 1 and len(degrees) != 1:
            raise ValueError("only single-degree factors may repeat")

    @property
    def is_repeat(self) -> bool:
        return self.coefficient > 1

    def terms(self) -> Iterator[int]:
        if self.coefficient > 1:
            return repeat(self.degrees[0], self.coefficient)
        return iter(self.degrees)

    def __len__(self):
        # number of symbols this factor spans
        return self.coefficient if self.coefficient > 1 else len(self.degrees)


@dataclass(frozen=True)
class Polynomial:
    factors: tuple[Factor, ...]
    source_index: int | None = field(default=None, compare=False)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __str__(self):
        return render_polynomial(self)


def factor_at(seq: Sequence[int], i: int, run_end: Sequence[int] | None = None) -> tuple[Factor, int]:
    """Return the factor starting at ``seq[i]`` and the position just past it.

    ``run_end[j]``, when given, is the end of the maximal equal run containing
    ``j``; it saves rescanning long runs.
    """
    n = len(seq)
    d = seq[i]
    if i + 1 < n and seq[i + 1] == d:
        if run_end is not None:
            j = int(run_end[i])
        else:
            j = i + 2
            while j < n and seq[j] == d:
                j += 1
        return Factor((int(d),), j - i), j
    degrees = [int(d)]
    j = i + 1
    while j < n and seq[j] > seq[j - 1]:
        degrees.append(int(seq[j]))
        j += 1
    return Factor(tuple(degrees)), j


def run_ends(seq: Sequence[int]) -> list[int]:
    """For every position, the exclusive end of the equal run it belongs to."""
    n = len(seq)
    ends = [n] * n
    for j in range(n - 2, -1, -1):
        ends[j] = ends[j + 1] if seq[j] == seq[j + 1] else j + 1
    return ends


def factorize(suffix: Sequence[int], source_index: int | None = None) -> Polynomial:
    if len(suffix) == 0:
        raise EmptyInput("cannot factorize an empty sequence")
    ends = run_ends(suffix)
    factors = []
    i = 0
    while i < len(suffix):
        f, i = factor_at(suffix, i, ends)
        factors.append(f)
    return Polynomial(tuple(factors), source_index)


def iter_terms(factors: Iterable[Factor]) -> Iterator[int]:
    return chain.from_iterable(f.terms() for f in factors)


def expand_terms(p: Polynomial | Iterable[Factor]) -> list[int]:
    return list(iter_terms(p))


_END = object()


def compare_streams(a: Iterable[int], b: Iterable[int]) -> Ordering:
    """Lexicographic comparison of two term streams, consumed lazily."""
    ia, ib = iter(a), iter(b)
    while True:
        x = next(ia, _END)
        y = next(ib, _END)
        if x is _END:
            return Ordering.EQUAL if y is _END else Ordering.LESS
        if y is _END:
            return Ordering.GREATER
        if x != y:
            return Ordering.LESS if x < y else Ordering.GREATER


def compare_polynomials(p: Polynomial, q: Polynomial) -> Ordering:
    return compare_streams(iter_terms(p), iter_terms(q))


def leading_factor_key(p: Polynomial) -> tuple[tuple[int, ...], int]:
    """Bucket key (degree set of the first factor) and its coefficient."""
    if not len(p):
        raise EmptyInput("empty polynomial has no leading factor")
    first = p.factors[0]
    return first.degrees, first.coefficient


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def render_term(degree: int) -> str:
    if degree == 0:
        return "1"
    if degree == 1:
        return "x"
    return "x" + str(degree).translate(_SUPERSCRIPTS)


def render_key(degrees: Iterable[int]) -> str:
    """Bucket keys are printed as bare term products, no parentheses."""
    return "·".join(render_term(d) for d in degrees)


def render_factor(f: Factor) -> str:
    if f.coefficient > 1:
        d = f.degrees[0]
        return str(f.coefficient) if d == 0 else f"{f.coefficient}{render_term(d)}"
    if len(f.degrees) == 1:
        return render_term(f.degrees[0])
    return "(" + render_key(f.degrees) + ")"


def render_polynomial(p: Polynomial | Iterable[Factor]) -> str:
    return "·".join(render_factor(f) for f in p)
