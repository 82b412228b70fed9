"""Symbol to degree mapping.

Each distinct symbol of the input is assigned the term ``x**d`` where ``d`` is
its rank among the sorted distinct symbols.  The packed word layout leaves 26
bits for degrees, which caps the alphabet at 26 symbols regardless of the
character set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np

from .errors import AlphabetTooLarge, EmptyInput, UnknownSymbol

MAX_SYMBOLS = 26


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.symbols, self.symbols[1:])):
            raise ValueError("alphabet symbols must be strictly ascending")
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.symbols)})

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, c):
        return c in self._index

    def degree_of(self, c: Hashable) -> int:
        try:
            return self._index[c]
        except KeyError:
            raise UnknownSymbol(c) from None

    def degrees(self, text: Sequence) -> np.ndarray:
        """Map a whole text to its degree sequence (int64 array)."""
        index = self._index
        try:
            return np.fromiter((index[c] for c in text), dtype=np.int64, count=len(text))
        except KeyError as exc:
            raise UnknownSymbol(exc.args[0]) from None


def build_alphabet(text: Sequence) -> Alphabet:
    if len(text) == 0:
        raise EmptyInput("text must contain at least one symbol")
    symbols = tuple(sorted(set(text)))
    if len(symbols) > MAX_SYMBOLS:
        raise AlphabetTooLarge(
            f"{len(symbols)} distinct symbols; the packed encoding allows at most {MAX_SYMBOLS}"
        )
    return Alphabet(symbols)


def degree_of(alphabet: Alphabet, c: Hashable) -> int:
    return alphabet.degree_of(c)
