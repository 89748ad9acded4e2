"""Words over an alphabet of symbol tokens, residual words and alternation.

A letter is any non-empty string without whitespace, so ``"a"`` and ``"12"``
are both single letters.  Words are immutable; the per-letter occurrence
table is computed on first use and cached.

>>> w = Word.parse("abbcabc", compact=True)
>>> str(residual_word(w, "a", "c"))
'a c a c'
>>> alternate(w, "a", "c"), alternate(w, "a", "b")
(True, False)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import TYPE_CHECKING, Iterator

if TYPE_CHECKING:
    from .graph import Graph

Letter = str

_TOKEN = re.compile(r"\S+")


class WordError(ValueError):
    """Malformed word or a letter that violates an operation's precondition."""


class NotUniformError(WordError):
    """A word does not have the required number of occurrences per letter."""


def check_letter(token: object) -> Letter:
    if not isinstance(token, str) or not _TOKEN.fullmatch(token):
        raise WordError(f"invalid letter {token!r}: must be a non-empty string without whitespace")
    return token


@dataclass(frozen=True, order=True)
class PositionPair:
    """The two 0-indexed positions of a letter in a 2-uniform word."""

    first: int
    second: int

    def __post_init__(self) -> None:
        if not 0 <= self.first < self.second:
            raise ValueError(f"need 0 <= first < second, got ({self.first}, {self.second})")

    def __iter__(self) -> Iterator[int]:
        yield self.first
        yield self.second


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if isinstance(self.letters, str):
            raise TypeError("use Word.parse() to build a word from text")
        letters = tuple(self.letters)
        for token in set(letters):
            check_letter(token)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, compact: bool = False) -> Word:
        """Whitespace-separated tokens, or one letter per character with ``compact``."""
        if compact:
            return cls(tuple(ch for ch in text if not ch.isspace()))
        return cls(tuple(text.split()))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> Letter:
        return self.letters[i]

    def __str__(self) -> str:
        return " ".join(self.letters)

    def compact(self) -> str:
        return "".join(self.letters)

    @cached_property
    def occurrences(self) -> dict[Letter, tuple[int, ...]]:
        occ: dict[Letter, list[int]] = {}
        for i, x in enumerate(self.letters):
            occ.setdefault(x, []).append(i)
        return {x: tuple(p) for x, p in occ.items()}

    @property
    def alphabet(self) -> frozenset[Letter]:
        return frozenset(self.occurrences)

    def count(self, letter: Letter) -> int:
        return len(self.occurrences.get(letter, ()))

    def positions(self, letter: Letter) -> PositionPair:
        """Chord of ``letter``; the letter must occur exactly twice."""
        p = self.occurrences.get(letter, ())
        if len(p) != 2:
            raise NotUniformError(f"letter {letter!r} occurs {len(p)} times, expected 2")
        return PositionPair(p[0], p[1])


def residual_word(w: Word, a: Letter, b: Letter) -> Word:
    """Subsequence of ``w`` keeping only the occurrences of ``a`` and ``b``."""
    return Word(tuple(x for x in w.letters if x == a or x == b))


def alternate(w: Word, a: Letter, b: Letter) -> bool:
    """True iff ``a`` and ``b`` strictly alternate in ``w``.

    Both letters must occur in ``w`` and be distinct; an absent letter is an
    error rather than a ``False``.
    """
    if a == b:
        raise WordError(f"alternation needs two distinct letters, got {a!r} twice")
    occ = w.occurrences
    for x in (a, b):
        if x not in occ:
            raise WordError(f"letter {x!r} does not occur in the word")
    pa, pb = occ[a], occ[b]
    if abs(len(pa) - len(pb)) > 1:
        return False
    # Residual word as tagged positions: even tag for a, odd for b.
    r = sorted([2 * i for i in pa] + [2 * i + 1 for i in pb])
    return all((r[i] ^ r[i + 1]) & 1 for i in range(len(r) - 1))


def is_k_uniform(w: Word, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    return all(len(p) == k for p in w.occurrences.values())


def alternation_graph(w: Word) -> Graph:
    """The alternating symbol graph of ``w`` by checking every letter pair.

    This is the slow, definitional construction (one residual word per pair)
    and serves as the reference the faster checks are tested against.
    """
    from .graph import Graph

    alphabet = sorted(w.alphabet)
    edges = [(a, b) for a, b in combinations(alphabet, 2) if alternate(w, a, b)]
    return Graph.from_edges(alphabet, edges)

