"""Exhaustive search over all 2-uniform words on the labels 1..n.

A 2-uniform word of length 2n is a perfect matching of the positions (one
chord per letter) together with an assignment of the n labels to the chords,
so there are (2n-1)!! * n! = (2n)! / 2^n candidates.  The search walks the
matchings and, for each, the label assignments.

The crossing count of a matching does not depend on the labels, so the
edge-count phase of the check runs once per matching; matchings with the
wrong count reject all n! of their words at once.  Surviving assignments get
the per-edge chord test.

The candidate space is split by the partner of position 0 (2n - 1 parts),
which is what parallel workers receive.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .graph import Graph, label_key
from .graphcheck import AlphabetMismatchError, count_alternating_pairs
from .words import Word

DEFAULT_MAX_N = 6
OVERRIDE_MAX_N = 7
WORKERS_ENV = "WORDREP_WORKERS"

Chord = tuple[int, int]


class GuardrailError(ValueError):
    """Requested search space is above the configured size limit."""


def two_uniform_count(n: int) -> int:
    return math.factorial(2 * n) // 2**n


def iter_matchings(m: int, first_partner: int | None = None) -> Iterator[tuple[Chord, ...]]:
    """Perfect matchings of positions ``0..m-1`` as chords sorted by left end.

    ``first_partner`` pins the chord containing position 0.
    """
    if m % 2:
        raise ValueError("odd number of positions")
    free = list(range(m))

    def rec(free: list[int]) -> Iterator[tuple[Chord, ...]]:
        if not free:
            yield ()
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            rest = free[1:idx] + free[idx + 1:]
            for tail in rec(rest):
                yield ((a, b),) + tail

    if m == 0:
        yield ()
        return
    if first_partner is None:
        yield from rec(free)
        return
    if not 0 < first_partner < m:
        raise ValueError(f"partner of position 0 must be in 1..{m - 1}")
    rest = [p for p in free if p not in (0, first_partner)]
    for tail in rec(rest):
        yield ((0, first_partner),) + tail


def word_from_matching(chords: tuple[Chord, ...], labels: tuple[str, ...]) -> Word:
    """Place ``labels[c]`` at both ends of chord ``c``."""
    letters = [""] * (2 * len(chords))
    for (i, j), x in zip(chords, labels):
        letters[i] = letters[j] = x
    return Word(tuple(letters))


def iter_two_uniform_words(n: int) -> Iterator[Word]:
    labels = [str(k) for k in range(1, n + 1)]
    for chords in iter_matchings(2 * n):
        for perm in permutations(labels):
            yield word_from_matching(chords, perm)


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    total_scanned: int
    matches: int
    words: tuple[Word, ...] | None
    elapsed: float

    def to_text(self) -> str:
        lines = [
            f"n: {self.n}",
            f"total_scanned: {self.total_scanned}",
            f"matches: {self.matches}",
            f"elapsed_ms: {self.elapsed * 1000:.1f}",
        ]
        if self.words is not None:
            lines.append("words:")
            lines.extend(str(w) for w in self.words)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "total_scanned": self.total_scanned,
            "matches": self.matches,
            "words": [str(w) for w in self.words] if self.words is not None else [],
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }
        return json.dumps(doc, indent=2)


def _search_part(n: int, edges: tuple[tuple[int, int], ...], partner: int, keep: bool):
    """Count matches among words whose position 0 is paired with ``partner``.

    ``edges`` are given over label indices 0..n-1.
    """
    labels = tuple(str(k) for k in range(1, n + 1))
    chord_tokens = tuple(str(c) for c in range(n))
    want = len(edges)
    scanned = 0
    found = []
    nperm = math.factorial(n)
    for chords in iter_matchings(2 * n, partner):
        scanned += nperm
        if count_alternating_pairs(word_from_matching(chords, chord_tokens)) != want:
            continue
        cross = [
            [(a < c < b) != (a < d < b) for (c, d) in chords]
            for (a, b) in chords
        ]
        # perm[k] is the chord carrying label k.
        for perm in permutations(range(n)):
            if all(cross[perm[u]][perm[v]] for u, v in edges):
                if keep:
                    placed = [""] * n
                    for k, c in enumerate(perm):
                        placed[c] = labels[k]
                    found.append(word_from_matching(chords, tuple(placed)))
                else:
                    found.append(None)
    return scanned, found


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def enumerate_representations(
    g: Graph,
    n: int,
    *,
    keep_words: bool = True,
    max_n: int = DEFAULT_MAX_N,
    allow_override: bool = False,
    workers: int | None = 1,
) -> EnumerationReport:
    """Every 2-uniform word on ``1..n`` whose alternation graph is ``g``.

    ``n`` above ``max_n`` needs ``allow_override`` and may not exceed
    ``OVERRIDE_MAX_N``.  ``workers=None`` reads ``WORDREP_WORKERS`` or uses
    all CPUs.  Word lists are sorted, so the report does not depend on how
    the search was split.
    """
    if n < 1:
        raise ValueError("n must be positive")
    limit = OVERRIDE_MAX_N if allow_override else max_n
    if n > limit:
        hint = "" if allow_override else " (pass the override to allow n = 7)"
        raise GuardrailError(f"n = {n} exceeds the enumeration limit {limit}{hint}")
    labels = [str(k) for k in range(1, n + 1)]
    if g.vertices != frozenset(labels):
        raise AlphabetMismatchError(f"graph vertices must be exactly 1..{n}")
    index = {x: k for k, x in enumerate(labels)}
    edges = tuple((index[u], index[v]) for u, v in g.edge_list)

    start = time.perf_counter()
    parts = range(1, 2 * n)
    if workers is None:
        workers = default_workers()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_part, *zip(*((n, edges, p, keep_words) for p in parts))))
    else:
        results = [_search_part(n, edges, p, keep_words) for p in parts]
    total = sum(r[0] for r in results)
    found = [w for r in results for w in r[1]]
    words = None
    if keep_words:
        words = tuple(sorted(found, key=lambda w: tuple(label_key(x) for x in w.letters)))
    return EnumerationReport(n, total, len(found), words, time.perf_counter() - start)
