"""Cycle graphs: the canonical word, its rotations and reflections, and chords.

``gen_cycle_word(n)`` is the 2n-letter word ``1 n 2 1 3 2 ... n (n-1)`` whose
alternation graph is C_n.  Its orbit under rotation and reversal has exactly
4n members, and these are all the 2-uniform words representing C_n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Letter, NotUniformError, PositionPair, Word, WordError, is_k_uniform


def gen_cycle_word(n: int) -> Word:
    if n < 4:
        raise ValueError(f"the cycle word is defined for n >= 4, got {n}")
    letters = ["1", str(n)]
    for k in range(2, n + 1):
        letters += [str(k), str(k - 1)]
    return Word(tuple(letters))


def rotate(w: Word, k: int) -> Word:
    """Left cyclic shift: position i of the result holds letter ``(i + k) mod len``."""
    if not len(w):
        return w
    k %= len(w)
    return Word(w.letters[k:] + w.letters[:k])


def reflect(w: Word) -> Word:
    return Word(w.letters[::-1])


def orbit(n: int) -> tuple[Word, ...]:
    """All rotations of the cycle word, then all rotations of its reflection.

    Duplicates are dropped (there are none for n >= 4); order is fixed so
    listings are reproducible.
    """
    base = gen_cycle_word(n)
    seen: dict[Word, None] = {}
    for w in (base, reflect(base)):
        for k in range(len(base)):
            seen.setdefault(rotate(w, k), None)
    return tuple(seen)


@dataclass(frozen=True)
class CircleRepresentation:
    length: int
    chords: dict[Letter, PositionPair]


def circle_representation(w: Word) -> CircleRepresentation:
    if not is_k_uniform(w, 2):
        raise NotUniformError("circle representation needs a 2-uniform word")
    return CircleRepresentation(len(w), {x: w.positions(x) for x in w.occurrences})


def circle_crossing(p: PositionPair, q: PositionPair) -> bool:
    """Whether two chords on the circle intersect (exactly one end of q inside p)."""
    if len({p.first, p.second, q.first, q.second}) != 4:
        raise ValueError(f"chords {tuple(p)} and {tuple(q)} share an endpoint")
    return (p.first < q.first < p.second) != (p.first < q.second < p.second)


def cyclic_distance(a: int, b: int, n: int) -> int:
    d = abs(a - b) % n
    return min(d, n - d)


def segment_property_holds(w: Word, n: int, r: int) -> bool:
    """Whether every letter not adjacent to ``r`` in C_n lies on one side of r's chord."""
    p = w.positions(str(r))
    sides = set()
    for i, x in enumerate(w.letters):
        if cyclic_distance(int(x), r, n) > 1:
            sides.add(p.first < i < p.second)
    return len(sides) <= 1


def check_segment_property(w: Word, n: int) -> bool:
    """Segment property for every r in 1..n.

    Neighbourhood is cyclic, so n and 1 are adjacent.  The word must be
    2-uniform on the labels 1..n.
    """
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    if w.alphabet != {str(k) for k in range(1, n + 1)}:
        raise WordError(f"word alphabet is not {{1..{n}}}")
    if not is_k_uniform(w, 2):
        raise NotUniformError("segment property needs a 2-uniform word")
    return all(segment_property_holds(w, n, r) for r in range(1, n + 1))
