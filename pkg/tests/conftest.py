import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from wordrep import Word


def random_two_uniform(rng: random.Random, n: int) -> Word:
    letters = [str(k) for k in range(1, n + 1)] * 2
    rng.shuffle(letters)
    return Word(tuple(letters))


def brute_alternating_pairs(w: Word) -> set:
    """Crossing chords by comparing every pair of position pairs directly."""
    pos = {}
    for i, x in enumerate(w.letters):
        pos.setdefault(x, []).append(i)
    out = set()
    for a, b in combinations(pos, 2):
        (p, q), (r, s) = pos[a], pos[b]
        if p < r < q < s or r < p < s < q:
            out.add(frozenset((a, b)))
    return out


@st.composite
def two_uniform_words(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    letters = draw(st.permutations([str(k) for k in range(1, n + 1)] * 2))
    return Word(tuple(letters))


@st.composite
def k_uniform_words(draw, max_n=5, max_k=3):
    n, k = draw(st.integers(1, max_n)), draw(st.integers(1, max_k))
    letters = draw(st.permutations([str(x) for x in range(1, n + 1)] * k))
    return Word(tuple(letters))


@st.composite
def words_over(draw, alphabet="abcde", max_size=14):
    return Word(tuple(draw(st.lists(st.sampled_from(alphabet), max_size=max_size))))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome != "error":
                continue
            if "test_acceptance.py::" not in rep.nodeid:
                continue
            lines.append((rep.nodeid.split("::")[-1], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
