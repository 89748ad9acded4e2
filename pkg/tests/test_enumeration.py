import random
from itertools import permutations

import pytest

from wordrep import AlphabetMismatchError, Word, cycle_graph, graph_check, graph_check_naive
from wordrep.cycles import orbit
from wordrep.enumeration import (
    GuardrailError,
    enumerate_representations,
    iter_matchings,
    iter_two_uniform_words,
    two_uniform_count,
)
from wordrep.graph import Graph


def test_closed_form_against_multiset_permutations():
    for n in (1, 2, 3, 4):
        distinct = set(permutations([str(k) for k in range(1, n + 1)] * 2))
        assert len(distinct) == two_uniform_count(n)
        assert {w.letters for w in iter_two_uniform_words(n)} == distinct
    assert two_uniform_count(5) == 113400
    assert two_uniform_count(6) == 7484400


def test_matchings_partition():
    m = 8
    every = list(iter_matchings(m))
    assert len(every) == 105
    parts = [list(iter_matchings(m, p)) for p in range(1, m)]
    assert sorted(x for part in parts for x in part) == sorted(every)
    with pytest.raises(ValueError):
        list(iter_matchings(m, 0))


def test_triangle():
    report = enumerate_representations(cycle_graph(3), 3)
    assert (report.total_scanned, report.matches) == (90, 6)
    expected = {"123123", "231231", "312312", "321321", "213213", "132132"}
    assert {w.compact() for w in report.words} == expected


def test_triangle_by_brute_force():
    g = cycle_graph(3)
    hits = {w.compact() for w in iter_two_uniform_words(3) if graph_check_naive(w, g).matches}
    assert len(hits) == 6


@pytest.mark.parametrize("n", [4, 5])
def test_cycles_match_orbit(n):
    report = enumerate_representations(cycle_graph(n), n)
    assert report.total_scanned == two_uniform_count(n)
    assert report.matches == 4 * n
    assert set(report.words) == set(orbit(n))


def test_c4_by_reference_check():
    g = cycle_graph(4)
    hits = {w for w in iter_two_uniform_words(4) if graph_check_naive(w, g).matches}
    assert hits == set(enumerate_representations(g, 4).words)


def test_sampled_candidates_against_reference():
    rng = random.Random(11)
    for n in (4, 5):
        g = cycle_graph(n)
        found = set(enumerate_representations(g, n).words)
        sample = [w for w in iter_two_uniform_words(n) if rng.random() < 0.01]
        sample += list(found)
        assert len(sample) >= two_uniform_count(n) // 200
        for w in sample:
            assert graph_check_naive(w, g).matches == (w in found) == graph_check(w, g).matches


def test_other_graph():
    path = Graph.from_edges("1234", [("1", "2"), ("2", "3"), ("3", "4")])
    report = enumerate_representations(path, 4)
    hits = sum(graph_check(w, path).matches for w in iter_two_uniform_words(4))
    assert report.matches == hits > 0


def test_words_sorted_and_optional():
    report = enumerate_representations(cycle_graph(4), 4)
    assert list(report.words) == sorted(report.words, key=lambda w: [int(x) for x in w])
    slim = enumerate_representations(cycle_graph(4), 4, keep_words=False)
    assert slim.words is None and slim.matches == 16


def test_guardrails():
    with pytest.raises(GuardrailError):
        enumerate_representations(cycle_graph(7), 7)
    with pytest.raises(GuardrailError):
        enumerate_representations(cycle_graph(8), 8, allow_override=True)
    with pytest.raises(AlphabetMismatchError):
        enumerate_representations(cycle_graph(5), 4)


def test_worker_pool_is_deterministic():
    one = enumerate_representations(cycle_graph(5), 5, workers=1)
    two = enumerate_representations(cycle_graph(5), 5, workers=2)
    assert one.words == two.words and one.total_scanned == two.total_scanned


def test_report_serialisation():
    report = enumerate_representations(cycle_graph(4), 4)
    text = report.to_text()
    assert "total_scanned: 2520\n" in text and "matches: 16\n" in text
    assert text.splitlines()[5] == str(report.words[0])
    import json

    doc = json.loads(report.to_json())
    assert set(doc) == {"n", "total_scanned", "matches", "words", "elapsed_ms"}
    assert doc["matches"] == 16 and len(doc["words"]) == 16
    assert Word.parse(doc["words"][0]) == report.words[0]
