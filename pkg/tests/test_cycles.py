import pytest
from hypothesis import given, strategies as st

from wordrep import NotUniformError, Word, alternate, alternation_graph, cycle_graph, graph_check, graph_equal
from wordrep.cycles import (
    circle_crossing,
    circle_representation,
    check_segment_property,
    cyclic_distance,
    gen_cycle_word,
    orbit,
    reflect,
    rotate,
    segment_property_holds,
)
from wordrep.words import PositionPair

from conftest import k_uniform_words, two_uniform_words, words_over

FIG4 = Word.parse("12132546576734", compact=True)


def test_gen_cycle_word():
    assert str(gen_cycle_word(5)) == "1 5 2 1 3 2 4 3 5 4"
    assert str(gen_cycle_word(4)) == "1 4 2 1 3 2 4 3"
    with pytest.raises(ValueError):
        gen_cycle_word(3)


@pytest.mark.parametrize("n", [4, 5, 9, 31, 120])
def test_gen_cycle_word_represents_cycle(n):
    w = gen_cycle_word(n)
    assert len(w) == 2 * n
    assert graph_check(w, cycle_graph(n)).matches
    if n < 40:
        assert graph_equal(alternation_graph(w), cycle_graph(n))


def test_rotate_and_reflect():
    abcd = Word.parse("abcd", compact=True)
    assert rotate(abcd, 1).compact() == "bcda"
    assert rotate(abcd, -1).compact() == "dabc"
    assert reflect(Word.parse("abc", compact=True)).compact() == "cba"
    assert rotate(Word(()), 3) == Word(())


@given(words_over(), st.integers(-30, 30))
def test_rotation_identities(w, k):
    assert rotate(w, 0) == w
    assert rotate(rotate(w, k), len(w) - k) == w
    assert reflect(reflect(w)) == w
    assert all(rotate(w, k)[i] == w[(i + k) % len(w)] for i in range(len(w)))


@given(k_uniform_words(), st.integers(0, 14))
def test_transforms_preserve_alternation_graph(w, k):
    g = alternation_graph(w)
    assert graph_equal(alternation_graph(rotate(w, k)), g)
    assert graph_equal(alternation_graph(reflect(w)), g)


def test_reflected_cycle_word():
    assert graph_equal(alternation_graph(reflect(gen_cycle_word(5))), cycle_graph(5))


@pytest.mark.parametrize("n,size", [(4, 16), (5, 20), (6, 24)])
def test_orbit_size(n, size):
    words = orbit(n)
    assert len(words) == len(set(words)) == size
    assert all(graph_check(w, cycle_graph(n)).matches for w in words)


def test_orbit_order():
    words = orbit(4)
    assert words[0] == gen_cycle_word(4)
    assert words[1] == rotate(gen_cycle_word(4), 1)
    assert words[8] == reflect(gen_cycle_word(4))


class TestCircle:
    def test_crossing_examples(self):
        assert circle_crossing(PositionPair(0, 2), PositionPair(1, 3))
        assert not circle_crossing(PositionPair(0, 1), PositionPair(2, 3))
        assert not circle_crossing(PositionPair(0, 3), PositionPair(1, 2))
        with pytest.raises(ValueError):
            circle_crossing(PositionPair(0, 2), PositionPair(2, 3))

    def test_representation(self):
        rep = circle_representation(gen_cycle_word(5))
        assert rep.length == 10
        assert rep.chords["1"] == PositionPair(0, 3)
        covered = sorted(p for c in rep.chords.values() for p in c)
        assert covered == list(range(10))
        with pytest.raises(NotUniformError):
            circle_representation(Word.parse("1 2 1"))

    @given(two_uniform_words(min_n=2))
    def test_alternation_is_crossing(self, w):
        rep = circle_representation(w)
        for a in rep.chords:
            for b in rep.chords:
                if a != b:
                    assert alternate(w, a, b) == circle_crossing(rep.chords[a], rep.chords[b])


class TestSegmentProperty:
    def test_cycle_word(self):
        assert check_segment_property(gen_cycle_word(5), 5)

    def test_non_representatives(self):
        # every chord of 11223344 is a pair of neighbours, so it holds vacuously
        assert check_segment_property(Word.parse("11223344", compact=True), 4)
        # r = 1: its non-neighbour 3 has one end on each side of 1's chord
        w = Word.parse("13132424", compact=True)
        assert not segment_property_holds(w, 4, 1)
        assert not check_segment_property(w, 4)

    def test_figure_four_word(self):
        # In the figure's word, for r = 4 the letters above and below 4 by more
        # than one each sit on a single side of the chord, but on opposite sides.
        p = FIG4.positions("4")
        upper = {p.first < i < p.second for i, x in enumerate(FIG4) if int(x) - 4 > 1}
        lower = {p.first < i < p.second for i, x in enumerate(FIG4) if 4 - int(x) > 1}
        assert len(upper) == len(lower) == 1 and upper != lower
        # cyclically 7 and 1 are neighbours, and the word is not a C_7 representative
        assert not segment_property_holds(FIG4, 7, 4)
        assert not check_segment_property(FIG4, 7)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            check_segment_property(gen_cycle_word(5), 3)
        with pytest.raises(ValueError):
            check_segment_property(gen_cycle_word(5), 6)
        with pytest.raises(NotUniformError):
            check_segment_property(Word.parse("1 2 3 4 1 2 3 4 4 4"), 4)

    @pytest.mark.parametrize("n", range(4, 13))
    def test_holds_on_orbit(self, n):
        assert all(check_segment_property(w, n) for w in orbit(n))


def test_cyclic_distance():
    assert cyclic_distance(1, 7, 7) == 1
    assert cyclic_distance(2, 5, 7) == 3
    assert cyclic_distance(3, 3, 7) == 0
