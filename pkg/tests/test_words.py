"""Unit tests for segmented Smirnov words: parsing, classification, enumeration,
and the maximal-letter insertion/extraction machinery."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smirnov.words import (EMPTY_WORD, SegmentedSmirnovWord, classify, compositions_of,
                           delete_occurrence, enumerate_words, enumerate_words_by_stat,
                           extract_maximal, insert_many, insert_maximal, parse_word,
                           partitions_of)


@st.composite
def words(draw, n_max=8, alphabet=4):
    n = draw(st.integers(min_value=1, max_value=n_max))
    while True:
        letters = tuple(draw(st.integers(min_value=1, max_value=alphabet))
                        for _ in range(n))
        cuts = sorted(draw(st.sets(st.integers(min_value=1, max_value=n - 1))) if n > 1
                      else set())
        shape = tuple(b - a for a, b in zip([0] + cuts, cuts + [n]))
        try:
            return SegmentedSmirnovWord(letters, shape)
        except ValueError:
            n = draw(st.integers(min_value=1, max_value=n_max))


class TestConstruction:
    def test_worked_example_word(self):
        w = parse_word("231|3212|12")
        assert w.letters == (2, 3, 1, 3, 2, 1, 2, 1, 2)
        assert w.shape == (3, 4, 2)
        assert w.blocks == ((2, 3, 1), (3, 2, 1, 2), (1, 2))
        assert w.content() == (3, 4, 2)
        assert w.text() == "231|3212|12"
        assert w.initial_positions == frozenset({1, 4, 8})
        assert w.final_positions == frozenset({3, 7, 9})
        assert w.ascent_positions() == frozenset({1, 6, 8})
        assert w.descent_positions() == frozenset({2, 4, 5})

    def test_equal_letters_may_touch_across_blocks(self):
        w = parse_word("12|21")
        assert w.shape == (2, 2)

    def test_smirnov_violation_reports_index(self):
        with pytest.raises(ValueError, match="word index 1"):
            SegmentedSmirnovWord((1, 1, 2), (3,))

    def test_shape_sum_mismatch(self):
        with pytest.raises(ValueError, match="does not sum"):
            SegmentedSmirnovWord((1, 2), (3,))

    def test_bad_letters_and_shape_parts(self):
        with pytest.raises(ValueError):
            SegmentedSmirnovWord((0, 1), (2,))
        with pytest.raises(ValueError):
            SegmentedSmirnovWord((1,), (0, 1))

    def test_empty_word(self):
        assert EMPTY_WORD.n == 0
        assert EMPTY_WORD.content() == ()
        assert EMPTY_WORD.text() == ""

    def test_multidigit_text_uses_commas(self):
        w = SegmentedSmirnovWord((10, 2), (2,))
        assert w.text() == "10,2"
        assert parse_word("10,2") == w

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_word("")
        with pytest.raises(ValueError):
            parse_word("12||3")
        with pytest.raises(ValueError):
            parse_word("1a2")

    def test_json_round_trip(self):
        w = parse_word("231|3212|12")
        assert SegmentedSmirnovWord.from_json(w.to_json()) == w


class TestClassify:
    def test_worked_example_roles(self):
        w = parse_word("231|3212|12")
        profile = classify(w)
        # a(w) pads every block with infinity on both sides
        assert profile.roles == ("valley", "peak", "valley",
                                 "double_fall", "double_fall", "valley", "double_rise",
                                 "valley", "double_rise")
        assert profile.ascents == w.ascent_positions()
        assert profile.descents == w.descent_positions()

    @given(words())
    @settings(max_examples=60, deadline=None)
    def test_role_counts_match_block_count(self, w):
        profile = classify(w)
        peaks = sum(1 for r in profile.roles if r == "peak")
        valleys = sum(1 for r in profile.roles if r == "valley")
        # each block alternates valley/peak runs: one more valley than peaks
        assert valleys - peaks == len(w.shape)
        assert len(profile.roles) == w.n


class TestEnumeration:
    def test_compositions(self):
        assert list(compositions_of(0)) == [()]
        assert list(compositions_of(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]

    def test_partitions(self):
        assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(partitions_of(0)) == [()]

    def test_sw_21_exact(self):
        texts = sorted(w.text() for w in enumerate_words((2, 1)))
        assert texts == sorted(
            ["121", "1|12", "1|21", "12|1", "21|1", "1|1|2", "1|2|1", "2|1|1"])

    def test_trailing_zeros_trimmed(self):
        assert list(enumerate_words((2, 1, 0))) == list(enumerate_words((2, 1)))

    def test_by_stat_partition(self):
        mu = (2, 2)
        all_words = set(enumerate_words(mu))
        n = sum(mu)
        seen = set()
        for k in range(n):
            for l in range(n - k):
                chunk = set(enumerate_words_by_stat(mu, k, l))
                assert not (chunk & seen)
                seen |= chunk
        assert seen == all_words

    def test_block_count_identity(self):
        for w in enumerate_words((2, 1, 1)):
            k = len(w.ascent_positions())
            l = len(w.descent_positions())
            assert len(w.shape) == w.n - k - l


class TestInsertion:
    def test_peak_insertion_joins_blocks(self):
        w = parse_word("21|13")
        assert insert_maximal(w, "peak", 1, 4).text() == "21413"

    def test_fall_rise_singleton(self):
        w = parse_word("21|13")
        assert insert_maximal(w, "double_fall", 2, 4).text() == "21|413"
        assert insert_maximal(w, "double_rise", 1, 4).text() == "214|13"
        assert insert_maximal(w, "singleton", 0, 4).text() == "4|21|13"
        assert insert_maximal(w, "singleton", 2, 4).text() == "21|13|4"

    def test_peak_requires_strictly_maximal(self):
        w = parse_word("21|13")
        with pytest.raises(ValueError):
            insert_maximal(w, "peak", 1, 3)
        with pytest.raises(ValueError):
            insert_maximal(w, "peak", 1, 2)

    def test_equal_max_rejected_when_adjacent(self):
        w = parse_word("41|13")
        with pytest.raises(ValueError):
            insert_maximal(w, "double_fall", 1, 4)
        assert insert_maximal(w, "double_fall", 2, 4).text() == "41|413"

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            insert_maximal(parse_word("1"), "sideways", 1, 2)

    def test_bulk_insertion_order(self):
        w = parse_word("21|13|2")
        out = insert_many(w, 4, peaks=(2,), rises=(1,), falls=(2,), gaps=(1, 0, 0))
        assert out.text() == "4|214|41342"

    def test_insert_then_delete(self):
        w = parse_word("231|12")
        grown = insert_maximal(w, "peak", 1, 4)
        assert delete_occurrence(grown, 4) == w
        grown = insert_maximal(w, "singleton", 1, 4)
        assert delete_occurrence(grown, 4) == w

    @given(words(alphabet=3), st.sampled_from(["peak", "double_fall", "double_rise",
                                               "singleton"]), st.data())
    @settings(max_examples=120, deadline=None)
    def test_insert_delete_round_trip(self, w, kind, data):
        m = max(w.letters) + 1
        s = len(w.shape)
        if kind == "peak":
            if s < 2:
                return
            slot = data.draw(st.integers(min_value=1, max_value=s - 1))
        elif kind == "singleton":
            slot = data.draw(st.integers(min_value=0, max_value=s))
        else:
            slot = data.draw(st.integers(min_value=1, max_value=s))
        grown = insert_maximal(w, kind, slot, m)
        assert grown.content() == w.content() + (1,)
        positions = [i + 1 for i, x in enumerate(grown.letters) if x == m]
        assert len(positions) == 1
        assert delete_occurrence(grown, positions[0]) == w

    @given(words())
    @settings(max_examples=120, deadline=None)
    def test_extract_insert_round_trip(self, w):
        stripped, record = extract_maximal(w)
        assert record.m == max(w.letters)
        assert all(letter < record.m for letter in stripped.letters)
        rebuilt = insert_many(stripped, record.m, peaks=record.peaks,
                              rises=record.rises, falls=record.falls, gaps=record.gaps)
        assert rebuilt == w

    def test_extract_empty_errors(self):
        with pytest.raises(ValueError):
            extract_maximal(EMPTY_WORD)
