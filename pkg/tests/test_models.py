"""Unit tests for the three classical models: 231-avoidance, noncrossing
partitions, area-0 parallelogram polyominoes, and the chromatic tallies."""

import itertools

import pytest

from smirnov.models import (NoncrossingPartition, catalan,
                            chromatic_path_enumerator,
                            enumerate_area0_polyominoes, enumerate_noncrossing,
                            enumerate_set_partitions, is_231_avoiding,
                            noncrossing_to_permutation, permutation_to_noncrossing,
                            polyomino_to_word, single_block_words,
                            smirnov_to_polyomino)
from smirnov.qengine import enumerative_q_sum
from smirnov.stats import sminv_count
from smirnov.words import SegmentedSmirnovWord, parse_word, partitions_of


class TestAvoidance:
    def test_fixtures(self):
        assert is_231_avoiding((1, 2, 3))
        assert is_231_avoiding((3, 2, 1))
        assert not is_231_avoiding((2, 3, 1))
        assert is_231_avoiding((5, 2, 1, 4, 3))

    def test_catalan_oracle(self):
        assert [catalan(n) for n in range(1, 9)] == [1, 2, 5, 14, 42, 132, 429, 1430]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_zero_sminv_iff_avoiding(self, n):
        count = 0
        for perm in itertools.permutations(range(1, n + 1)):
            zero = sminv_count(SegmentedSmirnovWord(perm, (n,))) == 0
            assert zero == is_231_avoiding(perm)
            count += zero
        assert count == catalan(n)


class TestNoncrossing:
    def test_worked_example(self):
        p = NoncrossingPartition(((1, 2, 5), (3, 4), (6, 8, 9), (7,)))
        assert noncrossing_to_permutation(p) == (5, 2, 1, 4, 3, 9, 8, 6, 7)
        assert permutation_to_noncrossing((5, 2, 1, 4, 3, 9, 8, 6, 7)) == p

    def test_singletons_give_identity(self):
        p = NoncrossingPartition(((1,), (2,), (3,)))
        assert noncrossing_to_permutation(p) == (1, 2, 3)

    def test_crossing_rejected(self):
        with pytest.raises(ValueError):
            NoncrossingPartition(((1, 3), (2, 4)))

    def test_crossing_runs_rejected(self):
        # decreasing runs {1,3} and {2,4} cross
        with pytest.raises(ValueError):
            permutation_to_noncrossing((3, 1, 4, 2))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts(self, n):
        # noncrossing partitions of [n] are Catalan many
        assert sum(1 for _ in enumerate_noncrossing(n)) == catalan(n)
        # Bell numbers for all set partitions, first values
        bell = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203}
        assert sum(1 for _ in enumerate_set_partitions(n)) == bell[n]


class TestPolyomino:
    def test_worked_example(self):
        w = parse_word("213532142")
        p = smirnov_to_polyomino(w)
        assert (p.width, p.height) == (6, 4)
        assert p.is_area_zero()
        assert polyomino_to_word(p) == w

    def test_requires_single_block(self):
        with pytest.raises(ValueError):
            smirnov_to_polyomino(parse_word("21|1"))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_bijection_exhaustive(self, n):
        images = {}
        for letters in single_block_words(n, n):
            w = SegmentedSmirnovWord(letters, (n,))
            p = smirnov_to_polyomino(w)
            assert p.is_area_zero()
            assert polyomino_to_word(p) == w
            k = len(w.ascent_positions())
            images.setdefault((n - k, k + 1), set()).add(p)
        for (width, height), image_set in images.items():
            assert set(enumerate_area0_polyominoes(width, height, n)) == image_set


class TestChromatic:
    def test_tallies_match_recursion_at_q_one(self):
        n = 4
        tallies = chromatic_path_enumerator(n, n)
        for mu in partitions_of(n):
            exps = tuple(mu) + (0,) * (n - len(mu))
            for l in range(n):
                k = n - 1 - l
                got = tallies.get(l, {}).get(exps, 0)
                assert got == enumerative_q_sum(mu, k, l, "sminv")(1)

    def test_rejects_empty_graph(self):
        with pytest.raises(ValueError):
            chromatic_path_enumerator(0, 3)
