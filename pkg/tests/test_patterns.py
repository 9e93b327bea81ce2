from collections import Counter
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from dumont.patterns import (
    PatternError,
    VincularPattern,
    avoids,
    contains_exactly,
    naive_occurrences,
    occurrences,
    occurrences_ending_at,
    parse_pattern,
)
from dumont.perm import Permutation

STUDIED_PATTERNS = [
    "1", "1-2", "12", "2-1", "21", "1-3-2", "1-2-3", "2-1-3", "12-3", "21-3", "23-1",
    "2-3-1", "3-1-2", "3-2-1", "1-2-3-4", "2-1-3-4", "12-3-4", "21-3-4", "2-3-4-1",
]

perm_st = st.integers(0, 8).flatmap(lambda n: st.permutations(list(range(1, n + 1))))
pattern_st = st.sampled_from(STUDIED_PATTERNS)


class TestParse:
    def test_classical(self):
        t = parse_pattern("1-3-2")
        assert t.letters == (1, 3, 2)
        assert t.adjacent == (False, False)
        assert t.is_classical

    def test_vincular(self):
        t = parse_pattern("23-1")
        assert t.letters == (2, 3, 1)
        assert t.adjacent == (True, False)

    def test_mixed(self):
        assert parse_pattern("12-3").adjacent == (True, False)

    @pytest.mark.parametrize("text", ["1-1-2", "", "-12", "12-", "1--2", "1a2", "0", "13", "1234567890"])
    def test_rejects(self, text):
        with pytest.raises(PatternError):
            parse_pattern(text)

    @pytest.mark.parametrize("text", STUDIED_PATTERNS + ["123456789", "9-8-7-6-5-4-3-2-1"])
    def test_round_trip(self, text):
        assert str(parse_pattern(text)) == text

    def test_bad_flags(self):
        with pytest.raises(PatternError):
            VincularPattern((1, 2), ())


class TestOccurrences:
    def test_vincular_example(self):
        p = Permutation.parse("35421")
        assert occurrences(p, "23-1") == 2
        assert occurrences(p, "2-3-1") == 4

    def test_increasing_pairs(self):
        assert occurrences(Permutation.parse("2143"), "1-2") == 4

    @given(perm_st)
    def test_singleton(self, v):
        assert occurrences(v, "1") == len(v)

    def test_avoids(self):
        assert avoids(Permutation.parse("3421"), "1-3-2")
        assert not avoids(Permutation.parse("2143"), "1-3-2")
        assert avoids(Permutation.parse("21"), "1-3-2")

    def test_contains_exactly(self):
        assert contains_exactly(Permutation.parse("3421"), "1-2", 1)
        assert not contains_exactly(Permutation.parse("4213"), "1-2", 1)
        assert contains_exactly(Permutation.parse(""), "1-3-2", 0)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_matches_naive_on_all_of_sn(self, n):
        for v in permutations(range(1, n + 1)):
            for t in STUDIED_PATTERNS:
                assert occurrences(v, t) == naive_occurrences(v, t), (v, t)

    @given(perm_st, pattern_st)
    def test_predicates_agree(self, v, t):
        c = occurrences(v, t)
        assert avoids(v, t) == (c == 0) == contains_exactly(v, t, 0)
        assert contains_exactly(v, t, c)
        assert not contains_exactly(v, t, c + 1)

    @given(perm_st, pattern_st)
    def test_adjacency_never_increases_count(self, v, t):
        t = parse_pattern(t)
        assert occurrences(v, t) <= occurrences(v, VincularPattern.classical(t.letters))

    @given(perm_st, pattern_st)
    def test_ending_at_partitions_count(self, v, t):
        assert sum(occurrences_ending_at(v, t, e) for e in range(len(v))) == occurrences(v, t)

    @pytest.mark.parametrize("n, t", [(4, "1-3-2"), (5, "23-1"), (5, "1-2")])
    def test_sum_rule(self, n, t):
        dist = Counter(occurrences(v, t) for v in permutations(range(1, n + 1)))
        assert sum(dist.values()) == factorial(n)
