from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import trees
from parsewords import closed_forms as cf
from parsewords.enumeration import all_trees, count_parse_words, parse_words
from parsewords.errors import BadParams
from parsewords.grammar import parses
from parsewords.trees import (
    left_comb,
    left_crooked,
    left_turn,
    right_comb,
    right_crooked,
    right_turn,
)


def test_mod3_and_truncated_power():
    assert [cf.mod3(x) for x in (-3, 1 - 7, 2 - 4)] == ["0", "0", "1"]
    assert cf.truncated_power("lr", Fraction(7, 2)) == "lrlrlrl"
    assert cf.truncated_power("012", Fraction(4, 6)) == "01"
    assert cf.truncated_power("012", 0) == ""
    with pytest.raises(BadParams):
        cf.truncated_power("012", Fraction(1, 2))


def test_comb_comb_examples():
    assert cf.comb_comb_words(4).classes == ("0112",)
    assert cf.comb_comb_words(5).classes == ("01110",)
    assert cf.comb_comb_words(2).classes == ("01",)
    assert cf.comb_comb_words(2, raw=True) == ("02",)
    with pytest.raises(BadParams):
        cf.comb_comb_words(1)


def test_turn_turn_examples():
    assert cf.turn_turn_words(2, 4, raw=True) == ("021200", "001000")
    assert cf.turn_turn_words(1, 3).classes == ("0010", "0100")
    assert all(len(cf.turn_turn_words(m, n)) == 2 for m in range(1, 6) for n in range(3, 8))
    with pytest.raises(BadParams):
        cf.turn_turn_words(1, 2)


def test_comb_crooked_examples():
    assert cf.comb_crooked_words(2, raw=True) == ("20",)
    assert cf.comb_crooked_words(2).classes == ("01",)
    assert cf.comb_crooked_words(4).classes == ("0100",)
    assert cf.comb_crooked_words(7, raw=True) == ("0100120",)


def test_comb_crooked2_examples():
    assert cf.comb_crooked2_words(4, raw=True) == ("1011", "1012")
    assert cf.comb_crooked2_words(4).classes == ("0100", "0102")
    assert all(len(cf.comb_crooked2_words(n)) == 2 for n in range(3, 14))


def test_crooked_examples():
    assert [cf.crooked_crooked_count(n) for n in (2, 6, 7)] == [1, 4, 4]
    assert cf.crooked_crooked_membership("010")
    assert not cf.crooked_crooked_membership("000")
    assert not cf.crooked_crooked_membership("0110")
    assert cf.crooked_crooked_membership("0010")


def test_comb_general_examples():
    assert cf.comb_general_count(right_comb(6)) == 1
    assert cf.comb_general_count(left_comb(5)) == 8
    assert cf.comb_general_count(left_crooked(6)) == 2


def test_turn_count_examples():
    assert cf.turn_pair_count(3, 3, 3) == 1
    assert cf.turn_pair_count(2, 4, 2) == 8
    assert cf.turn_pair_count(2, 4, 3) == 5
    with pytest.raises(BadParams):
        cf.turn_pair_count(1, 2, 3)


def test_a_initial_values():
    initial = {(1, 1): 1, (1, 2): 1, (1, 3): 1, (2, 2): 4, (2, 3): 5, (3, 3): 3}
    assert {key: cf.a_of(*key) for key in initial} == initial
    assert cf.a_of(4, 2) == count_parse_words(left_turn(4, 3), right_turn(2, 5)) == 12
    assert cf.a_of(4, 4) == 28


def test_a_recurrence_and_symmetry():
    for m in range(1, 13):
        for k in range(1, 13):
            a = cf.a_of
            assert a(m + 3, k) - 2 * a(m + 2, k) - a(m + 1, k) + 2 * a(m, k) == 0
            assert a(m, k) == a(k, m)
        assert cf.a_of(1, m) == 1


def test_alternating_examples():
    assert cf.alternating_counts(2) == (2, 1)
    assert cf.alternating_counts(3) == (2, 3)
    assert cf.alternating_counts(4) == (6, 5)
    for m in range(2, 17):
        assert cf.alternating_counts(m) == cf.alternating_counts_by_enumeration(m)
    assert all(
        all(a != b for a, b in zip(w, w[1:])) for w in cf.alternating_words(6)
    )


@pytest.mark.parametrize("n", range(2, 13))
def test_family_sets_match_brute_force(n):
    assert cf.comb_comb_words(n) == parse_words(left_comb(n), right_comb(n))
    assert cf.comb_crooked_words(n) == parse_words(left_comb(n), right_crooked(n))
    if n >= 3:
        assert cf.comb_crooked2_words(n) == parse_words(left_comb(n), left_crooked(n))
    for m in range(1, n - 2):
        assert cf.turn_turn_words(m, n - m) == parse_words(
            left_turn(m, n - m), right_turn(1, n - 1)
        )


@pytest.mark.parametrize("n", range(2, 11))
def test_crooked_membership_matches_brute_force(n):
    t1, t2 = left_crooked(n), right_crooked(n)
    assert cf.crooked_crooked_count(n) == count_parse_words(t1, t2)
    for letters in product("012", repeat=n):
        w = "".join(letters)
        assert cf.crooked_crooked_membership(w) == (parses(t1, w) and parses(t2, w))


def test_turn_pair_count_brute_force():
    for total in range(3, 12):
        for m in range(1, total - 1):
            n = total - m
            for k in range(1, total - 1):
                if total - k >= 2:
                    assert cf.turn_pair_count(m, n, k) == count_parse_words(
                        left_turn(m, n), right_turn(k, total - k)
                    )


@given(trees(min_n=2, max_n=9))
def test_comb_general(t):
    n = t.n_leaves
    assert cf.comb_general_count(t) == count_parse_words(t, left_comb(n))


def test_turn_general_small():
    for n in range(4, 8):
        for t in all_trees(n):
            for m in range(1, n - 1):
                assert count_parse_words(t, left_turn(m, n - m)) > 0


@given(st.integers(2, 60))
def test_alternating_identities(m):
    a, b = cf.alternating_counts(m)
    # swapping 1 and 2 fixes the first letter, so words ending in 1 and in 2 are equinumerous
    assert a + 2 * b == 2**m
    assert a - b == (-1) ** m
