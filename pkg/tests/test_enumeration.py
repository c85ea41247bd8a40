from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from conftest import paper_tree, path_trees, tree_pairs
from parsewords.enumeration import (
    ParseWordSet,
    all_path_trees,
    all_trees,
    catalan,
    class_keys,
    common_class_words,
    count_parse_words,
    fast_parse_words,
    first_common_word,
    pack,
    parse_words,
    random_path_tree,
    random_tree,
    shared_bottom_witness,
    tree_from_rank,
    unpack,
)
from parsewords.errors import LengthMismatch, NotPathTrees
from parsewords.grammar import canonicalize, parses, root_label
from parsewords.trees import (
    CHERRY,
    LEAF,
    deserialize,
    left_comb,
    left_crooked,
    mirror,
    right_comb,
    right_crooked,
    serialize,
)


def test_parse_words_examples():
    assert parse_words(paper_tree(7, 7), paper_tree(7, 64)).classes == ("0110212",)
    assert parse_words(left_comb(4), right_comb(4)).classes == ("0112",)
    t = paper_tree(5, 3)
    assert len(parse_words(t, t)) == 8
    with pytest.raises(LengthMismatch):
        parse_words(CHERRY, LEAF)


def test_count_examples():
    assert count_parse_words(left_crooked(6), right_crooked(6)) == 4
    assert count_parse_words(left_comb(7), right_crooked(7)) == 1
    assert count_parse_words(CHERRY, CHERRY) == 1
    assert count_parse_words(LEAF, LEAF) == 1


def test_parse_word_set():
    s = parse_words(left_comb(3), right_comb(3))
    assert s.classes == ("010",) and s.raw_count == 6
    assert "121" in s and "011" not in s and len(s) == 1
    assert ParseWordSet.from_words(["1", "2"]).raw_count == 3
    assert parse_words(left_comb(5), right_comb(5), root_fixed=True) == parse_words(left_comb(5), right_comb(5))


def test_spaces():
    assert len(all_trees(4)) == 5 and len(all_trees(1)) == 1
    assert len(all_path_trees(5)) == 8
    assert [tree_from_rank(6, k) for k in range(42)] == list(all_trees(6))
    with pytest.raises(IndexError):
        tree_from_rank(4, 5)
    rng = random.Random(7)
    assert random_tree(9, rng).n_leaves == 9
    assert random_path_tree(9, rng).n_leaves == 9


def test_catalogue_figures():
    # the 8-leaf pair of the decomposition example and its residues
    assert serialize_all(paper_tree(8, 69), paper_tree(8, 231)) == (
        "(*((*((**)*))(*(**))))", "((*(*((**)*)))((**)*))")
    assert serialize_all(paper_tree(4, 2), paper_tree(5, 1), paper_tree(5, 7)) == (
        "(*((**)*))", "(*(*(*(**))))", "((**)((**)*))")


def serialize_all(*ts):
    return tuple(serialize(t) for t in ts)


def test_shared_bottom_examples():
    assert shared_bottom_witness(left_crooked(5), right_crooked(5)) == "00100"
    assert shared_bottom_witness(left_comb(4), right_comb(4)) is None
    assert shared_bottom_witness(left_comb(3), right_comb(3)) == "010"
    with pytest.raises(NotPathTrees):
        shared_bottom_witness(deserialize("((**)(**))"), left_comb(4))
    with pytest.raises(NotPathTrees):
        shared_bottom_witness(CHERRY, CHERRY)


def test_pack_roundtrip():
    assert pack("012") == 0b000110
    assert unpack(pack("2101"), 4) == "2101"


def test_fast_engine_matches_stream_exhaustively():
    for n in range(1, 7):
        ts = all_trees(n)
        for i, a in enumerate(ts):
            for b in ts[i:]:
                assert fast_parse_words(a, b) == parse_words(a, b)


@given(tree_pairs(max_n=9))
def test_engines_agree(pair):
    t1, t2 = pair
    slow = parse_words(t1, t2)
    assert fast_parse_words(t1, t2) == slow
    assert count_parse_words(t1, t2) == len(slow)
    words = common_class_words(t1, t2)
    assert all(root_label(t1, w) == 0 and parses(t2, w) for w in words)
    first = first_common_word(t1, t2)
    assert (first is None) == (not slow.classes)


@given(tree_pairs(min_n=2, max_n=9))
def test_symmetry_and_raw_count(pair):
    t1, t2 = pair
    s = parse_words(t1, t2)
    assert s == parse_words(t2, t1)
    assert s.raw_count == 6 * len(s)


@given(tree_pairs(max_n=9))
def test_reflection(pair):
    t1, t2 = pair
    left = {canonicalize(w[::-1]) for w in parse_words(t1, t2).classes}
    assert left == set(parse_words(mirror(t1), mirror(t2)).classes)


@given(path_trees(min_n=3, max_n=12), st.data())
def test_shared_bottom_property(t1, data):
    t2 = data.draw(path_trees(min_n=t1.n_leaves, max_n=t1.n_leaves))
    w = shared_bottom_witness(t1, t2)
    if w is not None:
        assert parses(t1, w) and parses(t2, w)


def test_class_key_count_is_class_count():
    for n in range(2, 8):
        for t in all_trees(n):
            assert len(class_keys(t)) == 2 ** (n - 2)
    assert catalan(10) == 16796
