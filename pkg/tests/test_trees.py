from __future__ import annotations

import pickle

import pytest
from hypothesis import given, strategies as st

from conftest import path_trees, trees
from parsewords.enumeration import all_path_trees, all_trees
from parsewords.errors import BadParams, LeafIndexError, NotAPathTree, TreeParseError
from parsewords.trees import (
    CHERRY,
    LEAF,
    LeafInterval,
    Tree,
    bottom_leaf_pairs,
    decode_path,
    deserialize,
    encode_path,
    is_path_tree,
    leaf_addresses,
    leaf_level,
    left_comb,
    left_crooked,
    left_turn,
    make_family,
    mirror,
    replace_at,
    right_comb,
    right_crooked,
    right_turn,
    serialize,
    subtree_at,
    subtree_span,
    vertices,
)


def test_decode_examples():
    assert decode_path("ll") is left_comb(4)
    assert decode_path("") is CHERRY
    assert decode_path("lr") is left_crooked(4)
    assert serialize(decode_path("ll")) == "(((**)*)*)"


def test_encode_examples():
    assert encode_path(right_comb(5)) == "rrr"
    assert encode_path(CHERRY) == ""
    with pytest.raises(NotAPathTree):
        encode_path(deserialize("((**)(**))"))
    with pytest.raises(NotAPathTree):
        encode_path(LEAF)


def test_families():
    assert left_turn(2, 3) is decode_path("llr")
    assert right_turn(2, 3) is decode_path("rrl")
    assert left_crooked(5) is decode_path("lrl")
    assert right_crooked(6) is decode_path("rlrl")
    assert left_comb(2) is CHERRY
    assert make_family("left-turn", 1, 4) is decode_path("lrr")
    for kind, params in [("left-comb", (1,)), ("left-turn", (0, 3)), ("right-turn", (2, 1)),
                         ("left-crooked", (3, 3)), ("left-turn", (2,))]:
        with pytest.raises(BadParams):
            make_family(kind, *params)


def test_leaf_levels():
    assert leaf_level(left_comb(4), 1) == 3
    assert leaf_level(right_comb(5), 1) == 1
    assert [leaf_level(CHERRY, i) for i in (1, 2)] == [1, 1]
    with pytest.raises(LeafIndexError):
        leaf_level(CHERRY, 3)
    with pytest.raises(IndexError):
        leaf_level(CHERRY, 0)


def test_bottom_leaves():
    assert bottom_leaf_pairs(CHERRY) == [1]
    assert bottom_leaf_pairs(left_crooked(5)) == [2]
    assert bottom_leaf_pairs(deserialize("((**)(**))")) == [1, 3]
    assert bottom_leaf_pairs(LEAF) == []


def test_spans():
    t = left_turn(2, 3)
    assert subtree_span(t, "") == LeafInterval(1, 5)
    assert subtree_span(t, "ll") == LeafInterval(1, 3)
    for i, a in enumerate(leaf_addresses(t), start=1):
        assert subtree_span(t, a) == LeafInterval(i, i)
    assert str(LeafInterval(2, 4)) == "[2..4]" and LeafInterval(2, 4).size == 3


def test_serialization_examples():
    assert serialize(CHERRY) == "(**)"
    assert serialize(left_comb(3)) == "((**)*)"
    assert deserialize("path:lr") is left_crooked(4)
    assert deserialize("*") is LEAF


@pytest.mark.parametrize("text,offset", [("", 0), ("(**", 3), ("(***)", 3), ("(*)", 2),
                                         ("(**)*", 4), ("(*x)", 2), ("path:lx", 6)])
def test_deserialize_errors(text, offset):
    with pytest.raises(TreeParseError) as info:
        deserialize(text)
    assert info.value.offset == offset


def test_tree_values():
    assert Tree(LEAF, LEAF) is CHERRY
    assert hash(deserialize("((**)*)")) == hash(left_comb(3))
    assert pickle.loads(pickle.dumps(left_crooked(7))) is left_crooked(7)
    with pytest.raises(AttributeError):
        CHERRY.left = LEAF
    with pytest.raises(ValueError):
        Tree(LEAF, None)


def test_space_sizes():
    assert [len(all_trees(n)) for n in range(1, 9)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [len(all_path_trees(n)) for n in range(2, 10)] == [2 ** (n - 2) for n in range(2, 10)]
    assert len(set(all_trees(7))) == 132
    assert all(is_path_tree(t) for t in all_path_trees(6))
    assert sum(is_path_tree(t) for t in all_trees(6)) == 16


@given(st.text("lr", max_size=12))
def test_path_roundtrip(word):
    t = decode_path(word)
    assert t.n_leaves == len(word) + 2
    assert encode_path(t) == word
    assert is_path_tree(t)


@given(trees(max_n=10))
def test_serialize_roundtrip(t):
    assert deserialize(serialize(t)) is t


@given(trees(max_n=10))
def test_spans_partition(t):
    for address, sub, span in vertices(t):
        assert span.size == sub.n_leaves
        assert subtree_at(t, address) is sub
        if not sub.is_leaf:
            left = subtree_span(t, address + "l")
            right = subtree_span(t, address + "r")
            assert left.lo == span.lo and right.hi == span.hi and left.hi + 1 == right.lo


@given(trees(min_n=2, max_n=10))
def test_bottom_pairs_nonempty(t):
    pairs = bottom_leaf_pairs(t)
    assert pairs
    if not is_path_tree(t):
        assert len(pairs) >= 2
    else:
        assert len(pairs) == 1


@given(trees(max_n=9))
def test_mirror_involution(t):
    m = mirror(t)
    assert mirror(m) is t
    n = t.n_leaves
    assert [leaf_level(m, i) for i in range(1, n + 1)] == [
        leaf_level(t, n + 1 - i) for i in range(1, n + 1)
    ]


@given(path_trees(min_n=3), st.data())
def test_replace_at(t, data):
    address = data.draw(st.sampled_from(leaf_addresses(t)))
    bigger = replace_at(t, address, CHERRY)
    assert bigger.n_leaves == t.n_leaves + 1
    assert subtree_at(bigger, address) is CHERRY
