"""Common parse words of tree pairs, and exhaustive tree spaces.

Two routes compute ParseWords(t1, t2):

* :func:`parse_words` streams every word of ``t1`` and keeps those ``t2``
  parses.  Slow but easy to audit.
* :func:`class_keys` packs words two bits per letter and represents each word
  class of a tree by one integer, so counting is a set intersection.  Every
  class has exactly two members with root letter 0 (they differ by swapping
  1 and 2) and exactly one of those has root children labelled (1, 2), so
  generating only that rule at the root visits each class once.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, NamedTuple

from .errors import LengthMismatch, NotPathTrees
from .grammar import LETTERS, canonicalize, iter_words, parses
from .trees import LEAF, Tree, bottom_leaf_pairs, decode_path, is_path_tree

__all__ = [
    "TreePair",
    "ParseWordSet",
    "parse_words",
    "fast_parse_words",
    "count_parse_words",
    "class_keys",
    "common_class_words",
    "first_common_word",
    "pack",
    "unpack",
    "catalan",
    "all_trees",
    "all_path_trees",
    "tree_from_rank",
    "random_tree",
    "random_path_tree",
    "shared_bottom_witness",
]


class TreePair(NamedTuple):
    t1: Tree
    t2: Tree

    @property
    def n(self) -> int:
        return self.t1.n_leaves


@dataclass(frozen=True)
class ParseWordSet:
    """Sorted canonical class representatives plus the raw word count."""

    classes: tuple[str, ...]
    raw_count: int

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[str]:
        return iter(self.classes)

    def __contains__(self, w: object) -> bool:
        return isinstance(w, str) and canonicalize(w) in self.classes

    @classmethod
    def from_words(cls, words: Iterable[str]) -> ParseWordSet:
        """Class set of some representatives; raw count is six per class (three for n = 1)."""
        classes = tuple(sorted({canonicalize(w) for w in words}))
        per = 3 if classes and len(classes[0]) == 1 else 6
        return cls(classes, per * len(classes))


def _check_pair(t1: Tree, t2: Tree) -> None:
    if t1.n_leaves != t2.n_leaves:
        raise LengthMismatch(f"{t1.n_leaves} vs {t2.n_leaves} leaves")


def parse_words(t1: Tree, t2: Tree, root_fixed: bool = False) -> ParseWordSet:
    """Stream the words of ``t1``, keep those ``t2`` parses, canonicalize.

    With ``root_fixed`` only words with root letter 0 are streamed.  The
    classes are the same and the raw count is scaled by 3.
    """
    _check_pair(t1, t2)
    kept = 0
    classes = set()
    for w in iter_words(t1, root=0 if root_fixed else None):
        if parses(t2, w):
            kept += 1
            classes.add(canonicalize(w))
    if root_fixed:
        kept *= 3
    return ParseWordSet(tuple(sorted(classes)), kept)


# -- packed engine --------------------------------------------------------------

def pack(w: str) -> int:
    x = 0
    for c in w:
        x = (x << 2) | LETTERS.index(c)
    return x


def unpack(x: int, n: int) -> str:
    return "".join(LETTERS[(x >> (2 * (n - 1 - k))) & 3] for k in range(n))


def _low_mask(n: int) -> int:
    return int("01" * n, 2) if n else 0


_CACHE_LEAVES = 8


@lru_cache(maxsize=4096)
def _cached_full(t: Tree) -> tuple[list[int], list[int], list[int]]:
    return _full(t)


def _words(t: Tree) -> tuple[list[int], list[int], list[int]]:
    # only small subtrees are memoized; big word lists would dominate memory
    return _cached_full(t) if t.n_leaves <= _CACHE_LEAVES else _full(t)


def _full(t: Tree) -> tuple[list[int], list[int], list[int]]:
    """All packed words of ``t`` split by root letter."""
    if t.is_leaf:
        return [0], [1], [2]
    left = _words(t.left)
    right = _words(t.right)
    s = 2 * t.right.n_leaves
    out = []
    for p in range(3):
        a, b = [x for x in range(3) if x != p]
        words = [(lw << s) | rw for lw in left[a] for rw in right[b]]
        words += [(lw << s) | rw for lw in left[b] for rw in right[a]]
        out.append(words)
    return out[0], out[1], out[2]


@lru_cache(maxsize=4096)
def class_keys(t: Tree) -> frozenset[int]:
    """One packed integer per word class parsed by ``t``.

    The key of a class is the smaller of its two root-0 members, which does
    not depend on the tree, so class sets of different trees intersect
    directly.
    """
    if t.is_leaf:
        return frozenset((0,))
    left = _words(t.left)
    right = _words(t.right)
    s = 2 * t.right.n_leaves
    mask = _low_mask(t.n_leaves)
    keys = set()
    add = keys.add
    for lw in left[1]:
        hi = lw << s
        for rw in right[2]:
            x = hi | rw
            y = ((x & mask) << 1) | ((x >> 1) & mask)
            add(x if x < y else y)
    return frozenset(keys)


def common_class_words(t1: Tree, t2: Tree) -> list[str]:
    """Root-0 representatives of the common classes, in key order."""
    _check_pair(t1, t2)
    n = t1.n_leaves
    return [unpack(k, n) for k in sorted(class_keys(t1) & class_keys(t2))]


def fast_parse_words(t1: Tree, t2: Tree) -> ParseWordSet:
    return ParseWordSet.from_words(common_class_words(t1, t2))


def count_parse_words(t1: Tree, t2: Tree) -> int:
    """Number of common word classes."""
    _check_pair(t1, t2)
    return len(class_keys(t1) & class_keys(t2))


def first_common_word(t1: Tree, t2: Tree) -> str | None:
    """Smallest-key common word, or None when the pair shares no word."""
    _check_pair(t1, t2)
    common = class_keys(t1) & class_keys(t2)
    if not common:
        return None
    return unpack(min(common), t1.n_leaves)


# -- tree spaces ------------------------------------------------------------------

def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


@lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (LEAF,)
    out = []
    for k in range(1, n):
        for left in _all_trees(k):
            for right in _all_trees(n - k):
                out.append(Tree(left, right))
    return tuple(out)


def all_trees(n: int) -> tuple[Tree, ...]:
    """All ``catalan(n - 1)`` trees with ``n`` leaves, ordered by left-subtree
    size, then left subtree, then right subtree."""
    if n < 1:
        raise ValueError("n >= 1")
    return _all_trees(n)


def all_path_trees(n: int) -> tuple[Tree, ...]:
    """All ``2**(n - 2)`` path trees, in lexicographic order of their l/r words."""
    if n < 2:
        raise ValueError("path trees need n >= 2")
    return tuple(decode_path("".join(p)) for p in product("lr", repeat=n - 2))


def tree_from_rank(n: int, rank: int) -> Tree:
    """The ``rank``-th tree of :func:`all_trees` without building the list."""
    if not 0 <= rank < catalan(n - 1):
        raise IndexError(f"rank {rank} out of range for n={n}")
    if n == 1:
        return LEAF
    for k in range(1, n):
        right_count = catalan(n - k - 1)
        block = catalan(k - 1) * right_count
        if rank < block:
            li, ri = divmod(rank, right_count)
            return Tree(tree_from_rank(k, li), tree_from_rank(n - k, ri))
        rank -= block
    raise AssertionError("unreachable")


def random_tree(n: int, rng: random.Random) -> Tree:
    """Uniform over all ``n``-leaf trees."""
    return tree_from_rank(n, rng.randrange(catalan(n - 1)))


def random_path_tree(n: int, rng: random.Random) -> Tree:
    return decode_path("".join(rng.choice("lr") for _ in range(n - 2)))


def shared_bottom_witness(t1: Tree, t2: Tree) -> str | None:
    """``0^(k-1) 1 0^(n-k)`` when some leaf is a bottom leaf of both path trees.

    ``k`` is the shared leaf, moved inward to 2 or ``n - 1`` when the shared
    leaf is an end leaf.  The word is checked against both trees before it is
    returned.
    """
    _check_pair(t1, t2)
    n = t1.n_leaves
    if n < 3 or not (is_path_tree(t1) and is_path_tree(t2)):
        raise NotPathTrees("shared bottom leaves need two path trees with n >= 3")
    (j1,) = bottom_leaf_pairs(t1)
    (j2,) = bottom_leaf_pairs(t2)
    shared = sorted({j1, j1 + 1} & {j2, j2 + 1})
    if not shared:
        return None
    i = shared[0]
    k = 2 if i == 1 else n - 1 if i == n else i
    w = "0" * (k - 1) + "1" + "0" * (n - k)
    if not (parses(t1, w) and parses(t2, w)):
        raise AssertionError(f"witness {w} fails for a shared bottom leaf")
    return w
