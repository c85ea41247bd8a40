"""Rooted ordered binary trees, path-tree encoding and the named families.

Leaves are numbered 1..n from left to right and levels start at 0 for the
root.  A vertex is addressed by the string of ``l``/``r`` steps that leads
to it from the root, so ``""`` is the root and ``"lr"`` is the right child
of the root's left child.
"""

from __future__ import annotations

import enum
import threading
import weakref
from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import BadParams, LeafIndexError, NotAPathTree, RootLeaf, TreeParseError

__all__ = [
    "Tree",
    "LEAF",
    "CHERRY",
    "LeafInterval",
    "Family",
    "decode_path",
    "encode_path",
    "is_path_tree",
    "make_family",
    "left_comb",
    "right_comb",
    "left_turn",
    "right_turn",
    "left_crooked",
    "right_crooked",
    "leaf_addresses",
    "leaf_level",
    "bottom_leaf_pairs",
    "vertices",
    "subtree_at",
    "subtree_span",
    "replace_at",
    "mirror",
    "serialize",
    "deserialize",
]


class Tree:
    """Immutable binary tree: either a leaf or an internal vertex with two children.

    Trees are hash-consed: building the same shape twice returns the same
    object, so structural equality is identity and trees are cheap dict keys.
    """

    __slots__ = ("left", "right", "n_leaves", "_hash", "__weakref__")

    _interned: weakref.WeakValueDictionary = weakref.WeakValueDictionary()
    _lock = threading.Lock()

    def __new__(cls, left: Tree | None = None, right: Tree | None = None):
        if (left is None) != (right is None):
            raise ValueError("a vertex has either 0 or 2 children")
        # a live node keeps its children alive, so their ids cannot be reused
        key = (id(left), id(right))
        with cls._lock:
            node = cls._interned.get(key)
            if node is None:
                node = object.__new__(cls)
                set_ = object.__setattr__
                set_(node, "left", left)
                set_(node, "right", right)
                if left is None:
                    set_(node, "n_leaves", 1)
                    set_(node, "_hash", hash(("leaf",)))
                else:
                    set_(node, "n_leaves", left.n_leaves + right.n_leaves)
                    set_(node, "_hash", hash((left._hash, right._hash)))
                cls._interned[key] = node
        return node

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __len__(self) -> int:
        return self.n_leaves

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return self is other

    def __reduce__(self):
        return (Tree, (self.left, self.right))

    def __repr__(self) -> str:
        return f"Tree({serialize(self)!r})"

    def __str__(self) -> str:
        return serialize(self)


LEAF = Tree()
CHERRY = Tree(LEAF, LEAF)


class LeafInterval(NamedTuple):
    """Closed interval ``lo..hi`` of 1-based leaf indices."""

    lo: int
    hi: int

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __str__(self) -> str:
        return f"[{self.lo}..{self.hi}]"


# -- path trees ---------------------------------------------------------------

def decode_path(word: str) -> Tree:
    """Build the path tree whose level-``d`` internal vertex has its internal
    child on side ``word[d]``.  The result has ``len(word) + 2`` leaves."""
    bad = set(word) - {"l", "r"}
    if bad:
        raise BadParams(f"path words use only 'l' and 'r', got {sorted(bad)}")
    t = CHERRY
    for letter in reversed(word):
        t = Tree(t, LEAF) if letter == "l" else Tree(LEAF, t)
    return t


def encode_path(t: Tree) -> str:
    """Inverse of :func:`decode_path`."""
    if t.is_leaf:
        raise NotAPathTree("a single leaf has no path word")
    out = []
    while True:
        left, right = t.left, t.right
        if left.is_leaf and right.is_leaf:
            return "".join(out)
        if not left.is_leaf and not right.is_leaf:
            raise NotAPathTree(f"level {len(out) + 2} holds more than two vertices")
        if left.is_leaf:
            out.append("r")
            t = right
        else:
            out.append("l")
            t = left


def is_path_tree(t: Tree) -> bool:
    while not t.is_leaf:
        if not t.left.is_leaf and not t.right.is_leaf:
            return False
        t = t.right if t.left.is_leaf else t.left
    return True


class Family(str, enum.Enum):
    LEFT_COMB = "left-comb"
    RIGHT_COMB = "right-comb"
    LEFT_TURN = "left-turn"
    RIGHT_TURN = "right-turn"
    LEFT_CROOKED = "left-crooked"
    RIGHT_CROOKED = "right-crooked"


def _alternate(first: str, second: str, length: int) -> str:
    return ((first + second) * (length // 2 + 1))[:length]


def make_family(kind: Family | str, *params: int) -> Tree:
    """Construct a named path tree.

    Combs and crooked trees take ``n``; turn trees take ``(m, n)`` and have
    ``m + n`` leaves.
    """
    kind = Family(kind)
    if kind in (Family.LEFT_TURN, Family.RIGHT_TURN):
        if len(params) != 2:
            raise BadParams(f"{kind.value} takes (m, n)")
        m, n = params
        if m < 1 or n < 2:
            raise BadParams(f"{kind.value}({m}, {n}) needs m >= 1 and n >= 2")
        if kind is Family.LEFT_TURN:
            return decode_path("l" * m + "r" * (n - 2))
        return decode_path("r" * m + "l" * (n - 2))
    if len(params) != 1:
        raise BadParams(f"{kind.value} takes a single n")
    (n,) = params
    if n < 2:
        raise BadParams(f"{kind.value}({n}) needs n >= 2")
    word = {
        Family.LEFT_COMB: "l" * (n - 2),
        Family.RIGHT_COMB: "r" * (n - 2),
        Family.LEFT_CROOKED: _alternate("l", "r", n - 2),
        Family.RIGHT_CROOKED: _alternate("r", "l", n - 2),
    }[kind]
    return decode_path(word)


def left_comb(n: int) -> Tree:
    return make_family(Family.LEFT_COMB, n)


def right_comb(n: int) -> Tree:
    return make_family(Family.RIGHT_COMB, n)


def left_turn(m: int, n: int) -> Tree:
    return make_family(Family.LEFT_TURN, m, n)


def right_turn(m: int, n: int) -> Tree:
    return make_family(Family.RIGHT_TURN, m, n)


def left_crooked(n: int) -> Tree:
    return make_family(Family.LEFT_CROOKED, n)


def right_crooked(n: int) -> Tree:
    return make_family(Family.RIGHT_CROOKED, n)


# -- geometry -----------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def leaf_addresses(t: Tree) -> tuple[str, ...]:
    """Addresses of the leaves, left to right.  ``len(address)`` is the level."""
    if t.is_leaf:
        return ("",)
    return tuple("l" + a for a in leaf_addresses(t.left)) + tuple(
        "r" + a for a in leaf_addresses(t.right)
    )


def _check_leaf(t: Tree, i: int) -> None:
    if not 1 <= i <= t.n_leaves:
        raise LeafIndexError(f"leaf {i} outside 1..{t.n_leaves}")


def leaf_level(t: Tree, i: int) -> int:
    _check_leaf(t, i)
    return len(leaf_addresses(t)[i - 1])


def bottom_leaf_pairs(t: Tree) -> list[int]:
    """Indices ``i`` such that leaves ``i`` and ``i + 1`` are siblings."""
    addr = leaf_addresses(t)
    return [
        i + 1
        for i in range(len(addr) - 1)
        if addr[i].endswith("l") and addr[i + 1] == addr[i][:-1] + "r"
    ]


def vertices(t: Tree) -> Iterator[tuple[str, Tree, LeafInterval]]:
    """Every vertex in preorder as ``(address, subtree, leaf span)``."""
    stack = [("", t, 1)]
    while stack:
        address, sub, lo = stack.pop()
        yield address, sub, LeafInterval(lo, lo + sub.n_leaves - 1)
        if not sub.is_leaf:
            stack.append((address + "r", sub.right, lo + sub.left.n_leaves))
            stack.append((address + "l", sub.left, lo))


def subtree_at(t: Tree, address: str) -> Tree:
    for step in address:
        if t.is_leaf:
            raise KeyError(f"address {address!r} runs past a leaf")
        t = t.left if step == "l" else t.right
    return t


def subtree_span(t: Tree, address: str) -> LeafInterval:
    """Leaf interval hanging below the vertex at ``address``."""
    lo = 1
    sub = t
    for step in address:
        if sub.is_leaf:
            raise KeyError(f"address {address!r} runs past a leaf")
        if step == "l":
            sub = sub.left
        else:
            lo += sub.left.n_leaves
            sub = sub.right
    return LeafInterval(lo, lo + sub.n_leaves - 1)


def replace_at(t: Tree, address: str, new: Tree) -> Tree:
    if not address:
        return new
    if t.is_leaf:
        raise KeyError(f"address {address!r} runs past a leaf")
    if address[0] == "l":
        return Tree(replace_at(t.left, address[1:], new), t.right)
    return Tree(t.left, replace_at(t.right, address[1:], new))


def sibling_address(address: str) -> str:
    if not address:
        raise RootLeaf("the root has no sibling")
    return address[:-1] + ("r" if address[-1] == "l" else "l")


@lru_cache(maxsize=1 << 16)
def mirror(t: Tree) -> Tree:
    """Left-right reflection."""
    if t.is_leaf:
        return t
    return Tree(mirror(t.right), mirror(t.left))


# -- text format --------------------------------------------------------------

def serialize(t: Tree) -> str:
    """``tree := "*" | "(" tree tree ")"``"""
    if t.is_leaf:
        return "*"
    parts = []
    stack: list[Tree | str] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif item.is_leaf:
            parts.append("*")
        else:
            parts.append("(")
            stack.extend((")", item.right, item.left))
    return "".join(parts)


def deserialize(text: str) -> Tree:
    """Parse a tree literal; ``path:<l/r word>`` is accepted as well."""
    if text.startswith("path:"):
        word = text[5:]
        for k, ch in enumerate(word):
            if ch not in "lr":
                raise TreeParseError(f"unexpected {ch!r} in path word", 5 + k)
        return decode_path(word)
    stack: list[list[Tree]] = []
    result: Tree | None = None
    for pos, ch in enumerate(text):
        if result is not None:
            raise TreeParseError("trailing characters", pos)
        if ch == "*":
            node = LEAF
        elif ch == "(":
            stack.append([])
            continue
        elif ch == ")":
            if not stack or len(stack[-1]) != 2:
                raise TreeParseError("')' must close exactly two subtrees", pos)
            node = Tree(*stack.pop())
        else:
            raise TreeParseError(f"unexpected {ch!r}", pos)
        if stack:
            if len(stack[-1]) == 2:
                raise TreeParseError("a vertex has at most two children", pos)
            stack[-1].append(node)
        else:
            result = node
    if result is None:
        raise TreeParseError("unexpected end of input", len(text))
    return result
