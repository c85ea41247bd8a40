"""The grammar 0 -> 12|21, 1 -> 02|20, 2 -> 01|10 on binary derivation trees.

Words are ``str`` over ``"012"``.  A tree parses a word when the leaves,
labelled with the word, extend to a labelling in which every internal vertex
has two distinctly labelled children and carries the remaining letter.  That
extension is unique, so parsing runs bottom-up with no search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .errors import LengthMismatch, TooShort
from .trees import Tree

__all__ = [
    "LETTERS",
    "PERMUTATIONS",
    "Labeling",
    "ClassFlags",
    "parse",
    "parses",
    "root_label",
    "root_letter_by_parity",
    "iter_words",
    "words_of",
    "permute",
    "canonicalize",
    "class_orbit",
    "transposition",
    "class_predicates",
]

LETTERS = "012"

# Each permutation is stored as a str.translate table; index 0 is the identity.
PERMUTATIONS: tuple[dict[int, int], ...] = tuple(
    str.maketrans(LETTERS, "".join(p)) for p in permutations(LETTERS)
)


class _Program:
    """Postorder evaluation plan for one tree.

    Slots ``0..n-1`` hold the leaves; slot ``n + k`` holds the ``k``-th
    internal vertex in postorder, computed from ``steps[k] = (a, b)``.
    """

    __slots__ = ("n", "steps", "addresses", "slot_of")

    def __init__(self, t: Tree):
        leaves: list[str] = []
        internal: list[str] = []
        steps: list[tuple[int, int]] = []
        n = t.n_leaves

        def walk(sub: Tree, address: str) -> int:
            if sub.is_leaf:
                leaves.append(address)
                return len(leaves) - 1
            a = walk(sub.left, address + "l")
            b = walk(sub.right, address + "r")
            steps.append((a, b))
            internal.append(address)
            return n + len(internal) - 1

        walk(t, "")
        self.n = n
        self.steps = tuple(steps)
        self.addresses = tuple(leaves + internal)
        self.slot_of = {a: k for k, a in enumerate(self.addresses)}


@lru_cache(maxsize=1 << 14)
def _program(t: Tree) -> _Program:
    return _Program(t)


def _letters(t: Tree, w: str) -> list[int]:
    if len(w) != t.n_leaves:
        raise LengthMismatch(f"word of length {len(w)} for a {t.n_leaves}-leaf tree")
    try:
        out = [LETTERS.index(c) for c in w]
    except ValueError:
        raise ValueError(f"word {w!r} uses letters outside {{0,1,2}}") from None
    return out


def _run(prog: _Program, labels: list[int]) -> bool:
    for a, b in prog.steps:
        x = labels[a]
        y = labels[b]
        if x == y:
            return False
        labels.append(3 - x - y)
    return True


@dataclass(frozen=True)
class Labeling:
    """A valid labelling of every vertex of ``tree``."""

    tree: Tree
    word: str
    labels: tuple[int, ...]

    @property
    def root(self) -> int:
        return self.labels[-1]

    def at(self, address: str) -> int:
        return self.labels[_program(self.tree).slot_of[address]]

    def as_dict(self) -> dict[str, int]:
        prog = _program(self.tree)
        return {a: self.labels[k] for k, a in enumerate(prog.addresses)}

    def render(self) -> str:
        """Tree literal with labels: leaves as digits, internal as ``d(L R)``."""

        def go(sub: Tree, address: str) -> str:
            d = str(self.at(address))
            if sub.is_leaf:
                return d
            return f"{d}({go(sub.left, address + 'l')} {go(sub.right, address + 'r')})"

        return go(self.tree, "")

    def __str__(self) -> str:
        return self.render()


def parse(t: Tree, w: str) -> Labeling | None:
    """The labelling of ``t`` with leaves ``w``, or None if there is none."""
    prog = _program(t)
    labels = _letters(t, w)
    if not _run(prog, labels):
        return None
    return Labeling(t, w, tuple(labels))


def parses(t: Tree, w: str) -> bool:
    return _run(_program(t), _letters(t, w))


def root_label(t: Tree, w: str) -> int | None:
    prog = _program(t)
    labels = _letters(t, w)
    if not _run(prog, labels):
        return None
    return labels[-1]


def root_letter_by_parity(w: str) -> int | None:
    """The letter any parsing tree must put at the root, or None if no tree
    can parse ``w``.

    The root letter is the one whose count has the parity of ``len(w)``
    while the other two counts have the opposite parity.
    """
    if not w:
        raise TooShort("empty word")
    n = len(w) & 1
    odd = [w.count(c) & 1 for c in LETTERS]
    matches = [r for r in range(3) if odd[r] == n]
    if len(matches) == 1:
        return matches[0]
    return None


def _choices(parent: int) -> tuple[tuple[int, int], tuple[int, int]]:
    a, b = [x for x in range(3) if x != parent]
    return (a, b), (b, a)


def _gen(t: Tree, label: int) -> Iterator[str]:
    if t.is_leaf:
        yield LETTERS[label]
        return
    for a, b in _choices(label):
        for lw in _gen(t.left, a):
            for rw in _gen(t.right, b):
                yield lw + rw


def iter_words(t: Tree, root: int | None = None) -> Iterator[str]:
    """Every word parsed by ``t``.

    Order: root letter ascending, then the rule choices at the internal
    vertices read in preorder, with the ascending child pair first.
    """
    roots = range(3) if root is None else (root,)
    for r in roots:
        yield from _gen(t, r)


def words_of(t: Tree) -> Iterator[tuple[str, Labeling]]:
    """Stream ``(word, labelling)`` for all ``3 * 2**(n-1)`` parse words."""
    prog = _program(t)
    for w in iter_words(t):
        labels = [LETTERS.index(c) for c in w]
        _run(prog, labels)
        yield w, Labeling(t, w, tuple(labels))


def permute(w: str, perm: int | dict[int, int]) -> str:
    table = PERMUTATIONS[perm] if isinstance(perm, int) else perm
    return w.translate(table)


def transposition(a: int, b: int) -> dict[int, int]:
    """Letter swap ``a <-> b`` as a translate table (identity when equal)."""
    src = LETTERS
    dst = list(LETTERS)
    dst[a], dst[b] = dst[b], dst[a]
    return str.maketrans(src, "".join(dst))


def class_orbit(w: str) -> frozenset[str]:
    return frozenset(w.translate(p) for p in PERMUTATIONS)


def canonicalize(w: str) -> str:
    """Lexicographically least word among the six alphabet permutations."""
    return min(w.translate(p) for p in PERMUTATIONS)


@dataclass(frozen=True)
class ClassFlags:
    has_00v: bool
    has_v00: bool
    has_u00v: bool
    is_01v1: bool
    is_01v00: bool
    is_01v2: bool


def class_predicates(w: str, reading: str = "invariant") -> ClassFlags:
    """Pattern tests for a word class.

    ``reading="invariant"`` reads each pattern up to alphabet permutation
    (``00v`` means the first two letters agree, and so on).
    ``reading="literal"`` matches the pattern letters against the canonical
    representative only.  Patterns longer than the word are False.
    """
    n = len(w)
    if n < 2:
        raise TooShort(f"pattern tests need at least 2 letters, got {n}")
    if reading == "literal":
        c = canonicalize(w)
        return ClassFlags(
            has_00v=c.startswith("00"),
            has_v00=c.endswith("00"),
            has_u00v="00" in c,
            is_01v1=n >= 3 and c.startswith("01") and c.endswith("1"),
            is_01v00=n >= 4 and c.startswith("01") and c.endswith("00"),
            is_01v2=n >= 3 and c.startswith("01") and c.endswith("2"),
        )
    if reading != "invariant":
        raise ValueError(f"unknown reading {reading!r}")
    first, second, last = w[0], w[1], w[-1]
    return ClassFlags(
        has_00v=first == second,
        has_v00=w[-2] == last,
        has_u00v=any(w[k] == w[k + 1] for k in range(n - 1)),
        is_01v1=n >= 3 and first != second and last == second,
        is_01v00=n >= 4 and first != second and w[-2] == last == first,
        is_01v2=n >= 3 and len({first, second, last}) == 3,
    )
