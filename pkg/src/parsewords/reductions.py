"""Growing and shrinking tree pairs: cherries, duplication, triplication,
common-subtree decomposition, and a recursive solver built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .enumeration import TreePair, first_common_word
from .errors import LeafIndexError, LengthMismatch, RootLeaf
from .grammar import LETTERS, parses, root_letter_by_parity, transposition
from .trees import (
    CHERRY,
    LEAF,
    LeafInterval,
    Tree,
    leaf_addresses,
    replace_at,
    subtree_at,
    vertices,
)

__all__ = [
    "ReductionStep",
    "CrookednessReport",
    "attach_cherry",
    "remove_cherry",
    "duplicate_leaf",
    "unduplicate_leaf",
    "triplicate_leaf",
    "untriplicate_leaf",
    "is_duplicated_at",
    "is_triplicated_at",
    "crookedness",
    "find_decompositions",
    "maximal_decompositions",
    "splice_solve",
    "triplication_word_lift",
]


def _leaf_address(t: Tree, i: int) -> str:
    if not 1 <= i <= t.n_leaves:
        raise LeafIndexError(f"leaf {i} outside 1..{t.n_leaves}")
    return leaf_addresses(t)[i - 1]


def attach_cherry(t: Tree, i: int) -> Tree:
    """Replace leaf ``i`` by a two-leaf subtree."""
    return replace_at(t, _leaf_address(t, i), CHERRY)


def remove_cherry(t: Tree, i: int) -> Tree:
    """Inverse of :func:`attach_cherry`: leaves ``i``, ``i + 1`` must be siblings."""
    a = _leaf_address(t, i)
    b = _leaf_address(t, i + 1)
    if not (a.endswith("l") and b == a[:-1] + "r"):
        raise ValueError(f"leaves {i}, {i + 1} are not siblings")
    return replace_at(t, a[:-1], LEAF)


def duplicate_leaf(t: Tree, i: int) -> Tree:
    """Insert a cherry between leaf ``i`` and its sibling subtree ``S``.

    A left leaf ``i`` turns ``(i S)`` into ``(i (x S))``; a right leaf turns
    ``(S i)`` into ``((S x) i)``.  Either way leaves ``i`` and ``i + 1`` of
    the result sit on the same side, on consecutive levels.
    """
    if t.is_leaf:
        raise RootLeaf("a single leaf cannot be duplicated")
    a = _leaf_address(t, i)
    parent = subtree_at(t, a[:-1])
    if a.endswith("l"):
        new = Tree(LEAF, Tree(LEAF, parent.right))
    else:
        new = Tree(Tree(parent.left, LEAF), LEAF)
    return replace_at(t, a[:-1], new)


def is_duplicated_at(t: Tree, i: int) -> bool:
    """Leaves ``i``, ``i + 1`` are in uncle-nephew position (same side, consecutive levels)."""
    addr = leaf_addresses(t)
    if not 1 <= i < len(addr):
        return False
    a, b = addr[i - 1], addr[i]
    if a.endswith("l") and b == a[:-1] + "rl":
        return True
    return b.endswith("r") and a == b[:-1] + "lr"


def unduplicate_leaf(t: Tree, i: int) -> Tree:
    """Inverse of :func:`duplicate_leaf`."""
    addr = leaf_addresses(t)
    if not is_duplicated_at(t, i):
        raise ValueError(f"leaves {i}, {i + 1} are not in duplicated position")
    a = addr[i - 1]
    if a.endswith("l"):
        p = a[:-1]
        return replace_at(t, p, Tree(LEAF, subtree_at(t, p + "rr")))
    p = addr[i][:-1]
    return replace_at(t, p, Tree(subtree_at(t, p + "ll"), LEAF))


def triplicate_leaf(t: Tree, i: int) -> Tree:
    """Duplicate leaf ``i`` twice, giving three same-side leaves ``i..i+2``."""
    return duplicate_leaf(duplicate_leaf(t, i), i)


def is_triplicated_at(t: Tree, i: int) -> bool:
    addr = leaf_addresses(t)
    if not 1 <= i <= len(addr) - 2:
        return False
    a, b, c = addr[i - 1], addr[i], addr[i + 1]
    if a.endswith("l"):
        p = a[:-1]
        return b == p + "rl" and c == p + "rrl"
    if c.endswith("r"):
        p = c[:-1]
        return b == p + "lr" and a == p + "llr"
    return False


def untriplicate_leaf(t: Tree, i: int) -> Tree:
    if not is_triplicated_at(t, i):
        raise ValueError(f"leaves {i}..{i + 2} are not in triplicated position")
    return unduplicate_leaf(unduplicate_leaf(t, i), i)


def _is_cherry_at(t: Tree, i: int) -> bool:
    addr = leaf_addresses(t)
    if not 1 <= i < len(addr):
        return False
    a = addr[i - 1]
    return a.endswith("l") and addr[i] == a[:-1] + "r"


@dataclass(frozen=True)
class CrookednessReport:
    duplicable_sites: tuple[int, ...]
    triplicable_sites: tuple[int, ...]

    @property
    def mutually_crooked(self) -> bool:
        return not self.duplicable_sites

    @property
    def weakly_mutually_crooked(self) -> bool:
        return not self.triplicable_sites


def _check_pair(t1: Tree, t2: Tree) -> None:
    if t1.n_leaves != t2.n_leaves:
        raise LengthMismatch(f"{t1.n_leaves} vs {t2.n_leaves} leaves")


def crookedness(t1: Tree, t2: Tree) -> CrookednessReport:
    """Sites where both trees could come from duplicating/triplicating the same leaf."""
    _check_pair(t1, t2)
    n = t1.n_leaves
    dup = tuple(i for i in range(1, n) if is_duplicated_at(t1, i) and is_duplicated_at(t2, i))
    tri = tuple(
        i for i in range(1, n - 1) if is_triplicated_at(t1, i) and is_triplicated_at(t2, i)
    )
    return CrookednessReport(dup, tri)


@lru_cache(maxsize=1 << 14)
def _spans(t: Tree) -> dict[LeafInterval, str]:
    return {span: address for address, _, span in vertices(t)}


def find_decompositions(t1: Tree, t2: Tree) -> list[LeafInterval]:
    """Leaf intervals of size 2..n-1 hanging below a vertex in both trees."""
    _check_pair(t1, t2)
    n = t1.n_leaves
    s2 = _spans(t2)
    return sorted(
        span for span in _spans(t1) if 1 < span.size < n and span in s2
    )


def maximal_decompositions(t1: Tree, t2: Tree) -> list[LeafInterval]:
    """Common intervals not contained in a larger common interval, largest first."""
    spans = find_decompositions(t1, t2)
    top = [
        s for s in spans
        if not any(o != s and o.lo <= s.lo and s.hi <= o.hi for o in spans)
    ]
    return sorted(top, key=lambda s: (-s.size, s.lo))


@dataclass(frozen=True)
class ReductionStep:
    """One move of :func:`splice_solve`.

    ``kind`` is one of ``decompose``, ``bottom-bottom``, ``untriplicate``,
    ``bottom-comb``, ``unduplicate``, ``brute-force``.  ``residue`` holds the
    smaller pair(s) the move reduced to; ``alternatives`` lists other sites
    that were available at the same point.
    """

    kind: str
    n: int
    site: int | LeafInterval | None = None
    residue: tuple[TreePair, ...] = ()
    alternatives: tuple = ()
    depth: int = 0
    word: str | None = None

    def describe(self) -> str:
        pad = "  " * self.depth
        site = "" if self.site is None else f" at {self.site}"
        sizes = ",".join(str(p.n) for p in self.residue)
        residue = f" -> n={sizes}" if sizes else ""
        alt = ""
        if self.alternatives:
            alt = " (also " + ", ".join(str(a) for a in self.alternatives) + ")"
        word = f" word={self.word}" if self.word is not None else " no word"
        return f"{pad}{self.kind}{site} on n={self.n}{residue}{alt}:{word}"


@dataclass
class _Solver:
    trace: list[ReductionStep] | None = None
    base_size: int = 3
    _memo: dict = field(default_factory=dict)

    # steps are recorded parent-first: a slot is reserved before recursing
    def reserve(self) -> int:
        if self.trace is None:
            return -1
        self.trace.append(None)
        return len(self.trace) - 1

    def fill(self, slot: int, step: ReductionStep) -> None:
        if self.trace is not None:
            self.trace[slot] = step

    def solve(self, t1: Tree, t2: Tree, depth: int = 0) -> str | None:
        if self.trace is not None:
            return self._solve(t1, t2, depth)
        key = (t1, t2)
        if key not in self._memo:
            self._memo[key] = self._solve(t1, t2, depth)
        return self._memo[key]

    def _brute(self, t1: Tree, t2: Tree, depth: int) -> str | None:
        slot = self.reserve()
        w = first_common_word(t1, t2)
        self.fill(slot, ReductionStep("brute-force", t1.n_leaves, depth=depth, word=w))
        return w

    def _solve(self, t1: Tree, t2: Tree, depth: int) -> str | None:
        n = t1.n_leaves
        if n <= self.base_size:
            return self._brute(t1, t2, depth)

        spans = maximal_decompositions(t1, t2)
        if spans:
            return self._decompose(t1, t2, spans, depth)

        report = crookedness(t1, t2)
        if report.triplicable_sites:
            i = report.triplicable_sites[0]
            r1, r2 = untriplicate_leaf(t1, i), untriplicate_leaf(t2, i)
            slot = self.reserve()
            sub = self.solve(r1, r2, depth + 1)
            w = None if sub is None else triplication_word_lift(sub, i)
            if w is not None and not (parses(t1, w) and parses(t2, w)):
                raise AssertionError(f"triplication lift {sub} -> {w} failed")
            self.fill(slot, ReductionStep("untriplicate", n, i, (TreePair(r1, r2),),
                                          report.triplicable_sites[1:], depth, w))
            # the lift only works one way, so an empty residue decides nothing
            if w is not None:
                return w

        # a cherry in one tree against a duplicated pair in the other shrinks
        # without changing the class count; duplicated in both only might work
        guaranteed, hopeful = [], []
        for i in range(1, n):
            c1, c2 = _is_cherry_at(t1, i), _is_cherry_at(t2, i)
            d1, d2 = is_duplicated_at(t1, i), is_duplicated_at(t2, i)
            if (c1 and d2) or (d1 and c2):
                guaranteed.append(i)
            elif d1 and d2:
                hopeful.append(i)
        for kind, sites in (("bottom-comb", guaranteed), ("unduplicate", hopeful)):
            for i in sites:
                r1 = remove_cherry(t1, i) if _is_cherry_at(t1, i) else unduplicate_leaf(t1, i)
                r2 = remove_cherry(t2, i) if _is_cherry_at(t2, i) else unduplicate_leaf(t2, i)
                others = tuple(s for s in guaranteed + hopeful if s != i)
                slot = self.reserve()
                sub = self.solve(r1, r2, depth + 1)
                w = None if sub is None else _extend(t1, t2, sub, i)
                self.fill(slot, ReductionStep(kind, n, i, (TreePair(r1, r2),), others, depth, w))
                if w is not None:
                    return w
                if kind == "bottom-comb":
                    if sub is None:
                        return None
                    raise AssertionError(f"cherry/duplicate extension failed at site {i}")
        return self._brute(t1, t2, depth)

    def _decompose(self, t1: Tree, t2: Tree, spans: list[LeafInterval], depth: int) -> str | None:
        n = t1.n_leaves
        span = spans[0]
        a1 = _spans(t1)[span]
        a2 = _spans(t2)[span]
        s1, s2 = subtree_at(t1, a1), subtree_at(t2, a2)
        r1, r2 = replace_at(t1, a1, LEAF), replace_at(t2, a2, LEAF)
        kind = "bottom-bottom" if span.size == 2 else "decompose"
        residue = (TreePair(s1, s2), TreePair(r1, r2))
        slot = self.reserve()
        inner = self.solve(s1, s2, depth + 1)
        outer = None if inner is None else self.solve(r1, r2, depth + 1)
        w = None
        if inner is not None and outer is not None:
            want = LETTERS.index(outer[span.lo - 1])
            have = root_letter_by_parity(inner)
            inner = inner.translate(transposition(have, want))
            w = outer[: span.lo - 1] + inner + outer[span.lo:]
            if not (parses(t1, w) and parses(t2, w)):
                raise AssertionError(f"splice of {inner} into {outer} failed")
        self.fill(slot, ReductionStep(kind, n, span, residue, tuple(spans[1:]), depth, w))
        return w


def _extend(t1: Tree, t2: Tree, w: str, i: int) -> str | None:
    """Try every two-letter replacement of ``w[i-1]``, doubled letters first."""
    head, tail = w[: i - 1], w[i:]
    c = w[i - 1]
    candidates = [c + c] + ["".join(p) for p in product(LETTERS, repeat=2) if p != (c, c)]
    for pair in candidates:
        cand = head + pair + tail
        if parses(t1, cand) and parses(t2, cand):
            return cand
    return None


def splice_solve(t1: Tree, t2: Tree, trace: list[ReductionStep] | None = None) -> str | None:
    """A common parse word found by reducing the pair, or None if there is none.

    Every returned word has been checked against both trees.  Moves are
    tried in the order: split off a common subtree, undo a shared
    triplication, undo a duplication, and only then enumerate.
    """
    _check_pair(t1, t2)
    solver = _Solver(trace=trace)
    w = solver.solve(t1, t2)
    if w is not None and not (parses(t1, w) and parses(t2, w)):
        raise AssertionError(f"splice_solve produced a non-word {w}")
    return w


def triplication_word_lift(w: str, i: int) -> str:
    """Repeat letter ``i`` (1-based) three times."""
    if not 1 <= i <= len(w):
        raise LeafIndexError(f"position {i} outside 1..{len(w)}")
    return w[:i] + w[i - 1] * 2 + w[i:]
