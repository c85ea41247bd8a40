"""Verification campaigns: every counting theorem, reduction law and conjecture
is registered as a claim that is checked by brute force over a parameter range.

A campaign is split into parameter points (one ``n``, one ``(m, n, k)``, or one
shard of a tree-pair space).  Points are independent; results are always
emitted in point order, so reports do not depend on the worker count.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator

from . import closed_forms as cf
from .enumeration import (
    all_path_trees,
    all_trees,
    catalan,
    class_keys,
    common_class_words,
    count_parse_words,
    parse_words,
    random_tree,
    shared_bottom_witness,
)
from .errors import BadParams, RangeTooLarge, UnknownClaim
from .grammar import (
    PERMUTATIONS,
    class_predicates,
    iter_words,
    parse,
    root_letter_by_parity,
    parses,
)
from .reductions import (
    attach_cherry,
    crookedness,
    duplicate_leaf,
    splice_solve,
    triplicate_leaf,
    triplication_word_lift,
)
from .trees import (
    Tree,
    bottom_leaf_pairs,
    decode_path,
    leaf_level,
    left_comb,
    left_crooked,
    left_turn,
    right_comb,
    right_crooked,
    right_turn,
    serialize,
)
from .vectors import count_nonzero_tuples, nonzero_tuples, tau

__all__ = [
    "Settings",
    "Claim",
    "PointResult",
    "VerificationReport",
    "CLAIMS",
    "verify",
    "verify_theorem",
    "verify_conjecture",
    "estimate_cost",
    "worker_count",
]

DEFAULT_BUDGET = 10**10
WORKERS_ENV = "PARSEWORDS_WORKERS"
SHARD_SIZE = 100


@dataclass(frozen=True)
class Settings:
    """Campaign options.  ``None`` fields fall back to the claim's defaults."""

    max_n: int | None = None
    min_n: int | None = None
    samples: int = 1000
    seed: int = 20111122
    exhaustive_max: int | None = None
    space: str | None = None
    reading: str = "invariant"
    budget: int = DEFAULT_BUDGET
    force: bool = False


@dataclass(frozen=True)
class PointResult:
    claim: str
    params: dict
    expected: object
    observed: object
    status: str
    checked: int = 1
    counterexamples: tuple[str, ...] = ()

    def to_json(self) -> str:
        obj = {
            "claim": self.claim,
            "params": self.params,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
        }
        if self.counterexamples:
            obj["counterexamples"] = list(self.counterexamples)
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass
class VerificationReport:
    claim: str
    kind: str
    parameter_range: str
    points: list[PointResult]
    seed: int | None = None
    wall_time: float = 0.0

    @property
    def checked(self) -> int:
        return sum(p.checked for p in self.points)

    @property
    def failures(self) -> list[tuple[dict, str]]:
        return [(p.params, c) for p in self.points if p.status != "PASS" for c in p.counterexamples]

    @property
    def failed_points(self) -> list[PointResult]:
        return [p for p in self.points if p.status != "PASS"]

    @property
    def status(self) -> str:
        return "FAIL" if self.failed_points else "PASS"

    def to_text(self) -> str:
        """Deterministic summary; wall time is deliberately left out."""
        lines = [
            f"claim: {self.claim} ({self.kind})",
            f"range: {self.parameter_range}",
        ]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines += [
            f"points: {len(self.points)}",
            f"checked: {self.checked}",
            f"failures: {len(self.failures) or len(self.failed_points)}",
        ]
        for p in self.failed_points:
            params = json.dumps(p.params, sort_keys=True)
            if p.counterexamples:
                lines += [f"  FAIL {params}: {c}" for c in p.counterexamples]
            else:
                lines.append(f"  FAIL {params}: expected {p.expected}, observed {p.observed}")
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"

    def to_jsonl(self) -> str:
        return "".join(p.to_json() + "\n" for p in self.points)


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str
    statement: str
    min_n: int
    max_n: int
    points: Callable[[Settings], list[dict]]
    check: Callable[[dict, Settings], tuple]
    cost: Callable[[dict], int] = lambda params: 1
    space: str | None = None
    exhaustive_max: int = 8
    uses_seed: bool = False
    spaces: tuple[str, ...] = ()


CLAIMS: dict[str, Claim] = {}


def _register(claim: Claim) -> Claim:
    CLAIMS[claim.id] = claim
    return claim


def _words_per_tree(n: int) -> int:
    return 3 * 2 ** (n - 1)


def _ser(t: Tree) -> str:
    return serialize(t)


def _ok(flag: bool) -> str:
    return "PASS" if flag else "FAIL"


# -- pair spaces ----------------------------------------------------------------

def _config_trees(n: int) -> tuple[list[Tree], list[Tree]]:
    """Path trees with leaf 1 on level 1, and path trees with leaf n on level 1."""
    from itertools import product

    tails = ["".join(p) for p in product("lr", repeat=n - 3)]
    return [decode_path("r" + x) for x in tails], [decode_path("l" + x) for x in tails]


def _space_trees(space: str, n: int) -> tuple[Tree, ...]:
    if space == "path":
        return all_path_trees(n)
    return all_trees(n)


def _pair_points(space: str, n: int, s: Settings, exhaustive_max: int) -> list[dict]:
    if space == "config":
        first, _ = _config_trees(n)
        return [{"n": n, "space": space, "t1": i} for i in range(len(first))]
    if space == "path" and n < 2:
        return []
    if space == "path" or n <= exhaustive_max:
        count = 2 ** (n - 2) if space == "path" else catalan(n - 1)
        return [{"n": n, "space": space, "t1": i} for i in range(count)]
    shards = (s.samples + SHARD_SIZE - 1) // SHARD_SIZE
    return [
        {"n": n, "space": space, "shard": k, "size": min(SHARD_SIZE, s.samples - k * SHARD_SIZE)}
        for k in range(shards)
    ]


def _pairs(params: dict, s: Settings) -> Iterator[tuple[Tree, Tree]]:
    n, space = params["n"], params["space"]
    if space == "config":
        first, second = _config_trees(n)
        t1 = first[params["t1"]]
        for t2 in second:
            yield t1, t2
        return
    if "t1" in params:
        trees = _space_trees(space, n)
        i = params["t1"]
        for j in range(i, len(trees)):
            yield trees[i], trees[j]
        return
    rng = random.Random(s.seed * 1_000_003 + n * 1009 + params["shard"])
    for _ in range(params["size"]):
        yield random_tree(n, rng), random_tree(n, rng)


def _pair_count(params: dict) -> int:
    n, space = params["n"], params["space"]
    if space == "config":
        return 2 ** (n - 3)
    if "t1" in params:
        total = 2 ** (n - 2) if space == "path" else catalan(n - 1)
        return total - params["t1"]
    return params["size"]


def _pair_cost(params: dict) -> int:
    return _pair_count(params) * _words_per_tree(params["n"])


def _range(s: Settings, claim: Claim) -> range:
    lo = claim.min_n if s.min_n is None else max(s.min_n, claim.min_n)
    hi = claim.max_n if s.max_n is None else s.max_n
    return range(lo, hi + 1)


def _space(s: Settings, claim: Claim) -> str:
    return s.space or claim.space


def _exhaustive_max(s: Settings, claim: Claim) -> int:
    return claim.exhaustive_max if s.exhaustive_max is None else s.exhaustive_max


def _pair_space_points(claim_id: str):
    def points(s: Settings) -> list[dict]:
        claim = CLAIMS[claim_id]
        space = _space(s, claim)
        out = []
        for n in _range(s, claim):
            out += _pair_points(space, n, s, _exhaustive_max(s, claim))
        return out

    return points


def _per_n_points(claim_id: str):
    def points(s: Settings) -> list[dict]:
        return [{"n": n} for n in _range(s, CLAIMS[claim_id])]

    return points


def _pair_result(params: dict, s: Settings, test) -> tuple:
    """Run ``test(t1, t2)`` over a pair shard; it returns a failure string or None."""
    checked = 0
    bad = []
    for t1, t2 in _pairs(params, s):
        checked += 1
        msg = test(t1, t2)
        if msg:
            bad.append(f"t1={_ser(t1)} t2={_ser(t2)}: {msg}")
    return checked, checked - len(bad), not bad, checked, tuple(bad)


# -- family theorems --------------------------------------------------------------

def _family_check(expected_fn, pair_fn):
    def check(params: dict, s: Settings) -> tuple:
        expected = list(expected_fn(**params).classes)
        t1, t2 = pair_fn(**params)
        observed = list(parse_words(t1, t2).classes)
        return expected, observed, expected == observed, 1, ()

    return check


_register(Claim(
    "comb-comb", "theorem",
    "ParseWords(LeftComb(n), RightComb(n)) is the single class 01^(n-2)2 (n even) or 01^(n-2)0 (n odd)",
    2, 12, _per_n_points("comb-comb"),
    _family_check(lambda n: cf.comb_comb_words(n), lambda n: (left_comb(n), right_comb(n))),
    lambda p: _words_per_tree(p["n"]),
))


def _turn_turn_points(s: Settings) -> list[dict]:
    claim = CLAIMS["turn-turn"]
    r = _range(s, claim)
    return [
        {"m": m, "n": n}
        for total in r
        for m in range(1, total - 2)
        for n in [total - m]
        if n >= 3
    ]


_register(Claim(
    "turn-turn", "theorem",
    "ParseWords(LeftTurn(m, n), RightTurn(1, m+n-1)) is the two-class set given by the parity of n",
    4, 12, _turn_turn_points,
    _family_check(lambda m, n: cf.turn_turn_words(m, n),
                  lambda m, n: (left_turn(m, n), right_turn(1, m + n - 1))),
    lambda p: _words_per_tree(p["m"] + p["n"]),
))

_register(Claim(
    "comb-crooked", "theorem",
    "ParseWords(LeftComb(n), RightCrooked(n)) is the single class built from reversed and truncated powers of 012",
    2, 12, _per_n_points("comb-crooked"),
    _family_check(lambda n: cf.comb_crooked_words(n), lambda n: (left_comb(n), right_crooked(n))),
    lambda p: _words_per_tree(p["n"]),
))

_register(Claim(
    "comb-crooked2", "theorem",
    "ParseWords(LeftComb(n), LeftCrooked(n)) is the two-class set built from truncated powers of 012",
    3, 12, _per_n_points("comb-crooked2"),
    _family_check(lambda n: cf.comb_crooked2_words(n), lambda n: (left_comb(n), left_crooked(n))),
    lambda p: _words_per_tree(p["n"]),
))


def _crooked_check(params: dict, s: Settings) -> tuple:
    from itertools import product

    n = params["n"]
    t1, t2 = left_crooked(n), right_crooked(n)
    found = parse_words(t1, t2)
    expected = cf.crooked_crooked_count(n)
    bad = []
    if n <= 12:
        words = {c.translate(p) for c in found.classes for p in PERMUTATIONS}
        for letters in product("012", repeat=n):
            w = "".join(letters)
            if cf.crooked_crooked_membership(w) != (w in words):
                bad.append(f"membership wrong for {w}")
    ok = len(found) == expected and not bad
    return expected, len(found), ok, 1, tuple(bad)


_register(Claim(
    "crooked-crooked", "theorem",
    "|ParseWords(LeftCrooked(n), RightCrooked(n))| = 2^(floor(n/2)-1), with the mirrored-letter characterization of the words",
    2, 14, _per_n_points("crooked-crooked"), _crooked_check,
    lambda p: _words_per_tree(p["n"]) + (3 ** p["n"] if p["n"] <= 12 else 0),
))


# -- general families ----------------------------------------------------------------

def _shared_bottom_test(t1: Tree, t2: Tree) -> str | None:
    (j1,), (j2,) = bottom_leaf_pairs(t1), bottom_leaf_pairs(t2)
    shares = bool({j1, j1 + 1} & {j2, j2 + 1})
    try:
        w = shared_bottom_witness(t1, t2)
    except AssertionError as exc:
        return str(exc)
    if shares != (w is not None):
        return f"witness {w} but shared={shares}"
    if w is not None:
        n = len(w)
        if not (w.count("1") == 1 and 2 <= w.index("1") + 1 <= n - 1 and set(w) <= {"0", "1"}):
            return f"witness {w} has the wrong shape"
        if not (parses(t1, w) and parses(t2, w)):
            return f"witness {w} is not a common parse word"
    return None


_register(Claim(
    "shared-bottom", "theorem",
    "two path trees sharing a bottom leaf both parse 0^(k-1) 1 0^(n-k) for some 2 <= k <= n-1",
    3, 12, _pair_space_points("shared-bottom"),
    lambda p, s: _pair_result(p, s, _shared_bottom_test),
    _pair_cost, space="path", spaces=("path",),
))


def _extension_points(claim_id: str):
    # n is the size of the pair before extension
    return _pair_space_points(claim_id)


def _bottom_bottom_test(t1: Tree, t2: Tree) -> str | None:
    base = count_parse_words(t1, t2)
    for i in range(1, t1.n_leaves + 1):
        got = count_parse_words(attach_cherry(t1, i), attach_cherry(t2, i))
        if got != 2 * base:
            return f"site {i}: expected {2 * base}, got {got}"
    return None


def _bottom_comb_test(t1: Tree, t2: Tree) -> str | None:
    base = count_parse_words(t1, t2)
    for a, b in ((t1, t2), (t2, t1)):
        for i in range(1, a.n_leaves + 1):
            got = count_parse_words(attach_cherry(a, i), duplicate_leaf(b, i))
            if got != base:
                return f"site {i}: expected {base}, got {got}"
    return None


def _extension_cost(params: dict) -> int:
    n = params["n"]
    return _pair_count(params) * n * 2 * _words_per_tree(n + 1)


_register(Claim(
    "bottom-bottom", "theorem",
    "attaching a cherry at the same leaf of both trees of an n-leaf pair doubles the class count",
    2, 10, _extension_points("bottom-bottom"),
    lambda p, s: _pair_result(p, s, _bottom_bottom_test),
    _extension_cost, space="binary", exhaustive_max=6, uses_seed=True, spaces=("binary", "path"),
))

_register(Claim(
    "bottom-comb", "theorem",
    "attaching a cherry at leaf i of one tree and duplicating leaf i of the other keeps the class count",
    2, 10, _extension_points("bottom-comb"),
    lambda p, s: _pair_result(p, s, _bottom_comb_test),
    _extension_cost, space="binary", exhaustive_max=6, uses_seed=True, spaces=("binary", "path"),
))


def _comb_general_check(params: dict, s: Settings) -> tuple:
    n = params["n"]
    lc, rc = left_comb(n), right_comb(n)
    bad = []
    trees = all_trees(n)
    for t in trees:
        want = cf.comb_general_count(t)
        got = count_parse_words(t, lc)
        if got != want:
            bad.append(f"t={_ser(t)}: left comb expected {want}, got {got}")
        want_r = 2 ** (leaf_level(t, n) - 1)
        got_r = count_parse_words(t, rc)
        if got_r != want_r:
            bad.append(f"t={_ser(t)}: right comb expected {want_r}, got {got_r}")
    return len(trees), len(trees) - len(bad), not bad, len(trees), tuple(bad)


_register(Claim(
    "comb-general", "theorem",
    "|ParseWords(T, LeftComb(n))| = 2^(l-1) with l the level of leaf 1 (mirrored for the right comb)",
    2, 9, _per_n_points("comb-general"), _comb_general_check,
    lambda p: 2 * catalan(p["n"] - 1) * _words_per_tree(p["n"]),
))


def _turn_general_check(params: dict, s: Settings) -> tuple:
    n = params["n"]
    turns = [left_turn(m, n - m) for m in range(1, n - 1)]
    bad = []
    trees = all_trees(n)
    for t in trees:
        for m, lt in enumerate(turns, start=1):
            if count_parse_words(t, lt) == 0:
                bad.append(f"t={_ser(t)} LeftTurn({m}, {n - m}): no common word")
    checked = len(trees) * len(turns)
    return checked, checked - len(bad), not bad, checked, tuple(bad)


_register(Claim(
    "turn-general", "theorem",
    "every n-leaf tree shares a parse word with every n-leaf left turn tree (n >= 4)",
    4, 9, _per_n_points("turn-general"), _turn_general_check,
    lambda p: catalan(p["n"] - 1) * p["n"] * _words_per_tree(p["n"]),
))


# -- turn pairs -----------------------------------------------------------------------

def _turn_triples(s: Settings, claim_id: str, region) -> list[dict]:
    out = []
    for total in _range(s, CLAIMS[claim_id]):
        for m in range(1, total - 1):
            n = total - m
            for k in range(1, total - 1):
                if region(m, n, k):
                    out.append({"m": m, "n": n, "k": k})
    return out


def _turn_count_check(params: dict, s: Settings) -> tuple:
    m, n, k = params["m"], params["n"], params["k"]
    expected = cf.turn_pair_count(m, n, k)
    observed = count_parse_words(left_turn(m, n), right_turn(k, m + n - k))
    return expected, observed, expected == observed, 1, ()


def _in_unique_region(m: int, n: int, k: int) -> bool:
    return max(2, k - m + 2) <= n <= k


_register(Claim(
    "unique-turn", "theorem",
    "LeftTurn(m, n) and RightTurn(k, m+n-k) share exactly one class when max(2, k-m+2) <= n <= k",
    3, 13, lambda s: _turn_triples(s, "unique-turn", _in_unique_region),
    _turn_count_check, lambda p: _words_per_tree(p["m"] + p["n"]),
))

_register(Claim(
    "turn-count", "theorem",
    "|ParseWords(LeftTurn(m, n), RightTurn(k, m+n-k))| is 1, a(m, k) or 2 a(m, k) by region",
    3, 13, lambda s: _turn_triples(s, "turn-count", lambda m, n, k: m + n - k >= 2),
    _turn_count_check, lambda p: _words_per_tree(p["m"] + p["n"]),
))

_INITIAL = {(1, 1): 1, (1, 2): 1, (1, 3): 1, (2, 2): 4, (2, 3): 5, (3, 3): 3}


def _recurrence_points(s: Settings) -> list[dict]:
    hi = CLAIMS["recurrence"].max_n if s.max_n is None else s.max_n
    return [{"m": m, "k": k, "brute": m + k + 1 <= hi} for m in range(1, 13) for k in range(1, 13)]


def _recurrence_check(params: dict, s: Settings) -> tuple:
    m, k = params["m"], params["k"]
    a = cf.a_of
    problems = []
    if (m, k) in _INITIAL and a(m, k) != _INITIAL[m, k]:
        problems.append(f"initial value a({m},{k}) = {a(m, k)}, expected {_INITIAL[m, k]}")
    if a(m + 3, k) - 2 * a(m + 2, k) - a(m + 1, k) + 2 * a(m, k) != 0:
        problems.append(f"recurrence fails at ({m},{k})")
    if a(m, k) != a(k, m):
        problems.append(f"a({m},{k}) != a({k},{m})")
    if m == 1 and a(1, k) != 1:
        problems.append(f"a(1,{k}) = {a(1, k)}")
    observed = None
    if params["brute"]:
        observed = count_parse_words(left_turn(m, k + 1), right_turn(k, m + 1))
        if observed != a(m, k):
            problems.append(f"brute force gives {observed}, formula {a(m, k)}")
    return a(m, k), observed if observed is not None else a(m, k), not problems, 1, tuple(problems)


_register(Claim(
    "recurrence", "theorem",
    "a(m, k) from the matrix product meets its initial values, the recurrence "
    "a(m+3,k) - 2a(m+2,k) - a(m+1,k) + 2a(m,k) = 0, symmetry, and brute force",
    1, 13, _recurrence_points, _recurrence_check,
    lambda p: _words_per_tree(p["m"] + p["k"] + 1) if p["brute"] else 1,
))


def _alternating_check(params: dict, s: Settings) -> tuple:
    m = params["n"]
    expected = list(cf.alternating_counts(m))
    observed = list(cf.alternating_counts_by_enumeration(m))
    return expected, observed, expected == observed, 1, ()


_register(Claim(
    "alternating", "theorem",
    "|A_m| = (2^m + 2(-1)^m)/3 and |B_m| = (2^m - (-1)^m)/3 (m is passed as n)",
    2, 16, _per_n_points("alternating"), _alternating_check,
    lambda p: 2 ** p["n"],
))


# -- reductions ---------------------------------------------------------------------

def _triplication_test(t1: Tree, t2: Tree) -> str | None:
    words = [w.translate(p) for w in common_class_words(t1, t2) for p in PERMUTATIONS]
    for i in range(1, t1.n_leaves + 1):
        u1, u2 = triplicate_leaf(t1, i), triplicate_leaf(t2, i)
        for w in words:
            lifted = triplication_word_lift(w, i)
            if not (parses(u1, lifted) and parses(u2, lifted)):
                return f"site {i}: {w} lifts to {lifted}, not a common word"
    return None


_register(Claim(
    "triplication", "theorem",
    "every common word of an n-leaf pair, with letter i tripled, is a common word of the pair triplicated at leaf i",
    2, 8, _extension_points("triplication"),
    lambda p, s: _pair_result(p, s, _triplication_test),
    lambda p: _pair_count(p) * p["n"] * _words_per_tree(p["n"]) * 2,
    space="binary", exhaustive_max=6, uses_seed=True, spaces=("binary", "path"),
))


def _config_classes(t1: Tree, t2: Tree, reading: str):
    return [(w, class_predicates(w, reading)) for w in common_class_words(t1, t2)]


def _01v1_test_factory(reading: str):
    def test(t1: Tree, t2: Tree) -> str | None:
        n = t1.n_leaves
        for w, f in _config_classes(t1, t2, reading):
            if f.is_01v1:
                return f"parse word {w} has the form 01v1"
            if f.is_01v2 and not (leaf_level(t1, 2) == 2 and leaf_level(t2, n - 1) == 2):
                return f"parse word {w} has the form 01v2 but leaf levels are off"
        return None

    return test


_register(Claim(
    "01v1", "theorem",
    "path trees with leaf 1 on level 1 of T1 and leaf n on level 1 of T2 have no common word 01v1; "
    "a 01v2 word forces leaf 2 of T1 and leaf n-1 of T2 onto level 2",
    3, 10, _pair_space_points("01v1"),
    lambda p, s: _pair_result(p, s, _01v1_test_factory(s.reading)),
    _pair_cost, space="config", spaces=("config",),
))


def _vector_test(t1: Tree, t2: Tree) -> str | None:
    n = t1.n_leaves
    tuples = nonzero_tuples(t1) & nonzero_tuples(t2)
    raw = parse_words(t1, t2).raw_count
    if len(tuples) != raw or count_nonzero_tuples(t1, t2) != raw:
        return f"{len(tuples)} nonzero tuples but {raw} common words"
    for vs in tuples:
        w = "".join(str(tau(v)) for v in vs)
        if not (parses(t1, w) and parses(t2, w)):
            return f"tau image {w} is not a common word"
    if n >= 2 and raw != 6 * len(parse_words(t1, t2).classes):
        return "raw count is not six times the class count"
    return None


_register(Claim(
    "vector-bijection", "theorem",
    "tuples in {i,j,k}^n that both bracketings keep nonzero correspond, via tau, to common parse words",
    1, 6, _pair_space_points("vector-bijection"),
    lambda p, s: _pair_result(p, s, _vector_test),
    lambda p: _pair_count(p) * 3 ** p["n"] * 2, space="binary", spaces=("binary", "path"),
))


def _root_parity_check(params: dict, s: Settings) -> tuple:
    n = params["n"]
    bad = []
    checked = 0
    for t in all_trees(n):
        for w in iter_words(t):
            checked += 1
            lab = parse(t, w)
            if lab is None or lab.root != root_letter_by_parity(w):
                bad.append(f"t={_ser(t)} w={w}")
    return checked, checked - len(bad), not bad, checked, tuple(bad)


_register(Claim(
    "root-parity", "theorem",
    "the root label of any parse equals the letter whose count has the parity of n (the others differ)",
    1, 8, _per_n_points("root-parity"), _root_parity_check,
    lambda p: catalan(p["n"] - 1) * _words_per_tree(p["n"]) * p["n"],
))


def _ambiguity_test(t1: Tree, t2: Tree) -> str | None:
    if class_keys(t1).isdisjoint(class_keys(t2)):
        return "no common parse word"
    w = splice_solve(t1, t2)
    if w is None:
        return "splice_solve found no word"
    if not (parses(t1, w) and parses(t2, w)):
        return f"splice_solve word {w} does not parse"
    return None


_register(Claim(
    "total-ambiguity", "theorem",
    "every pair of n-leaf trees shares a parse word, and the reduction solver finds one",
    1, 12, _pair_space_points("total-ambiguity"),
    lambda p, s: _pair_result(p, s, _ambiguity_test),
    _pair_cost, space="path", uses_seed=True, spaces=("path", "binary"),
))


# -- conjectures -----------------------------------------------------------------------

def _duplication_test(t1: Tree, t2: Tree) -> str | None:
    for i in range(1, t1.n_leaves + 1):
        d1, d2 = duplicate_leaf(t1, i), duplicate_leaf(t2, i)
        words = common_class_words(d1, d2)
        if not any(w[i - 1] == w[i] for w in words):
            return f"site {i}: no common word with equal letters {i}, {i + 1} ({len(words)} classes)"
    return None


_register(Claim(
    "duplication", "conjecture",
    "duplicating leaf i in both trees of an n-leaf pair leaves a common word with w_i = w_(i+1)",
    2, 7, _extension_points("duplication"),
    lambda p, s: _pair_result(p, s, _duplication_test),
    lambda p: _pair_count(p) * p["n"] * 2 * _words_per_tree(p["n"] + 1),
    space="binary", exhaustive_max=8, uses_seed=True, spaces=("binary", "path"),
))


def _level_ok(tup: tuple[int, int], kmax: int | None) -> bool:
    if tup == (2, 3):
        return True
    k, second = tup
    return second == 2 and k >= 2 and (kmax is None or k <= kmax)


def _level_tuple_test_factory(variant: str, reading: str):
    def test(t1: Tree, t2: Tree) -> str | None:
        n = t1.n_leaves
        classes = _config_classes(t1, t2, reading)
        no_00v = not any(f.has_00v for _, f in classes)
        no_v00 = not any(f.has_v00 for _, f in classes)
        tup = (leaf_level(t1, 2), leaf_level(t2, n - 1))
        if variant == "unique":
            if no_00v and no_v00 and len(classes) != 1:
                return f"no 00v/v00 word but {len(classes)} classes"
            return None
        report = crookedness(t1, t2)
        if variant == "01v00":
            if no_00v and report.mutually_crooked and not any(f.is_01v00 for _, f in classes):
                return "mutually crooked, no 00v word, and no 01v00 word"
            return None
        if not no_00v:
            return None
        if variant == "levels" and not _level_ok(tup, None):
            return f"no 00v word but level tuple {tup}"
        if variant == "levels-weak" and report.weakly_mutually_crooked and not _level_ok(tup, 4):
            return f"weakly mutually crooked, no 00v word, level tuple {tup}"
        if variant == "levels-mutual" and report.mutually_crooked and not _level_ok(tup, 3):
            return f"mutually crooked, no 00v word, level tuple {tup}"
        return None

    return test


_LEVEL_VARIANTS = {
    "unique": "no common word 00v or v00 implies exactly one class",
    "01v00": "no common word 00v and mutually crooked implies a common word 01v00",
    "levels": "no common word 00v implies (level of leaf 2 in T1, level of leaf n-1 in T2) is (2,3) or (k,2)",
    "levels-weak": "as levels, for weakly mutually crooked pairs with 2 <= k <= 4",
    "levels-mutual": "as levels, for mutually crooked pairs with 2 <= k <= 3",
}

for _variant, _text in _LEVEL_VARIANTS.items():
    _cid = f"level-tuple-{_variant}"
    _register(Claim(
        _cid, "conjecture",
        "path trees with leaf 1 on level 1 of T1 and leaf n on level 1 of T2: " + _text,
        4, 10, _pair_space_points(_cid),
        (lambda v: lambda p, s: _pair_result(p, s, _level_tuple_test_factory(v, s.reading)))(_variant),
        _pair_cost, space="config", spaces=("config",),
    ))

LEVEL_TUPLE_GROUP = tuple(f"level-tuple-{v}" for v in _LEVEL_VARIANTS)


def _u00v_test_factory(reading: str):
    def test(t1: Tree, t2: Tree) -> str | None:
        words = common_class_words(t1, t2)
        if not any(class_predicates(w, reading).has_u00v for w in words):
            return f"no common word with two equal neighbours ({len(words)} classes)"
        return None

    return test


_register(Claim(
    "u00v", "conjecture",
    "every pair of n-leaf path trees (n >= 4) shares a word with two equal adjacent letters",
    4, 10, _pair_space_points("u00v"),
    lambda p, s: _pair_result(p, s, _u00v_test_factory(s.reading)),
    _pair_cost, space="path", spaces=("path",),
))


# -- running ----------------------------------------------------------------------------

def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _run_point(args: tuple[str, dict, Settings]) -> PointResult:
    claim_id, params, settings = args
    claim = CLAIMS[claim_id]
    expected, observed, ok, checked, bad = claim.check(params, settings)
    return PointResult(claim_id, params, expected, observed, _ok(ok), checked, tuple(bad))


def _resolve(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r} (see verify --list)") from None


def _points(claim: Claim, settings: Settings) -> list[dict]:
    space = _space(settings, claim)
    if claim.spaces and space not in claim.spaces:
        raise BadParams(f"claim {claim.id} is not stated for the {space} tree space")
    return claim.points(settings)


def estimate_cost(claim_id: str, settings: Settings = Settings()) -> int:
    claim = _resolve(claim_id)
    return sum(claim.cost(p) for p in _points(claim, settings))


def _describe_range(claim: Claim, settings: Settings) -> str:
    r = _range(settings, claim)
    text = f"n={r.start}..{r.stop - 1}"
    space = _space(settings, claim)
    if space:
        text += f" space={space}"
        if space == "binary":
            text += f" exhaustive<={_exhaustive_max(settings, claim)} samples={settings.samples}"
    if settings.reading != "invariant":
        text += f" reading={settings.reading}"
    return text


def verify(claim_id: str, settings: Settings | None = None, workers: int | None = None,
           **overrides) -> VerificationReport:
    """Run one claim over its parameter range.

    ``overrides`` are :class:`Settings` fields.  Raises :class:`RangeTooLarge`
    before doing any work when the estimated number of word checks exceeds
    ``settings.budget`` (unless ``force``).
    """
    if claim_id == "level-tuple":
        reports = [verify(c, settings, workers, **overrides) for c in LEVEL_TUPLE_GROUP]
        merged = VerificationReport(
            "level-tuple", "conjecture",
            reports[0].parameter_range,
            [p for r in reports for p in r.points],
            wall_time=sum(r.wall_time for r in reports),
        )
        return merged
    claim = _resolve(claim_id)
    settings = replace(settings or Settings(), **overrides)
    points = _points(claim, settings)
    cost = sum(claim.cost(p) for p in points)
    if cost > settings.budget and not settings.force:
        raise RangeTooLarge(
            f"{claim_id}: about {cost:.3g} word checks exceeds the budget {settings.budget:.3g}"
        )
    workers = worker_count() if workers is None else workers
    start = time.perf_counter()
    jobs = [(claim_id, p, settings) for p in points]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_point, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        results = [_run_point(j) for j in jobs]
    space = _space(settings, claim)
    uses_random = claim.uses_seed and space == "binary" and any("shard" in p for p in points)
    return VerificationReport(
        claim_id, claim.kind, _describe_range(claim, settings), results,
        seed=settings.seed if uses_random else None,
        wall_time=time.perf_counter() - start,
    )


def verify_theorem(claim_id: str, **kwargs) -> VerificationReport:
    if claim_id in CLAIMS and CLAIMS[claim_id].kind != "theorem":
        raise UnknownClaim(f"{claim_id} is a conjecture")
    return verify(claim_id, **kwargs)


def verify_conjecture(claim_id: str, **kwargs) -> VerificationReport:
    if claim_id != "level-tuple" and (claim_id not in CLAIMS or CLAIMS[claim_id].kind != "conjecture"):
        raise UnknownClaim(f"{claim_id} is not a registered conjecture")
    return verify(claim_id, **kwargs)


def claim_table() -> str:
    rows = [f"{c.id:<22} {c.kind:<10} {c.statement}" for c in CLAIMS.values()]
    rows.append(f"{'level-tuple':<22} {'conjecture':<10} runs all level-tuple-* claims")
    return "\n".join(rows) + "\n"
