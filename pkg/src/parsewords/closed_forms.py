"""Closed-form parse-word sets and counts for the parameterized tree families."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .enumeration import ParseWordSet
from .errors import BadParams
from .trees import Tree, leaf_level

__all__ = [
    "mod3",
    "truncated_power",
    "comb_comb_words",
    "turn_turn_words",
    "comb_crooked_words",
    "comb_crooked2_words",
    "crooked_crooked_count",
    "crooked_crooked_membership",
    "comb_general_count",
    "turn_pair_count",
    "a_of",
    "alternating_counts",
    "alternating_words",
    "alternating_counts_by_enumeration",
]


def mod3(x: int) -> str:
    """Least nonnegative residue of ``x`` mod 3, as a letter."""
    return str(x % 3)


def truncated_power(w: str, x: Fraction | int) -> str:
    """``w`` repeated ``x`` times, where a fractional ``x`` truncates the last copy.

    ``len(w) * x`` must be a whole number.
    """
    x = Fraction(x)
    length = len(w) * x
    if length.denominator != 1 or x < 0:
        raise BadParams(f"({w})^{x} is not a whole number of letters")
    length = int(length)
    if not w:
        return ""
    return (w * (length // len(w) + 1))[:length]


def _result(words: list[str], raw: bool) -> ParseWordSet | tuple[str, ...]:
    if raw:
        return tuple(words)
    return ParseWordSet.from_words(words)


def comb_comb_words(n: int, raw: bool = False):
    """Left comb against right comb: ``01^(n-2)2`` (n even) or ``01^(n-2)0`` (n odd)."""
    if n < 2:
        raise BadParams("n >= 2")
    last = "2" if n % 2 == 0 else "0"
    return _result(["0" + "1" * (n - 2) + last], raw)


def turn_turn_words(m: int, n: int, raw: bool = False):
    """LeftTurn(m, n) against RightTurn(1, m + n - 1)."""
    if m < 1 or n < 3:
        raise BadParams("m >= 1 and n >= 3")
    ones = "1" * (n - 3)
    tail = "0" * m
    if n % 2:
        words = ["00" + ones + "2" + tail, "02" + ones + "0" + tail]
    else:
        words = ["02" + ones + "2" + tail, "00" + ones + "0" + tail]
    return _result(words, raw)


def _rev(w: str) -> str:
    return w[::-1]


def comb_crooked_words(n: int, raw: bool = False):
    """LeftComb(n) against RightCrooked(n)."""
    if n < 2:
        raise BadParams("n >= 2")
    if n % 2 == 0:
        w = mod3(1 - n) + _rev(truncated_power("012", Fraction(n, 6))) + truncated_power(
            "012", Fraction(n - 2, 6)
        )
    else:
        w = mod3(1 - n) + _rev(truncated_power("012", Fraction(n - 3, 6))) + truncated_power(
            "012", Fraction(n + 1, 6)
        )
    return _result([w], raw)


def comb_crooked2_words(n: int, raw: bool = False):
    """LeftComb(n) against LeftCrooked(n)."""
    if n < 3:
        raise BadParams("n >= 3")
    if n % 2:
        core = _rev(truncated_power("012", Fraction(n - 1, 6))) + truncated_power(
            "012", Fraction(n - 3, 6)
        )
    else:
        core = _rev(truncated_power("012", Fraction(n - 4, 6))) + truncated_power(
            "012", Fraction(n, 6)
        )
    head = mod3(2 - n)
    return _result([head + core + mod3(2 - n), head + core + mod3(-n)], raw)


def crooked_crooked_count(n: int) -> int:
    if n < 2:
        raise BadParams("n >= 2")
    return 2 ** (n // 2 - 1)


def crooked_crooked_membership(w: str) -> bool:
    """Whether LeftCrooked(n) and RightCrooked(n) both parse ``w``.

    Odd n: mirrored letters agree and differ from the centre letter.
    Even n: the two middle letters differ, and the other mirrored letters
    agree and avoid the third letter ``b`` that the middle pair leaves out.
    """
    n = len(w)
    if n < 2:
        return False
    half = n // 2
    if n % 2:
        centre = w[half]
        return all(w[i] == w[n - 1 - i] != centre for i in range(half))
    a, c = w[half - 1], w[half]
    if a == c:
        return False
    (b,) = set("012") - {a, c}
    return all(w[i] == w[n - 1 - i] != b for i in range(half - 1))


def comb_general_count(t: Tree) -> int:
    """Classes shared by ``t`` and the left comb of the same size."""
    if t.n_leaves < 2:
        raise BadParams("n >= 2")
    return 2 ** (leaf_level(t, 1) - 1)


def turn_pair_count(m: int, n: int, k: int) -> int:
    """Classes shared by LeftTurn(m, n) and RightTurn(k, m + n - k)."""
    if m < 1 or k < 1 or n < 2 or m + n - k < 2:
        raise BadParams(f"LeftTurn({m}, {n}) / RightTurn({k}, {m + n - k}) is not a valid pair")
    if n <= k:
        return 1
    if n == k + 1:
        return a_of(m, k)
    return 2 * a_of(m, k)


_MIDDLE = (
    (Fraction(1, 2), Fraction(1), Fraction(1)),
    (Fraction(1), Fraction(1), Fraction(-1)),
    (Fraction(1), Fraction(-1), Fraction(1, 5)),
)


def _basis(m: int) -> tuple[Fraction, Fraction, Fraction]:
    return Fraction(2, 3) * 2**m, Fraction(1), Fraction(5, 3) * (-1) ** m


@lru_cache(maxsize=None)
def a_of(m: int, k: int) -> int:
    """Classes shared by LeftTurn(m, k + 1) and RightTurn(k, m + 1), via the
    closed-form bilinear expression in ``2^m, 1, (-1)^m`` and ``2^k, 1, (-1)^k``."""
    if m < 1 or k < 1:
        raise BadParams("m, k >= 1")
    u = _basis(m)
    v = _basis(k)
    mv = [sum(row[j] * v[j] for j in range(3)) for row in _MIDDLE]
    value = sum(u[i] * mv[i] for i in range(3)) / 4
    assert value.denominator == 1, f"a({m}, {k}) = {value} is not an integer"
    return int(value)


def alternating_counts(m: int) -> tuple[int, int]:
    """Sizes of the alternating-word sets ``A_m`` and ``B_m``.

    Both hold length-``m`` words starting ``0`` with second letter in
    {1, 2}; ``A_m`` ends in {1, 2} and ``B_m`` ends in {0, 2}.
    """
    if m < 2:
        raise BadParams("m >= 2")
    sign = (-1) ** m
    return (2**m + 2 * sign) // 3, (2**m - sign) // 3


def alternating_words(m: int, first: str = "0") -> list[str]:
    """All length-``m`` words with no two equal neighbours, starting with ``first``."""
    out = [first]
    for _ in range(m - 1):
        out = [w + c for w in out for c in "012" if c != w[-1]]
    return out


def alternating_counts_by_enumeration(m: int) -> tuple[int, int]:
    words = [w for w in alternating_words(m) if w[1] in "12"]
    return (
        sum(1 for w in words if w[-1] in "12"),
        sum(1 for w in words if w[-1] in "02"),
    )
