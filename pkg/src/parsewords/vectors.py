"""Cross products of signed unit vectors, the quaternion group and the Klein group.

This module deliberately does not import the grammar: counting the tuples in
{i, j, k}^n that survive two bracketings is an independent check on the
parse-word counts.
"""

from __future__ import annotations

import enum
from functools import lru_cache, reduce
from itertools import product

from .errors import LengthMismatch, ZeroInput
from .trees import Tree

__all__ = [
    "SignedVector",
    "Quaternion",
    "Klein",
    "CROSS",
    "QMUL",
    "KLEIN_MUL",
    "cross",
    "qmul",
    "phi",
    "phi_inv",
    "sigma",
    "tau",
    "evaluate_bracketing",
    "quaternion_product",
    "nonzero_tuples",
    "count_nonzero_tuples",
]


class SignedVector(enum.IntEnum):
    ZERO = 0
    I = 1
    J = 2
    K = 3
    NEG_I = -1
    NEG_J = -2
    NEG_K = -3

    def __neg__(self) -> SignedVector:
        return SignedVector(-int(self))

    def __str__(self) -> str:
        if self is SignedVector.ZERO:
            return "0"
        return ("-" if self < 0 else "+") + "ijk"[abs(self) - 1]


class Quaternion(enum.IntEnum):
    ONE = 1
    I = 2
    J = 3
    K = 4
    NEG_ONE = -1
    NEG_I = -2
    NEG_J = -3
    NEG_K = -4

    def __neg__(self) -> Quaternion:
        return Quaternion(-int(self))

    def __str__(self) -> str:
        return ("-" if self < 0 else "") + "1ijk"[abs(self) - 1]


class Klein(str, enum.Enum):
    E = "e"
    ZERO = "0"
    ONE = "1"
    TWO = "2"


V = SignedVector
Q = Quaternion

# i x j = k and its cyclic shifts, each with the three sign variants that give
# the same result.
_CROSS_GENERATORS = [
    (V.I, V.J, V.K), (V.NEG_I, V.NEG_J, V.K), (V.NEG_J, V.I, V.K), (V.J, V.NEG_I, V.K),
    (V.J, V.K, V.I), (V.NEG_J, V.NEG_K, V.I), (V.NEG_K, V.J, V.I), (V.K, V.NEG_J, V.I),
    (V.K, V.I, V.J), (V.NEG_K, V.NEG_I, V.J), (V.NEG_I, V.K, V.J), (V.I, V.NEG_K, V.J),
]

_QMUL_GENERATORS = [
    (Q.I, Q.J, Q.K), (Q.NEG_I, Q.NEG_J, Q.K), (Q.NEG_J, Q.I, Q.K), (Q.J, Q.NEG_I, Q.K),
    (Q.J, Q.K, Q.I), (Q.NEG_J, Q.NEG_K, Q.I), (Q.NEG_K, Q.J, Q.I), (Q.K, Q.NEG_J, Q.I),
    (Q.K, Q.I, Q.J), (Q.NEG_K, Q.NEG_I, Q.J), (Q.NEG_I, Q.K, Q.J), (Q.I, Q.NEG_K, Q.J),
]


def _build_cross() -> dict[tuple[V, V], V]:
    table: dict[tuple[V, V], V] = {}

    def put(a, b, c):
        if table.setdefault((a, b), c) != c:
            raise AssertionError(f"inconsistent cross table at {a} x {b}")

    for a, b, c in _CROSS_GENERATORS:
        for sa, sb in product((1, -1), repeat=2):
            put(V(sa * a), V(sb * b), V(sa * sb * c))
    for a in V:
        put(a, V.ZERO, V.ZERO)
        put(V.ZERO, a, V.ZERO)
        if a is not V.ZERO:
            put(a, a, V.ZERO)
            put(a, -a, V.ZERO)
    if len(table) != 49:
        raise AssertionError("cross table incomplete")
    return table


def _build_qmul() -> dict[tuple[Q, Q], Q]:
    table: dict[tuple[Q, Q], Q] = {}

    def put(a, b, c):
        if table.setdefault((a, b), c) != c:
            raise AssertionError(f"inconsistent quaternion table at {a} * {b}")

    for a, b, c in _QMUL_GENERATORS:
        for sa, sb in product((1, -1), repeat=2):
            put(Q(sa * a), Q(sb * b), Q(sa * sb * c))
    for q in Q:
        for s in (1, -1):
            put(Q(s * Q.ONE), q, Q(s * q))
            put(q, Q(s * Q.ONE), Q(s * q))
        if abs(q) != 1:
            put(q, q, Q.NEG_ONE)
            put(q, -q, Q.ONE)
    if len(table) != 64:
        raise AssertionError("quaternion table incomplete")
    return table


def _build_klein() -> dict[tuple[Klein, Klein], Klein]:
    table = {}
    for a in Klein:
        for b in Klein:
            if a is Klein.E:
                table[a, b] = b
            elif b is Klein.E:
                table[a, b] = a
            elif a is b:
                table[a, b] = Klein.E
            else:
                (c,) = set(Klein) - {Klein.E, a, b}
                table[a, b] = c
    return table


CROSS = _build_cross()
QMUL = _build_qmul()
KLEIN_MUL = _build_klein()


def cross(a: V, b: V) -> V:
    return CROSS[a, b]


def qmul(a: Q, b: Q) -> Q:
    return QMUL[a, b]


def phi(v: V) -> Q:
    """Signed unit vector to the matching pure quaternion unit."""
    if v is V.ZERO:
        raise ZeroInput("phi is undefined at the zero vector")
    return Q((1 if v > 0 else -1) * (abs(v) + 1))


def phi_inv(q: Q) -> V:
    if abs(q) == 1:
        raise ValueError(f"{q} has no vector preimage")
    return V((1 if q > 0 else -1) * (abs(q) - 1))


def sigma(q: Q) -> Klein:
    """Quotient map onto Q / {1, -1}."""
    return (Klein.E, Klein.ZERO, Klein.ONE, Klein.TWO)[abs(q) - 1]


def tau(v: V) -> int:
    """Drop the hat and the sign: +-i -> 0, +-j -> 1, +-k -> 2."""
    if v is V.ZERO:
        raise ZeroInput("tau is undefined at the zero vector")
    return int(sigma(phi(v)).value)


def evaluate_bracketing(t: Tree, vs) -> V:
    """Fold the cross product along the shape of ``t``."""
    vs = tuple(vs)
    if len(vs) != t.n_leaves:
        raise LengthMismatch(f"{len(vs)} vectors for a {t.n_leaves}-leaf tree")
    it = iter(vs)

    def go(sub: Tree) -> V:
        if sub.is_leaf:
            return next(it)
        left = go(sub.left)
        right = go(sub.right)
        return CROSS[left, right]

    return go(t)


def quaternion_product(vs) -> Q:
    qs = [phi(v) for v in vs]
    return reduce(qmul, qs, Q.ONE)


_UNITS = (V.I, V.J, V.K)


@lru_cache(maxsize=256)
def nonzero_tuples(t: Tree) -> frozenset[tuple[V, ...]]:
    """All tuples in {i, j, k}^n whose bracketing by ``t`` is nonzero."""
    return frozenset(
        vs for vs in product(_UNITS, repeat=t.n_leaves)
        if evaluate_bracketing(t, vs) is not V.ZERO
    )


def count_nonzero_tuples(t1: Tree, t2: Tree) -> int:
    """Brute force over 3**n tuples: how many survive both bracketings."""
    if t1.n_leaves != t2.n_leaves:
        raise LengthMismatch(f"{t1.n_leaves} vs {t2.n_leaves} leaves")
    return len(nonzero_tuples(t1) & nonzero_tuples(t2))
