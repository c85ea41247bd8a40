from __future__ import annotations

import os

from hypothesis import HealthCheck, settings, strategies as st

from parsewords.enumeration import catalan, tree_from_rank
from parsewords.trees import decode_path

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    return tree_from_rank(n, draw(st.integers(0, catalan(n - 1) - 1)))


@st.composite
def tree_pairs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    rank = st.integers(0, catalan(n - 1) - 1)
    return tree_from_rank(n, draw(rank)), tree_from_rank(n, draw(rank))


@st.composite
def path_trees(draw, min_n: int = 2, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    return decode_path(draw(st.text("lr", min_size=n - 2, max_size=n - 2)))


def paper_tree(n: int, k: int):
    """The k-th n-leaf tree of the standard catalogue (1-based)."""
    return tree_from_rank(n, k - 1)
