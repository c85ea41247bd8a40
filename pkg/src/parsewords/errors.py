"""Exception hierarchy shared by every module of the package."""


class ParseWordsError(Exception):
    """Base class for all errors raised by parsewords."""


class LengthMismatch(ParseWordsError, ValueError):
    """Two objects that must have the same number of leaves/letters do not."""


class BadParams(ParseWordsError, ValueError):
    """A family or formula was asked for outside its parameter range."""


class NotAPathTree(ParseWordsError, ValueError):
    """Some level of the tree holds three or more vertices."""


class NotPathTrees(NotAPathTree):
    """A pair operation that needs two path trees got something else."""


class TreeParseError(ParseWordsError, ValueError):
    """Malformed tree literal.  ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class LeafIndexError(ParseWordsError, IndexError):
    """A 1-based leaf index fell outside 1..n."""


class RootLeaf(ParseWordsError, ValueError):
    """The operation needs a sibling, but the tree is a single leaf."""


class TooShort(ParseWordsError, ValueError):
    """The word is too short for the requested pattern test."""


class ZeroInput(ParseWordsError, ValueError):
    """The zero vector was passed where a unit vector is required."""


class UnknownClaim(ParseWordsError, KeyError):
    """No claim with this id is registered."""


class RangeTooLarge(ParseWordsError, ValueError):
    """The estimated amount of work exceeds the configured budget."""
