"""Common parse words of binary-tree pairs under the grammar 0->12|21, 1->02|20, 2->01|10."""

from .enumeration import (
    ParseWordSet,
    TreePair,
    all_path_trees,
    all_trees,
    count_parse_words,
    parse_words,
)
from .grammar import canonicalize, class_predicates, parse, parses, root_letter_by_parity, words_of
from .harness import VerificationReport, verify, verify_conjecture, verify_theorem
from .reductions import splice_solve
from .trees import (
    Tree,
    decode_path,
    deserialize,
    encode_path,
    left_comb,
    left_crooked,
    left_turn,
    make_family,
    right_comb,
    right_crooked,
    right_turn,
    serialize,
)

__version__ = "0.1.0"
