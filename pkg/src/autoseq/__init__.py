"""Characteristic sequences of regular languages over a two-letter alphabet.

List all words over {a, b} by length and then alphabetically, and mark each
one with 1 or 0 according to membership in a regular language L.  The
resulting bit sequence can always be produced by a finite machine reading
the binary digits of the index, and equally by iterating a constant-length
substitution.  This package builds those machines, takes them apart again,
and cross-checks every step against the word-by-word definition.
"""

from .automata import (
    Dfa,
    Dfao,
    InvalidAutomatonError,
    accepts,
    complement,
    counterexample,
    dfao_counterexample,
    dfao_equivalent,
    difference,
    equivalent,
    intersection,
    is_empty,
    minimize,
    minimize_dfao,
    output,
    run,
    shortest_accepted,
    union,
    validate,
)
from .charseq import char_bit, char_seq, output_seq, residual_bit, residuals
from .compiler import (
    PartitionError,
    canonical_recognizer,
    compile_dfa,
    compile_dfa_with_pairs,
    first_mismatch,
    glue,
    split_dfa,
)
from .formats import FormatError, dump, load, parse, save, to_dot
from .numeration import (
    bits_to_letters,
    from_digits,
    increment_bits,
    increment_letters,
    shortlex_extend,
    shortlex_index,
    shortlex_word,
    to_digits,
)
from .tagsystem import (
    InvalidTagSystemError,
    TagSystem,
    from_dfao,
    intseq,
    intseq_term,
    is_fixed_point_prefix,
    seq,
)

__all__ = [
    "Dfa",
    "Dfao",
    "FormatError",
    "InvalidAutomatonError",
    "InvalidTagSystemError",
    "PartitionError",
    "TagSystem",
    "accepts",
    "bits_to_letters",
    "canonical_recognizer",
    "char_bit",
    "char_seq",
    "compile_dfa",
    "compile_dfa_with_pairs",
    "complement",
    "counterexample",
    "dfao_counterexample",
    "dfao_equivalent",
    "difference",
    "dump",
    "equivalent",
    "first_mismatch",
    "from_dfao",
    "from_digits",
    "glue",
    "increment_bits",
    "increment_letters",
    "intersection",
    "intseq",
    "intseq_term",
    "is_empty",
    "is_fixed_point_prefix",
    "load",
    "minimize",
    "minimize_dfao",
    "output",
    "output_seq",
    "parse",
    "residual_bit",
    "residuals",
    "run",
    "save",
    "seq",
    "shortest_accepted",
    "shortlex_extend",
    "shortlex_index",
    "shortlex_word",
    "split_dfa",
    "to_digits",
    "to_dot",
    "union",
    "validate",
]
