"""Exact combinatorics of permutations containing the pattern 321 exactly once.

The package provides validated permutation types, exact pattern counting,
generation of 321-avoiding families, the decomposition pairing one-321
permutations with constrained avoider pairs, exact Catalan arithmetic for
the resulting count identities, and a brute-force oracle that checks all of
it from first principles.
"""

from .avoiders import (
    DEFAULT_CAP,
    enumerate_avoiders,
    enumerate_sigma1,
    enumerate_sigma2,
    is_avoiding_321,
)
from .bijection import (
    Decomposition,
    compose,
    decompose,
    enumerate_noonan,
    format_decomposition,
    parse_decomposition,
    validate_decomposition,
)
from .catalan import (
    binomial,
    catalan,
    catalan_table,
    noonan_catalan_form,
    noonan_closed,
    noonan_convolution,
)
from .errors import (
    CapExceeded,
    ConstraintViolation,
    DomainError,
    InternalConstraintViolation,
    InvalidB,
    InvalidRange,
    MultipleOccurrences,
    NoOccurrence,
    NonIntegerResult,
    NotAPermutation,
    NoUnique321,
)
from .oracle import DEFAULT_ORACLE_CAP, brute_count_exactly_k, brute_noonan_set
from .perms import (
    PATTERN_321,
    Occurrence321,
    Permutation,
    ValueSequence,
    count_321,
    count_321_fenwick,
    count_occurrences,
    count_pattern,
    find_unique_321,
    from_one_line,
    parse_one_line,
    parse_value_sequence,
    standardize,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "ConstraintViolation",
    "DEFAULT_CAP",
    "DEFAULT_ORACLE_CAP",
    "Decomposition",
    "DomainError",
    "InternalConstraintViolation",
    "InvalidB",
    "InvalidRange",
    "MultipleOccurrences",
    "NoOccurrence",
    "NonIntegerResult",
    "NotAPermutation",
    "NoUnique321",
    "Occurrence321",
    "PATTERN_321",
    "Permutation",
    "ValueSequence",
    "binomial",
    "brute_count_exactly_k",
    "brute_noonan_set",
    "catalan",
    "catalan_table",
    "compose",
    "count_321",
    "count_321_fenwick",
    "count_occurrences",
    "count_pattern",
    "decompose",
    "enumerate_avoiders",
    "enumerate_noonan",
    "enumerate_sigma1",
    "enumerate_sigma2",
    "find_unique_321",
    "format_decomposition",
    "from_one_line",
    "is_avoiding_321",
    "noonan_catalan_form",
    "noonan_closed",
    "noonan_convolution",
    "parse_decomposition",
    "parse_one_line",
    "parse_value_sequence",
    "standardize",
    "validate_decomposition",
]
