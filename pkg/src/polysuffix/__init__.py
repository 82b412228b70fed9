"""Suffix arrays through run-factorized polynomials and packed factor words."""

from .alphabet import MAX_SYMBOLS, Alphabet, build_alphabet, degree_of
from .buckets import Bucket, BucketEntry, assign_buckets, order_buckets, sort_within_bucket
from .encoding import (
    MAX_COEFFICIENT,
    bucket_key,
    compare_encoded,
    compare_masks,
    decode_factor,
    decode_polynomial,
    divide_by_key,
    dump_buffers,
    encode_factor,
    encode_polynomial,
    explain_comparison,
    find_first_difference,
    load_buffers,
)
from .errors import (
    AlphabetTooLarge,
    CapViolation,
    CoefficientOverflow,
    DegreeOverflow,
    DuplicateKey,
    EmptyInput,
    MalformedWord,
    NotDivisible,
    PolySuffixError,
    UnknownSymbol,
)
from .oracle import OracleReport, oracle_doubling, oracle_naive, random_text, verify
from .parallel import ParallelConfig, parallel_bucket_sort, parallel_map_suffixes
from .polynomial import (
    Factor,
    Ordering,
    Polynomial,
    compare_polynomials,
    expand_terms,
    factorize,
    leading_factor_key,
    render_key,
    render_polynomial,
)
from .suffix_sort import rank_reuse_sort, sorted_buckets, suffix_array

__version__ = "0.1.0"
