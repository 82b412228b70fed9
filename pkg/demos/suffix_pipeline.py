"""
From buckets to a suffix array
==============================

Suffixes are grouped by the degree set of their first factor.  Buckets are
ordered like single-factor polynomials, entries inside a bucket by the rest
of their term stream, and reading the buckets in order yields the suffix
array.
"""

import numpy as np

from polysuffix import oracle_naive, rank_reuse_sort, render_key, render_polynomial, sorted_buckets, suffix_array
from polysuffix.encoding import decode_polynomial

text = "babaabcbabaa"
for bucket in sorted_buckets(text):
    for entry in bucket.entries:
        residue = render_polynomial(decode_polynomial(entry.residue)) or "-"
        print(f"{render_key(bucket.degrees):<8} c={entry.coefficient}  {residue:<28} {text[entry.suffix_index:]}")

sa = suffix_array(text)
print("suffix array:", sa.tolist())
assert np.array_equal(sa, oracle_naive(text))

# A repeat followed by a larger symbol reverses the naive coefficient order:
# "nnns" < "nns" < "ns", so more repeats sort first here.
print("nnns ->", suffix_array("nnns").tolist())

# Reusing residue ranks gives the same answer.
print("rank reuse:", rank_reuse_sort(text).tolist())
