"""
Packed factor words and the XOR comparison
==========================================

A factor fits in one 32-bit word: the low 26 bits flag which terms occur and
the top 6 bits hold the repeat count.  A polynomial is a counted array of
such words.
"""

from polysuffix import (
    bucket_key,
    build_alphabet,
    divide_by_key,
    encode_polynomial,
    explain_comparison,
    factorize,
)

text = "aacaagtttacaagc"
alphabet = build_alphabet(text)


def buffer_of(s):
    return encode_polynomial(factorize(alphabet.degrees(s).tolist()))


left, right = buffer_of("aacaagtttacaagc"), buffer_of("aagtttacaagc")
for name, buf in [("left", left), ("right", right)]:
    print(name, [f"{int(w) >> 26}|{int(w) & 0x3FFFFFF:05b}" for w in buf[1:]])

# The first differing word is found, the degree masks are XORed and the lowest
# set bit picks the smaller side.
trace = explain_comparison(left, right)
print(f"first difference at word {trace.index}")
print(f"xor {trace.xor_mask:05b}, lowest bit {trace.lowest_bit:05b}, verdict {trace.verdict.name}")

# Dividing by a bucket key is an XOR on the leading word.
coefficient, residue = divide_by_key(buffer_of("tttacaagc"), bucket_key([3]))
print("tttacaagc / x³ -> coefficient", coefficient, "residue words", residue.tolist())
