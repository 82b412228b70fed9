"""
Factorizing suffixes into polynomials
=====================================

Every distinct symbol becomes a term: the smallest is ``1``, the next ``x``,
then ``x²`` and so on.  A suffix is cut into factors, either a strictly
increasing stretch such as ``(1·x·x²)`` or a run of one symbol such as ``2x³``.
"""

from polysuffix import build_alphabet, factorize, leading_factor_key, render_key, render_polynomial

text = "aacaagtttacaagc"
alphabet = build_alphabet(text)
print("terms:", {c: render_key([alphabet.degree_of(c)]) for c in alphabet.symbols})

# One row per suffix: its polynomial and the bucket its first factor selects.
for i in range(len(text)):
    p = factorize(alphabet.degrees(text[i:]).tolist())
    key, coefficient = leading_factor_key(p)
    print(f"{text[i:]:>16}  {render_polynomial(p):<36} bucket {render_key(key)} (coefficient {coefficient})")

# Runs right after an increasing stretch lend it their first symbol:
# "gttt" is (x²·x³) followed by 2x³, not x² followed by 3x³.
print(render_polynomial(factorize(alphabet.degrees("gttt").tolist())))
