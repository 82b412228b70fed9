import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import texts
from worked_tables import WORKED_LEFT, WORKED_RIGHT
from polysuffix import (
    CoefficientOverflow,
    DegreeOverflow,
    Factor,
    MalformedWord,
    NotDivisible,
    Ordering,
    build_alphabet,
    bucket_key,
    compare_encoded,
    compare_polynomials,
    decode_factor,
    decode_polynomial,
    divide_by_key,
    dump_buffers,
    encode_factor,
    encode_polynomial,
    explain_comparison,
    factorize,
    find_first_difference,
    load_buffers,
    parallel_map_suffixes,
)
from polysuffix.encoding import COEFF_SHIFT, lowest_set_bit


def enc(text, alphabet=None):
    alphabet = alphabet or build_alphabet(text)
    return encode_polynomial(factorize(alphabet.degrees(text).tolist()))


def test_encode_factor():
    assert encode_factor(Factor((1,))) & 0x3FFFFFF == 0b00010
    assert encode_factor(Factor((1,))) == (1 << 26) | 0b00010
    assert encode_factor(Factor((3,), 2)) == (2 << 26) | 0b1000
    with pytest.raises(CoefficientOverflow):
        encode_factor(Factor((0,), 64))
    with pytest.raises(DegreeOverflow):
        encode_factor(Factor((26,)))
    assert encode_factor(Factor((25,), 63)) == 0xFFFFFFFF & ((63 << 26) | (1 << 25))


def test_decode_factor():
    assert decode_factor((1 << 26) | 0b00110) == Factor((1, 2))
    assert decode_factor((3 << 26) | 0b01000) == Factor((3,), 3)
    with pytest.raises(MalformedWord):
        decode_factor(1 << 26)
    with pytest.raises(MalformedWord):
        decode_factor(0b101)
    with pytest.raises(MalformedWord):
        decode_factor((2 << 26) | 0b11)


def test_encode_polynomial():
    alphabet = build_alphabet("babaabcbabaa")
    buf = enc("babaa", alphabet)
    assert buf.dtype == np.uint32
    assert buf.tolist() == [3, (1 << 26) | 0b10, (1 << 26) | 0b11, (2 << 26) | 0b1]
    assert enc("q").tolist() == [1, (1 << 26) | 1]
    assert enc("twinstwins")[0] == 3
    assert decode_polynomial(buf) == factorize(alphabet.degrees("babaa").tolist())


def test_divide_by_key():
    alphabet = build_alphabet("aacaagtttacaagc")
    coefficient, residue = divide_by_key(enc("tttacaagc", alphabet), bucket_key([3]))
    assert coefficient == 3
    assert decode_polynomial(residue) == factorize(alphabet.degrees("acaagc").tolist())
    assert str(decode_polynomial(residue)) == "(1·x)·2·x²·x"
    coefficient, residue = divide_by_key(enc("c", alphabet), bucket_key([1]))
    assert coefficient == 1 and residue.tolist() == [0]
    with pytest.raises(NotDivisible):
        divide_by_key(enc("c", alphabet), bucket_key([2]))
    with pytest.raises(NotDivisible):
        divide_by_key(np.array([0], dtype=np.uint32), 1)


def test_find_first_difference():
    alphabet = build_alphabet(WORKED_LEFT)
    left, right = enc(WORKED_LEFT, alphabet), enc(WORKED_RIGHT, alphabet)
    assert find_first_difference(left, right) == 2
    assert find_first_difference(left, left.copy()) is None
    w1, w2, w3 = 5, 6, 7
    assert find_first_difference(np.array([2, w1, w2]), np.array([3, w1, w2, w3])) == 3


@pytest.mark.parametrize("workers", [1, 2, 8])
def test_find_first_difference_worker_invariant(workers):
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(1, 5000))
        a = rng.integers(0, 2**32, size=n, dtype=np.uint32)
        b = a.copy()
        for pos in rng.integers(1, n + 1, size=int(rng.integers(0, 4))):
            if pos < n:
                b[pos] ^= 1
        expected = find_first_difference(a, b)
        assert find_first_difference(a, b, workers=workers, chunk=64) == expected


def test_compare_encoded_examples():
    alphabet = build_alphabet(WORKED_LEFT)
    left, right = enc(WORKED_LEFT, alphabet), enc(WORKED_RIGHT, alphabet)
    assert compare_encoded(left, right) == Ordering.LESS
    assert compare_encoded(right, left) == Ordering.GREATER
    assert compare_encoded(left, left.copy()) == Ordering.EQUAL
    ns = build_alphabet("ns")
    assert compare_encoded(enc("nns", ns), enc("nnns", ns)) == Ordering.GREATER
    assert compare_encoded(enc("n", ns), enc("ns", ns)) == Ordering.LESS
    assert compare_encoded(enc("ns", ns), enc("n", ns)) == Ordering.GREATER


def test_compare_encoded_rejects_malformed():
    with pytest.raises(MalformedWord):
        compare_encoded(np.array([1, 1 << 26], dtype=np.uint32), np.array([1, (1 << 26) | 1], dtype=np.uint32))


def test_worked_example_trace():
    alphabet = build_alphabet(WORKED_LEFT)
    trace = explain_comparison(enc(WORKED_LEFT, alphabet), enc(WORKED_RIGHT, alphabet))
    assert trace.index == 2
    assert trace.xor_mask == 0b01110
    assert trace.lowest_bit == 0b00010
    assert trace.lowest_bit & 0b00010  # owned by x
    assert trace.verdict == Ordering.LESS
    assert lowest_set_bit(0b01110) == 0b00010


@given(texts(max_size=50, alphabet="abcde"))
def test_compare_encoded_agrees_with_polynomials(text):
    alphabet = build_alphabet(text)
    polys = [factorize(alphabet.degrees(text[i:]).tolist()) for i in range(len(text))]
    bufs = [encode_polynomial(p) for p in polys]
    for i in range(len(text)):
        for j in range(len(text)):
            assert compare_encoded(bufs[i], bufs[j]) == compare_polynomials(polys[i], polys[j])


@given(texts(max_size=30))
def test_division_by_leading_key_only(text):
    alphabet = build_alphabet(text)
    p = factorize(alphabet.degrees(text).tolist())
    buf = encode_polynomial(p)
    key = bucket_key(p.factors[0].degrees)
    coefficient, residue = divide_by_key(buf, key)
    assert coefficient == p.factors[0].coefficient
    assert decode_polynomial(residue).factors == p.factors[1:]
    for other in range(1, 1 << 6):
        if other != key:
            with pytest.raises(NotDivisible):
                divide_by_key(buf, other)


@given(st.integers(1, (1 << 26) - 1))
def test_increasing_factor_round_trip(mask):
    degrees = tuple(d for d in range(26) if mask >> d & 1)
    f = Factor(degrees)
    assert encode_factor(f) == (1 << COEFF_SHIFT) | mask
    assert decode_factor(encode_factor(f)) == f


def test_single_degree_round_trip_exhaustive():
    for d in range(26):
        for c in range(1, 64):
            assert decode_factor(encode_factor(Factor((d,), c))) == Factor((d,), c)


def test_binary_dump_round_trip():
    bufs = parallel_map_suffixes("twinstwins")
    data = dump_buffers(bufs)
    assert data[:4] == (0).to_bytes(4, "little")
    assert data[4:8] == (3).to_bytes(4, "little")
    loaded = load_buffers(data)
    assert [i for i, _ in loaded] == list(range(10))
    for (_, words), buf in zip(loaded, bufs):
        np.testing.assert_array_equal(words, buf)
    with pytest.raises(MalformedWord):
        load_buffers(data[:-2])
