import itertools
import random

import pytest
from hypothesis import given

from conftest import texts
from worked_tables import TABLE_1_2_SORTED, TEXT_1, start_indices
from polysuffix import EmptyInput, OracleReport, oracle_doubling, oracle_naive, random_text, verify
from polysuffix.oracle import compare_arrays


def test_naive_examples():
    assert oracle_naive("twinstwins").tolist() == [7, 2, 8, 3, 9, 4, 5, 0, 6, 1]
    assert oracle_naive("z").tolist() == [0]
    assert oracle_naive("nnns").tolist() == [0, 1, 2, 3]
    with pytest.raises(EmptyInput):
        oracle_naive("")


def test_doubling_examples():
    assert oracle_doubling("banana").tolist() == [5, 3, 1, 0, 4, 2]
    assert oracle_doubling("q" * 9).tolist() == list(range(8, -1, -1))
    assert oracle_doubling(TEXT_1).tolist() == start_indices(TEXT_1, TABLE_1_2_SORTED)
    with pytest.raises(EmptyInput):
        oracle_doubling(b"")


def test_oracles_have_no_caps():
    wide = "".join(chr(ord("A") + i) for i in range(40)) * 2
    assert oracle_naive(wide).tolist() == oracle_doubling(wide).tolist()
    long_run = "a" * 100 + "b"
    assert oracle_naive(long_run).tolist() == oracle_doubling(long_run).tolist()


@given(texts(max_size=200, alphabet="abc"))
def test_naive_equals_doubling(text):
    assert oracle_naive(text).tolist() == oracle_doubling(text).tolist()


def test_verify():
    assert verify("aacaagtttacaagc") == OracleReport(True)
    assert verify("a").matches
    rng = random.Random(2)
    assert all(verify(random_text(rng, max_length=64)).matches for _ in range(200))


def test_compare_arrays_reports_divergence():
    assert compare_arrays([1, 0, 2], [1, 2, 0]) == OracleReport(False, 1)
    assert compare_arrays([1, 0], [1, 0, 2]) == OracleReport(False, 2)


def test_random_text_respects_caps():
    rng = random.Random(0)
    for _ in range(300):
        text = random_text(rng)
        assert 1 <= len(text) <= 512
        assert len(set(text)) <= 26
        longest = max(len(list(run)) for _, run in itertools.groupby(text))
        assert longest <= 63
