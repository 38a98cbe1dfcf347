"""Brute-force reference decoder."""

import random

import pytest

from vtsync import (CodeParams, ReedSolomon, brute_force_decode, decode,
                    encode, enumerate_supersequences)
from vtsync.bits import bits_from_str, delete_positions


def test_single_insertion_counts():
    assert enumerate_supersequences(b"\x00", 1) == \
        {bits_from_str(s) for s in ("00", "01", "10")}
    assert enumerate_supersequences(bits_from_str("01"), 1) == \
        {bits_from_str(s) for s in ("001", "011", "010", "101")}
    # closed form: a length-m string has m + 2 distinct 1-bit supersequences
    rnd = random.Random(0)
    for m in range(0, 14):
        y = bytes(rnd.randrange(2) for _ in range(m))
        assert len(enumerate_supersequences(y, 1)) == m + 2


def test_zero_insertions():
    y = bits_from_str("0110")
    assert enumerate_supersequences(y, 0) == {y}


def test_counts_depend_only_on_lengths():
    # distinct-supersequence count is sum_{i<=k} C(m+k, i)
    from math import comb
    rnd = random.Random(1)
    for m, k in [(5, 2), (7, 3), (10, 2)]:
        y = bytes(rnd.randrange(2) for _ in range(m))
        expected = sum(comb(m + k, i) for i in range(k + 1))
        assert len(enumerate_supersequences(y, k)) == expected


def test_guard_refuses_oversized_instances():
    with pytest.raises(ValueError):
        enumerate_supersequences(bytes(60), 5)
    with pytest.raises(ValueError):
        enumerate_supersequences(bytes(10), -1)


def test_members_contain_y():
    rnd = random.Random(2)
    y = bytes(rnd.randrange(2) for _ in range(8))
    from vtsync.bits import is_subsequence
    for s in enumerate_supersequences(y, 2):
        assert len(s) == 10
        assert is_subsequence(y, s)


def test_brute_force_contains_truth():
    params = CodeParams(3, 2, 2, ReedSolomon(1))
    rnd = random.Random(3)
    for _ in range(20):
        x = bytes(rnd.randrange(2) for _ in range(12))
        y = delete_positions(x, [rnd.randrange(12)])
        got = brute_force_decode(y, encode(x, params), params)
        assert x in got


def test_brute_force_may_be_empty_for_unrelated_y():
    params = CodeParams(3, 2, 2, ReedSolomon(2))
    x = bits_from_str("111 000 111 000")
    msg = encode(x, params)
    hits = 0
    rnd = random.Random(4)
    for _ in range(20):
        y = bytes(rnd.randrange(2) for _ in range(11))
        hits += bool(brute_force_decode(y, msg, params))
    assert hits < 20  # most unrelated sequences admit no reconstruction


def test_matches_pipeline_decoder_on_random_instances():
    params = CodeParams(3, 2, 2, ReedSolomon(1))
    rnd = random.Random(5)
    for _ in range(50):
        x = bytes(rnd.randrange(2) for _ in range(12))
        k = rnd.choice((1, 2))
        y = delete_positions(x, rnd.sample(range(12), k))
        msg = encode(x, params)
        assert set(decode(y, msg, params).final_list) == \
            brute_force_decode(y, msg, params)
