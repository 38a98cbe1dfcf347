"""The six-stage list decoder."""

import random

import pytest

from conftest import X60
from vtsync import (CodeParams, DecoderLimits, ParamError, RandomBinary,
                    ReedSolomon, decode, encode)
from vtsync.bits import bits_from_str, delete_positions
from vtsync.decoder import (build_grid, candidate_block_patterns,
                            candidate_chunk_matrices,
                            fix_single_deletion_blocks, final_filter,
                            iterative_vt_repair, resolve_erasures)
from vtsync.encoder import parity_matrix

P60 = CodeParams(4, 5, 3, ReedSolomon(4))

# three-block scenario with one ambiguous boundary: true pattern (0, 2, 1)
# is string-equivalent to (0, 1, 2), and the stage-1 tree keeps exactly both
TREE_X = bits_from_str("1101 1111 1001")
TREE_DELETED = (4, 5, 10)
TREE_PARAMS = CodeParams(4, 3, 1, ReedSolomon(1))

# deletion sets on the 60-bit worked example realizing three chunk matrices
A1 = ((1, 1, 0), (0, 0, 0), (0, 1, 1), (0, 0, 0), (0, 0, 0))
A2 = ((2, 0, 0), (0, 0, 0), (0, 1, 1), (0, 0, 0), (0, 0, 0))
A3 = ((1, 0, 1), (0, 0, 0), (1, 0, 1), (0, 0, 0), (0, 0, 0))
MATRIX_DELETIONS = {A1: (1, 4, 30, 32), A2: (1, 3, 31, 35), A3: (1, 8, 27, 32)}
# expected stage-4 fixed points for the true candidates
A1_FIXED = tuple((0,) * 3 for _ in range(5))
A2_FIXED = ((2, 0, 0),) + tuple((0,) * 3 for _ in range(4))
A3_FIXED = A3


def true_block_pattern(positions, params):
    counts = [0] * params.l1
    for p in positions:
        counts[p // params.n_b] += 1
    return tuple(counts)


def test_block_tree_keeps_exactly_the_equivalent_patterns():
    msg = encode(TREE_X, TREE_PARAMS)
    y = delete_positions(TREE_X, TREE_DELETED)
    pats = candidate_block_patterns(y, msg.m1, 3, TREE_PARAMS)
    assert sorted(pats) == [(0, 1, 2), (0, 2, 1)]
    assert true_block_pattern(TREE_DELETED, TREE_PARAMS) in pats


def test_block_tree_no_deletions():
    msg = encode(X60, P60)
    assert candidate_block_patterns(X60, msg.m1, 0, P60) == [(0, 0, 0, 0, 0)]


def test_block_tree_boundary_run_opens_zero_and_two():
    # first block 0100, second all ones; deleting bits 2,3 leaves a window
    # 0011 whose checksum still matches, so one deletion there is ruled out
    p = CodeParams(4, 2, 1, ReedSolomon(1))
    x = bits_from_str("0100 1111")
    msg = encode(x, p)
    y = delete_positions(x, (1, 2))
    pats = candidate_block_patterns(y, msg.m1, 2, p)
    assert sorted(pats) == [(0, 2), (2, 0)]
    assert x in decode(y, msg, p).final_list


def test_fix_blocks_updates_patterns(x60, msg60, params60):
    cases = {
        (1, 1, 1, 1, 0): (0, 0, 0, 0, 0),
        (1, 1, 2, 0, 0): (0, 0, 2, 0, 0),
        (1, 2, 1, 0, 0): (0, 2, 0, 0, 0),
        (2, 0, 2, 0, 0): (2, 0, 2, 0, 0),
        (0, 0, 0, 0, 0): (0, 0, 0, 0, 0),
    }
    rnd = random.Random(4)
    for pattern, expected in cases.items():
        # realize the pattern with explicit deletions
        pos = []
        for i, a in enumerate(pattern):
            pos += rnd.sample(range(i * 12, (i + 1) * 12), a)
        y = delete_positions(x60, pos)
        yhat, vhat = fix_single_deletion_blocks(y, pattern, msg60.m1, params60)
        assert vhat == expected
        assert len(yhat) == 60 - sum(expected)
        # restored single-deletion blocks must reproduce the original blocks
        if expected == (0, 0, 0, 0, 0) and pattern != (2, 0, 2, 0, 0):
            assert yhat == x60


def test_fix_blocks_noop_on_all_zero(x60, msg60, params60):
    yhat, vhat = fix_single_deletion_blocks(x60, (0,) * 5, msg60.m1, params60)
    assert yhat == x60 and vhat == (0,) * 5


@pytest.mark.parametrize("target", [A1, A2, A3])
def test_chunk_tree_contains_true_matrix(x60, msg60, params60, target):
    pos = MATRIX_DELETIONS[target]
    y = delete_positions(x60, pos)
    vhat = true_block_pattern(pos, params60)
    pats = candidate_block_patterns(y, msg60.m1, len(pos), params60)
    assert vhat in pats
    yhat, vhat2 = fix_single_deletion_blocks(y, vhat, msg60.m1, params60)
    assert vhat2 == vhat  # no single-deletion blocks in these scenarios
    mats = candidate_chunk_matrices(yhat, vhat, msg60.m2, params60)
    assert target in mats
    for mat in mats:  # row sums always match the block pattern
        assert tuple(sum(row) for row in mat) == vhat


def test_chunk_tree_all_zero_pattern(x60, msg60, params60):
    mats = candidate_chunk_matrices(x60, (0,) * 5, msg60.m2, params60)
    assert mats == [tuple((0, 0, 0) for _ in range(5))]


def test_chunk_tree_rejects_wrong_syndromes(x60, msg60, params60):
    wrong = tuple((v + 1) % 21 for v in msg60.m2)
    assert candidate_chunk_matrices(x60, (0,) * 5, wrong, params60) == []


@pytest.mark.parametrize("target,fixed", [(A1, A1_FIXED), (A2, A2_FIXED),
                                          (A3, A3_FIXED)])
def test_iterative_repair_reference_transitions(x60, msg60, params60,
                                                target, fixed):
    pos = MATRIX_DELETIONS[target]
    y = delete_positions(x60, pos)
    vhat = true_block_pattern(pos, params60)
    yhat, _ = fix_single_deletion_blocks(y, vhat, msg60.m1, params60)
    grid = build_grid(yhat, target, params60)
    result = iterative_vt_repair(grid, [list(r) for r in target],
                                 msg60.m1, msg60.m2, params60)
    assert result is not None
    grid2, mat2 = result
    assert tuple(tuple(r) for r in mat2) == fixed
    # no single-deletion row or column survives the fixed point
    for i in range(5):
        assert sum(mat2[i]) != 1
    for j in range(3):
        assert sum(mat2[i][j] for i in range(5)) != 1
    # repaired chunks hold the original content
    for i in range(5):
        for j in range(3):
            if mat2[i][j] == 0:
                assert grid2[i][j] == x60[i * 12 + j * 4: i * 12 + j * 4 + 4]


@pytest.mark.parametrize("target,erased_chunks", [(A2, 1), (A3, 4)])
def test_resolve_erasures_reference_cases(x60, msg60, params60, target,
                                          erased_chunks):
    # A2 leaves one erased chunk, A3 four: four parity symbols suffice for
    # both (the second case exactly at capacity)
    pos = MATRIX_DELETIONS[target]
    y = delete_positions(x60, pos)
    vhat = true_block_pattern(pos, params60)
    yhat, _ = fix_single_deletion_blocks(y, vhat, msg60.m1, params60)
    grid = build_grid(yhat, target, params60)
    grid2, mat2 = iterative_vt_repair(grid, [list(r) for r in target],
                                      msg60.m1, msg60.m2, params60)
    assert sum(1 for row in mat2 for a in row if a) == erased_chunks
    seqs = resolve_erasures(grid2, mat2, msg60.m3, params60,
                            parity_matrix(params60))
    assert seqs == [x60]


def test_resolve_erasures_mismatch_gives_empty(x60, msg60, params60):
    grid = build_grid(x60, tuple((0, 0, 0) for _ in range(5)), params60)
    mat = [[0] * 3 for _ in range(5)]
    bad_m3 = (msg60.m3[0] ^ 1,) + msg60.m3[1:]
    assert resolve_erasures(grid, mat, bad_m3, params60,
                            parity_matrix(params60)) == []
    assert resolve_erasures(grid, mat, msg60.m3, params60,
                            parity_matrix(params60)) == [x60]


def test_final_filter_dedup_and_constraints(x60, msg60, params60):
    other = bytes(60)
    y = delete_positions(x60, (0, 1))
    kept = final_filter([x60, x60, other], y, msg60, params60)
    assert kept == (x60,)


def test_decode_identity_when_nothing_deleted(x60, msg60, params60):
    rep = decode(x60, msg60, params60)
    assert rep.final_list == (x60,)
    assert rep.r1 == rep.r6 == 1
    assert not rep.truncated


def test_decode_random_four_deletions(x60, msg60, params60):
    rnd = random.Random(11)
    for _ in range(60):
        pos = rnd.sample(range(60), 4)
        rep = decode(delete_positions(x60, pos), msg60, params60)
        assert not rep.truncated
        assert x60 in rep.final_list
        assert rep.r6 == len(rep.final_list) <= rep.r5


def test_decode_monotone_counters(x60, msg60, params60):
    rnd = random.Random(12)
    for _ in range(30):
        pos = rnd.sample(range(60), 3)
        rep = decode(delete_positions(x60, pos), msg60, params60)
        assert rep.r6 <= rep.r5
        assert rep.r4 <= rep.r3


def test_decode_is_deterministic(x60, msg60, params60):
    y = delete_positions(x60, (3, 17, 40, 59))
    assert decode(y, msg60, params60) == decode(y, msg60, params60)


def test_decode_rejects_overlong_input(x60, msg60, params60):
    with pytest.raises(ParamError):
        decode(x60 + b"\x00", msg60, params60)


def test_decode_truncates_under_tiny_budget(x60, msg60, params60):
    limits = DecoderLimits(max_tree_nodes=2, max_candidates=1,
                           max_affine_enumeration=1)
    rep = decode(delete_positions(x60, (5, 25, 45, 55)), msg60, params60, limits)
    assert rep.truncated
    assert rep.limits == limits


def test_decode_with_random_binary_code_and_affine_systems():
    # 2 parity bits cannot pin 3 erased bits: the affine enumeration plus the
    # final filter must still recover exactly the consistent supersequences
    params = CodeParams(3, 2, 2, RandomBinary(2, seed=21))
    rnd = random.Random(21)
    from vtsync.oracle import brute_force_decode
    for _ in range(40):
        x = bytes(rnd.randrange(2) for _ in range(12))
        pos = rnd.sample(range(12), 2)
        y = delete_positions(x, pos)
        msg = encode(x, params)
        rep = decode(y, msg, params)
        assert not rep.truncated
        assert x in rep.final_list
        assert set(rep.final_list) == brute_force_decode(y, msg, params)


def test_decode_empty_received():
    params = CodeParams(3, 2, 2, ReedSolomon(2))
    x = bits_from_str("101 010 110 001")
    msg = encode(x, params)
    rep = decode(b"", msg, params)  # every bit deleted
    assert x in rep.final_list


@pytest.mark.parametrize("params,k,instances", [
    (CodeParams(4, 2, 2, ReedSolomon(1)), 2, 60),   # n = 16
    (CodeParams(4, 5, 3, ReedSolomon(1)), 2, 25),   # n = 60, weak parity
    (CodeParams(4, 5, 3, ReedSolomon(4)), 3, 15),   # n = 60, worked-example code
])
def test_oracle_equivalence_randomized(params, k, instances):
    from vtsync.oracle import brute_force_decode
    rnd = random.Random(params.n * 10 + k)
    for _ in range(instances):
        x = bytes(rnd.randrange(2) for _ in range(params.n))
        y = delete_positions(x, rnd.sample(range(params.n), k))
        msg = encode(x, params)
        rep = decode(y, msg, params)
        assert not rep.truncated
        assert set(rep.final_list) == brute_force_decode(y, msg, params)
