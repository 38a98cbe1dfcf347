"""List decoder: reconstruct every length-n input consistent with the
received subsequence and the transmitted message.

The pipeline runs six stages:
  1. enumerate per-block deletion counts compatible with the block syndromes
     (depth-first tree over blocks);
  2. restore blocks carrying a single deletion via VT insert-decoding;
  3. for each survivor, enumerate per-chunk deletion matrices compatible
     with the chunk-string syndromes (a second tree, over chunk-strings);
  4. repeatedly VT-repair any chunk-string column / block row whose matrix
     slice shows exactly one missing bit, discarding a candidate when the
     restored bit cannot lie in the chunk the matrix points at;
  5. erase the chunks still holding deletions and solve the parity checks
     for them (unique / inconsistent / affine);
  6. keep the sequences that satisfy every syndrome and contain the received
     sequence, and deduplicate.

Stage list sizes are reported as r1, r3, r4, r5, r6.  Resource ceilings turn
oversized searches into truncated (rather than failed) reports.
"""

from dataclasses import dataclass
from itertools import product

from . import kernels
from .bits import is_subsequence, pack_int, unpack_int
from .encoder import CodeParams, ParamError, ReedSolomon, SyncMessage, encode, parity_matrix


@dataclass(frozen=True)
class DecoderLimits:
    max_tree_nodes: int = 1_000_000
    max_candidates: int = 100_000
    max_affine_enumeration: int = 1 << 20

    def __post_init__(self):
        if min(self.max_tree_nodes, self.max_candidates,
               self.max_affine_enumeration) < 1:
            raise ParamError("decoder limits must be positive")


@dataclass(frozen=True)
class DecodeReport:
    final_list: tuple
    r1: int
    r3: int
    r4: int
    r5: int
    r6: int
    truncated: bool
    limits: DecoderLimits


class _Budget:
    """Mutable resource meter shared by the tree searches."""

    __slots__ = ("limits", "nodes", "candidates", "truncated")

    def __init__(self, limits):
        self.limits = limits
        self.nodes = 0
        self.candidates = 0
        self.truncated = False

    def spend_node(self) -> bool:
        self.nodes += 1
        if self.nodes > self.limits.max_tree_nodes:
            self.truncated = True
            return False
        return True

    def spend_candidate(self) -> bool:
        self.candidates += 1
        if self.candidates > self.limits.max_candidates:
            self.truncated = True
            return False
        return True


def candidate_block_patterns(y, m1, k, params, budget=None):
    """Stage 1: all per-block deletion-count vectors summing to k that the
    block syndromes allow.

    At depth i the window of n_b bits starting where block i+1 would begin
    (given the deletions assigned so far) is checksummed.  A matching
    checksum rules out exactly one deletion in that block; a mismatch rules
    out zero.  Windows running past the end of y count as mismatches.
    """
    budget = budget if budget is not None else _Budget(DecoderLimits())
    n_b, l1 = params.n_b, params.l1
    ylen = len(y)
    syn = kernels.vt_syndrome
    out = []
    acc = []

    def walk(i, d):
        if not budget.spend_node():
            return
        if i == l1:
            if d == k:
                out.append(tuple(acc))
            return
        start = n_b * i - d
        stop = start + n_b
        rem = k - d
        match = stop <= ylen and syn(y, start, stop) == m1[i]
        hi = min(rem, n_b)  # a block cannot lose more bits than it has
        choices = (0, *range(2, hi + 1)) if match else range(1, hi + 1)
        for a in choices:
            if budget.truncated:
                return
            acc.append(a)
            walk(i + 1, d + a)
            acc.pop()

    walk(0, 0)
    return out


def fix_single_deletion_blocks(y, pattern, m1, params):
    """Stage 2: VT-restore every block the pattern marks with one deletion.
    Total: returns the updated (sequence, pattern) for every input."""
    n_b = params.n_b
    decode = kernels.vt_insert_decode
    parts = []
    updated = []
    pos = 0
    for i, a in enumerate(pattern):
        take = n_b - a
        seg = y[pos: pos + take]
        pos += take
        if a == 1:
            restored, _, _ = decode(seg, m1[i])
            parts.append(restored)
            updated.append(0)
        else:
            parts.append(seg)
            updated.append(a)
    return b"".join(parts), tuple(updated)


def candidate_chunk_matrices(yhat, vhat, m2, params, budget=None):
    """Stage 3: all l1 x l2 per-chunk deletion matrices with row sums vhat
    that the chunk-string syndromes allow.

    Depth j assembles the j-th chunk-string from full n_c-bit windows (their
    starts shifted by the deletions already placed in earlier chunks of the
    same block) and checksums it; a match forbids a single deletion in that
    chunk-string, a mismatch requires at least one.  Out-of-range windows
    count as mismatches.
    """
    budget = budget if budget is not None else _Budget(DecoderLimits())
    l1, l2, n_c = params.l1, params.l2, params.n_c
    n_b = params.n_b
    ylen = len(yhat)
    syn = kernels.vt_syndrome
    starts = []
    dsum = 0
    for i in range(l1):
        starts.append(n_b * i - dsum)
        dsum += vhat[i]
    out = []
    cols = []
    d = [0] * l1
    zero_col = (0,) * l1
    memo = {}

    def checksum_matches(j):
        # the windows (hence the verdict) depend only on depth and the
        # per-row deletion prefix, which recurs across sibling branches
        key = (j, tuple(d))
        hit = memo.get(key)
        if hit is None:
            off = j * n_c
            segs = []
            hit = True
            for i in range(l1):
                a = starts[i] + off - d[i]
                b = a + n_c
                if b > ylen:
                    hit = False  # runs past the end: cannot look intact
                    break
                segs.append(yhat[a:b])
            if hit:
                hit = syn(b"".join(segs)) == m2[j]
            memo[key] = hit
        return hit

    def walk(j):
        if not budget.spend_node():
            return
        if j == l2:
            # bounds guarantee row sums are complete here
            if budget.spend_candidate():
                out.append(tuple(zip(*cols)))
            return
        match = checksum_matches(j)
        active = [i for i in range(l1) if vhat[i] - d[i]]
        if not active:
            # all rows complete: only the all-zero column, and a mismatch
            # cannot be absorbed
            if match:
                cols.append(zero_col)
                walk(j + 1)
                cols.pop()
            return
        tail = (l2 - j - 1) * n_c  # capacity of the chunks still to come
        ranges = []
        for i in active:
            rem = vhat[i] - d[i]
            lo = rem - tail if rem > tail else 0
            hi = rem if rem < n_c else n_c  # a chunk holds only n_c bits
            ranges.append(range(lo, hi + 1))
        # A matching checksum normally rules out a lone deletion: the slide
        # interpretation (deletion in a boundary run, charged to the next
        # chunk instead) is enumerated at the next depth.  The last depth has
        # no next chunk in the row -- its windows borrow from the following
        # block -- so the forced completion column is exempt from that veto.
        last = j == l2 - 1
        for combo in product(*ranges):
            t = sum(combo)
            if (t != 1 or last) if match else (t >= 1):
                if budget.truncated:
                    return
                col = [0] * l1
                for i, c in zip(active, combo):
                    col[i] = c
                    d[i] += c
                cols.append(tuple(col))
                walk(j + 1)
                cols.pop()
                for i, c in zip(active, combo):
                    d[i] -= c

    walk(0)
    return out


def build_grid(yhat, matrix, params):
    """Split a candidate sequence into its chunk contents: chunk (i, j)
    currently holds n_c - matrix[i][j] bits."""
    n_c = params.n_c
    grid = []
    pos = 0
    for row in matrix:
        cells = []
        for a in row:
            take = n_c - a
            cells.append(yhat[pos: pos + take])
            pos += take
        grid.append(cells)
    return grid


def iterative_vt_repair(grid, matrix, m1, m2, params):
    """Stage 4: VT-repair single-deletion chunk-string columns, then block
    rows, to a fixed point.  Returns (grid, matrix) or None when a restored
    bit cannot lie in the chunk the matrix points at (candidate discarded).

    `grid` and `matrix` are consumed (lists of lists).
    """
    l1, l2, n_c = params.l1, params.l2, params.n_c
    decode = kernels.vt_insert_decode
    changed = True
    while changed:
        changed = False
        for j in range(l2):
            if sum(matrix[i][j] for i in range(l1)) != 1:
                continue
            i_star = next(i for i in range(l1) if matrix[i][j])
            restored, lo, hi = decode(b"".join(grid[i][j] for i in range(l1)), m2[j])
            if hi <= i_star * n_c or lo > (i_star + 1) * n_c:
                return None
            for i in range(l1):
                grid[i][j] = restored[i * n_c: (i + 1) * n_c]
            matrix[i_star][j] = 0
            changed = True
        for i in range(l1):
            if sum(matrix[i]) != 1:
                continue
            j_star = matrix[i].index(1)
            restored, lo, hi = decode(b"".join(grid[i]), m1[i])
            if hi <= j_star * n_c or lo > (j_star + 1) * n_c:
                return None
            grid[i] = [restored[t * n_c: (t + 1) * n_c] for t in range(l2)]
            matrix[i][j_star] = 0
            changed = True
    return grid, matrix


def resolve_erasures(grid, matrix, m3, params, H, budget=None):
    """Stage 5: erase every chunk still holding deletions and solve the
    parity checks for the erased content.  Returns full-length sequences."""
    budget = budget if budget is not None else _Budget(DecoderLimits())
    l1, l2, n_c = params.l1, params.l2, params.n_c
    erased = {(i, j) for i in range(l1) for j in range(l2) if matrix[i][j]}
    rs = isinstance(params.code, ReedSolomon)
    if rs:
        values = [None if (i, j) in erased else pack_int(grid[i][j])
                  for i in range(l1) for j in range(l2)]
    else:
        values = []
        for i in range(l1):
            for j in range(l2):
                if (i, j) in erased:
                    values.extend([None] * n_c)
                else:
                    values.extend(grid[i][j])
    sol = H.solve_erasures(values, m3)
    if sol.solution_count() > budget.limits.max_affine_enumeration:
        budget.truncated = True
    out = []
    for assignment in sol.iter_solutions(limit=budget.limits.max_affine_enumeration):
        fill = dict(zip(sol.positions, assignment))
        if rs:
            cells = []
            for i in range(l1):
                for j in range(l2):
                    if (i, j) in erased:
                        cells.append(unpack_int(fill[i * l2 + j], n_c))
                    else:
                        cells.append(grid[i][j])
            seq = b"".join(cells)
        else:
            seq = bytes(fill[t] if v is None else v
                        for t, v in enumerate(values))
        if not budget.spend_candidate():
            break
        out.append(seq)
    return out


def final_filter(sequences, y, msg, params):
    """Stage 6: keep sequences satisfying every block, chunk-string, and
    parity constraint and containing y; deduplicate; sort canonically."""
    out = []
    seen = set()
    for x in sequences:
        if x in seen:
            continue
        seen.add(x)
        if is_subsequence(y, x) and encode(x, params) == msg:
            out.append(x)
    return tuple(sorted(out))


def decode(y: bytes, msg: SyncMessage, params: CodeParams,
           limits: DecoderLimits | None = None) -> DecodeReport:
    """Run the full pipeline; the true input is in final_list whenever the
    report is not truncated."""
    limits = limits if limits is not None else DecoderLimits()
    n = params.n
    if len(y) > n:
        raise ParamError(f"received sequence longer ({len(y)}) than n ({n})")
    if len(msg.m1) != params.l1 or len(msg.m2) != params.l2:
        raise ParamError("message does not match the parameter dimensions")
    k = n - len(y)
    budget = _Budget(limits)

    patterns = candidate_block_patterns(y, msg.m1, k, params, budget)
    r1 = len(patterns)

    candidates = []
    for pattern in patterns:
        yhat, vhat = fix_single_deletion_blocks(y, pattern, msg.m1, params)
        for matrix in candidate_chunk_matrices(yhat, vhat, msg.m2, params, budget):
            candidates.append((yhat, matrix))
    r3 = len(candidates)

    survivors = []
    for yhat, matrix in candidates:
        grid = build_grid(yhat, matrix, params)
        fixed = iterative_vt_repair(grid, [list(row) for row in matrix],
                                    msg.m1, msg.m2, params)
        if fixed is not None:
            survivors.append(fixed)
    r4 = len(survivors)

    H = parity_matrix(params)
    sequences = []
    for grid, matrix in survivors:
        sequences.extend(resolve_erasures(grid, matrix, msg.m3, params, H, budget))
    r5 = len(sequences)

    final = final_filter(sequences, y, msg, params)
    return DecodeReport(final, r1, r3, r4, r5, len(final),
                        budget.truncated, limits)
