"""Brute-force reference decoder for desk-size instances.

Enumerates every distinct length-(|y|+k) supersequence of y and keeps the
ones whose message matches.  Exponential; guarded so it is only usable
where exhaustive checking is intended.
"""

from math import comb

from .encoder import CodeParams, SyncMessage, encode

RAW_GUARD = 1 << 22


def _check_guard(ylen: int, k: int) -> None:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if (1 << k) * comb(ylen + k, k) > RAW_GUARD:
        raise ValueError(
            f"instance too large to enumerate ({ylen} bits + {k} insertions)")


def enumerate_supersequences(y: bytes, k: int) -> set:
    """All distinct supersequences of y that are k bits longer."""
    _check_guard(len(y), k)
    cur = {bytes(y)}
    for _ in range(k):
        nxt = set()
        for s in cur:
            for p in range(len(s) + 1):
                head, tail = s[:p], s[p:]
                nxt.add(head + b"\x00" + tail)
                nxt.add(head + b"\x01" + tail)
        cur = nxt
    return cur


def brute_force_decode(y: bytes, msg: SyncMessage, params: CodeParams) -> set:
    """Every length-n supersequence of y whose syndromes all match msg."""
    k = params.n - len(y)
    return {x for x in enumerate_supersequences(y, k) if encode(x, params) == msg}
