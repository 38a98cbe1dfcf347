"""Pure-Python fallback for the hot kernels (see _core.pyx for the C twin).

Bit sequences are bytes-like buffers holding one bit per byte (values 0/1).
Both backends must return bit-identical results.
"""

from itertools import compress


def vt_syndrome(bits, start=0, stop=None):
    """Weighted checksum of bits[start:stop]: sum of 1-based positions of the
    set bits within the window, reduced mod (window length + 1)."""
    n = len(bits)
    if stop is None:
        stop = n
    if start < 0 or stop > n or start > stop:
        raise ValueError("window out of range")
    window = bits[start:stop]
    return sum(compress(range(1, len(window) + 1), window)) % (len(window) + 1)


def vt_insert_decode(received, target):
    """Restore the unique single-bit insertion giving checksum `target`.

    Returns (restored, lo, hi): the length-(m+1) supersequence whose
    checksum mod (m+2) equals target, plus the inclusive 1-based run of
    insertion positions that all produce the same string.
    """
    m = len(received)
    L = m + 1
    modulus = L + 1
    w = received.count(1)
    cur = sum(compress(range(1, m + 1), received))
    delta = (target - cur) % modulus
    cnt = 0
    if delta <= w:
        # a 0 was dropped with exactly `delta` ones to its right
        bit = 0
        slot = m
        while cnt < delta:
            slot -= 1
            if received[slot]:
                cnt += 1
    else:
        # a 1 was dropped with exactly (delta - w - 1) zeros to its left
        bit = 1
        slot = 0
        need = delta - w - 1
        while cnt < need:
            if not received[slot]:
                cnt += 1
            slot += 1
    out = bytes(received[:slot]) + bytes([bit]) + bytes(received[slot:])
    lo = hi = slot
    while lo > 0 and out[lo - 1] == bit:
        lo -= 1
    while hi + 1 < L and out[hi + 1] == bit:
        hi += 1
    return out, lo + 1, hi + 1
