# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""C implementations of the two kernels that dominate decoding time.

Bit sequences are byte buffers holding one bit per byte (values 0/1).
Semantics must stay bit-identical to vtsync._corepy; tests compare the
two backends exhaustively.
"""


def vt_syndrome(const unsigned char[::1] bits, Py_ssize_t start=0, Py_ssize_t stop=-1):
    """Weighted checksum of bits[start:stop]: sum of 1-based positions of the
    set bits within the window, reduced mod (window length + 1)."""
    cdef Py_ssize_t n = bits.shape[0]
    if stop < 0:
        stop = n
    if start < 0 or stop > n or start > stop:
        raise ValueError("window out of range")
    cdef unsigned long long acc = 0
    cdef unsigned long long j = 1
    cdef Py_ssize_t i
    for i in range(start, stop):
        if bits[i]:
            acc += j
        j += 1
    return acc % (<unsigned long long> (stop - start) + 1)


def vt_insert_decode(const unsigned char[::1] received, unsigned long long target):
    """Restore the unique single-bit insertion giving checksum `target`.

    Returns (restored, lo, hi): the length-(m+1) supersequence whose
    checksum mod (m+2) equals target, plus the inclusive 1-based run of
    insertion positions that all produce the same string.
    """
    cdef Py_ssize_t m = received.shape[0]
    cdef Py_ssize_t L = m + 1
    cdef unsigned long long modulus = <unsigned long long> L + 1
    cdef unsigned long long cur = 0, w = 0
    cdef Py_ssize_t i
    for i in range(m):
        if received[i]:
            cur += <unsigned long long> (i + 1)
            w += 1
    cdef unsigned long long delta = (target % modulus + modulus - cur % modulus) % modulus
    cdef int bit
    cdef Py_ssize_t slot
    cdef unsigned long long cnt = 0
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
        while cnt < delta - w - 1:
            if not received[slot]:
                cnt += 1
            slot += 1
    out = bytearray(L)
    cdef unsigned char[::1] ob = out
    for i in range(slot):
        ob[i] = received[i]
    ob[slot] = <unsigned char> bit
    for i in range(slot, m):
        ob[i + 1] = received[i]
    cdef Py_ssize_t lo = slot, hi = slot
    while lo > 0 and ob[lo - 1] == <unsigned char> bit:
        lo -= 1
    while hi + 1 < L and ob[hi + 1] == <unsigned char> bit:
        hi += 1
    return bytes(out), lo + 1, hi + 1
