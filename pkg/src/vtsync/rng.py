"""Self-contained deterministic randomness.

Everything random in this package (parity-matrix entries, simulated inputs,
deletion positions) flows through xorshift64* so that results are
reproducible bit-for-bit regardless of interpreter version.  Constants are
the standard ones: Marsaglia's 12/25/27 shift triple with the 2685821657736338717
output multiplier, seeded through the splitmix64 finalizer.
"""

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """splitmix64 finalizer; a 64-bit bijection used to scramble seeds."""
    x = (x + _GOLDEN) & _M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _M64
    return x ^ (x >> 31)


class Xorshift64Star:
    """xorshift64* stream; state is never zero."""

    __slots__ = ("_s",)

    def __init__(self, seed: int):
        self._s = mix64(seed & _M64) or _GOLDEN

    def next64(self) -> int:
        x = self._s
        x ^= x >> 12
        x ^= (x << 25) & _M64
        x ^= x >> 27
        self._s = x
        return (x * 0x2545F4914F6CDD1D) & _M64

    def next_bit(self) -> int:
        return self.next64() >> 63

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by top-bits rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        shift = 64 - (bound - 1).bit_length() if bound > 1 else 64
        while True:
            r = self.next64() >> shift
            if r < bound:
                return r

    def randbits(self, nbits: int) -> int:
        """Uniform nbits-bit integer."""
        v = 0
        for _ in range((nbits + 63) // 64):
            v = (v << 64) | self.next64()
        return v >> (-nbits % 64)

    def sample_positions(self, n: int, k: int) -> list:
        """Uniform k-subset of range(n) (Floyd's algorithm), sorted."""
        if not 0 <= k <= n:
            raise ValueError("need 0 <= k <= n")
        chosen = set()
        for i in range(n - k, n):
            j = self.randbelow(i + 1)
            chosen.add(i if j in chosen else j)
        return sorted(chosen)


def trial_rng(master_seed: int, index: int) -> Xorshift64Star:
    """Independent per-trial stream; a pure function of (master seed, index)."""
    return Xorshift64Star(mix64(master_seed & _M64) ^ mix64((index + 1) * _GOLDEN & _M64))
