"""Bit-sequence helpers.

Throughout the package a bit sequence is a bytes object with one bit per
byte (each element 0 or 1).  That representation slices and concatenates at
C speed, hashes for dedup, and feeds the kernels directly.
"""

_TO_ASCII = bytes.maketrans(bytes([0, 1]), b"01")
_FROM_ASCII = bytes.maketrans(b"01", bytes([0, 1]))


def bits_from_str(s: str) -> bytes:
    """Parse '0100 1010'-style text (spaces and underscores ignored)."""
    cleaned = s.replace(" ", "").replace("_", "")
    if cleaned.strip("01"):
        raise ValueError(f"bit string may contain only 0/1, got {s!r}")
    return cleaned.encode("ascii").translate(_FROM_ASCII)


def bits_to_str(bits, group: int = 0) -> str:
    s = bytes(bits).translate(_TO_ASCII).decode("ascii")
    if group:
        s = " ".join(s[i:i + group] for i in range(0, len(s), group))
    return s


def validate_bits(bits) -> bytes:
    b = bytes(bits)
    if b.strip(b"\x00\x01"):
        raise ValueError("bit sequence must contain only byte values 0 and 1")
    return b


def pack_int(bits) -> int:
    """Bits (first bit most significant) -> integer."""
    if not len(bits):
        return 0
    return int(bytes(bits).translate(_TO_ASCII), 2)


def unpack_int(value: int, width: int) -> bytes:
    """Integer -> `width` bits, most significant first."""
    if value < 0 or value >> width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b").encode("ascii").translate(_FROM_ASCII)


def bits_to_bytes(bits) -> bytes:
    """Pack to a byte string MSB-first, zero-padding the final byte."""
    n = len(bits)
    if n == 0:
        return b""
    pad = -n % 8
    return (pack_int(bits) << pad).to_bytes((n + pad) // 8, "big")


def bits_from_bytes(data: bytes, nbits: int, require_zero_tail: bool = False) -> bytes:
    """Unpack the first `nbits` bits (MSB-first) of a byte string."""
    total = 8 * len(data)
    if nbits > total:
        raise ValueError(f"need {nbits} bits but input has only {total}")
    v = int.from_bytes(data, "big")
    tail = total - nbits
    if require_zero_tail and v & ((1 << tail) - 1):
        raise ValueError("nonzero padding bits after the data")
    return unpack_int(v >> tail, nbits) if nbits else b""


def is_subsequence(sub: bytes, sup: bytes) -> bool:
    pos = -1
    for ch in sub:
        pos = sup.find(ch, pos + 1)
        if pos < 0:
            return False
    return True


def delete_positions(bits: bytes, positions) -> bytes:
    """Remove the 0-based positions (any iterable of distinct indices)."""
    out = bytearray(bits)
    for p in sorted(positions, reverse=True):
        del out[p]
    return bytes(out)
