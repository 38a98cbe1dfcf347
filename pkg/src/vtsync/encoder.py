"""Code parameters, message construction, and the message wire format.

A length-n input is cut into l1 blocks of n_b = n/l1 bits; each block is cut
into l2 chunks of n_c bits.  The j-th chunks of all blocks, concatenated in
block order, form the j-th chunk-string.  The transmitted message is
  M1: one VT syndrome per block,
  M2: one VT syndrome per chunk-string,
  M3: the parity syndrome of the whole input under a linear code
      (Reed-Solomon over GF(2^n_c) with one symbol per chunk, or a seeded
      random binary matrix over the raw bits).
"""

from dataclasses import dataclass
from math import ceil

from . import kernels
from .bits import pack_int
from .gf import random_parity_matrix, rs_parity_matrix


class ParamError(ValueError):
    """Invalid code parameters or input dimensions."""


class MessageFormatError(ValueError):
    """Malformed serialized message."""


@dataclass(frozen=True)
class ReedSolomon:
    """Reed-Solomon parity checks: z_sym symbols over GF(2^n_c)."""
    z_sym: int


@dataclass(frozen=True)
class RandomBinary:
    """z random single-bit parity checks drawn from the given seed."""
    z: int
    seed: int = 0


@dataclass(frozen=True)
class CodeParams:
    n_c: int
    l1: int
    l2: int
    code: "ReedSolomon | RandomBinary"

    def __post_init__(self):
        if self.n_c < 1 or self.l1 < 1 or self.l2 < 1:
            raise ParamError("n_c, l1, l2 must all be positive")
        if isinstance(self.code, ReedSolomon):
            if self.code.z_sym < 1:
                raise ParamError("need at least one parity symbol")
            if self.l1 * self.l2 > (1 << self.n_c) - 1:
                raise ParamError(
                    f"Reed-Solomon needs l1*l2 <= 2^n_c - 1; "
                    f"got {self.l1 * self.l2} chunks over GF(2^{self.n_c})")
        elif isinstance(self.code, RandomBinary):
            if self.code.z < 1:
                raise ParamError("need at least one parity bit")
            if not 0 <= self.code.seed < (1 << 64):
                raise ParamError("seed must fit in 64 bits")
        else:
            raise ParamError(f"unknown code spec {self.code!r}")

    @property
    def n(self) -> int:
        return self.n_c * self.l1 * self.l2

    @property
    def n_b(self) -> int:
        return self.n_c * self.l2

    @property
    def z(self) -> int:
        """Total parity bits."""
        if isinstance(self.code, ReedSolomon):
            return self.code.z_sym * self.n_c
        return self.code.z

    @property
    def m1_width(self) -> int:
        """Bits per block syndrome (values 0..n_b)."""
        return self.n_b.bit_length()

    @property
    def m2_width(self) -> int:
        """Bits per chunk-string syndrome (values 0..n_c*l1)."""
        return (self.n_c * self.l1).bit_length()


@dataclass(frozen=True)
class SyncMessage:
    m1: tuple
    m2: tuple
    m3: tuple


def parity_matrix(params: CodeParams):
    if isinstance(params.code, ReedSolomon):
        return rs_parity_matrix(params.n_c, params.code.z_sym, params.l1 * params.l2)
    return random_parity_matrix(params.code.z, params.n, params.code.seed)


def block_of(x: bytes, i: int, params: CodeParams) -> bytes:
    """The i-th (1-based) block: n_b contiguous bits."""
    if not 1 <= i <= params.l1:
        raise ParamError(f"block index {i} outside 1..{params.l1}")
    n_b = params.n_b
    return x[(i - 1) * n_b: i * n_b]


def chunk_string_of(x: bytes, j: int, params: CodeParams) -> bytes:
    """The j-th (1-based) chunk-string: the j-th chunk of every block."""
    if not 1 <= j <= params.l2:
        raise ParamError(f"chunk-string index {j} outside 1..{params.l2}")
    n_b, n_c = params.n_b, params.n_c
    lo = (j - 1) * n_c
    return b"".join(x[i * n_b + lo: i * n_b + lo + n_c] for i in range(params.l1))


def _check_input(x: bytes, params: CodeParams) -> None:
    if len(x) != params.n:
        raise ParamError(f"input must be exactly {params.n} bits, got {len(x)}")


def symbols_of(x: bytes, params: CodeParams) -> tuple:
    """Chunks as GF(2^n_c) symbols in block order, first bit most significant."""
    n_c = params.n_c
    return tuple(pack_int(x[p: p + n_c]) for p in range(0, len(x), n_c))


def encode(x: bytes, params: CodeParams) -> SyncMessage:
    """Build the three-part message for input x (length must equal params.n)."""
    _check_input(x, params)
    syn = kernels.vt_syndrome
    n_b = params.n_b
    m1 = tuple(syn(x, i * n_b, (i + 1) * n_b) for i in range(params.l1))
    m2 = tuple(syn(chunk_string_of(x, j, params)) for j in range(1, params.l2 + 1))
    H = parity_matrix(params)
    if isinstance(params.code, ReedSolomon):
        m3 = H.syndrome(symbols_of(x, params))
    else:
        m3 = H.syndrome(pack_int(x))
    return SyncMessage(m1, m2, m3)


def message_bits(params: CodeParams) -> int:
    """Exact payload size: l1 block syndromes, l2 chunk-string syndromes,
    z parity bits."""
    return params.l1 * params.m1_width + params.l2 * params.m2_width + params.z


def sync_rate(params: CodeParams) -> float:
    """Message bits normalized by the input length."""
    n_c, l1, l2 = params.n_c, params.l1, params.l2
    return (params.z / params.n
            + (n_c * l2).bit_length() / (n_c * l2)
            + (n_c * l1).bit_length() / (n_c * l1))


MAGIC = b"MLSY"
VERSION = 1
_KIND_RS = 0
_KIND_RANDOM = 1
_HEADER_LEN = 25


def serialize_message(msg: SyncMessage, params: CodeParams) -> bytes:
    """Header (magic, version, dimensions, code kind/z/seed) followed by the
    fixed-width syndrome fields MSB-first, zero-padded to a byte boundary."""
    if isinstance(params.code, ReedSolomon):
        kind, seed = _KIND_RS, 0
        if len(msg.m3) != params.code.z_sym:
            raise ParamError("M3 length does not match the parity symbol count")
    else:
        kind, seed = _KIND_RANDOM, params.code.seed
        if len(msg.m3) != params.code.z:
            raise ParamError("M3 length does not match the parity bit count")
    if len(msg.m1) != params.l1 or len(msg.m2) != params.l2:
        raise ParamError("message does not match the parameter dimensions")
    header = (MAGIC + bytes([VERSION])
              + params.n.to_bytes(4, "big") + bytes([params.n_c])
              + params.l1.to_bytes(2, "big") + params.l2.to_bytes(2, "big")
              + bytes([kind]) + params.z.to_bytes(2, "big")
              + seed.to_bytes(8, "big"))
    acc = 0
    nbits = 0

    def put(value, width, upper):
        nonlocal acc, nbits
        if not 0 <= value <= upper:
            raise ParamError(f"field value {value} outside 0..{upper}")
        acc = (acc << width) | value
        nbits += width

    for v in msg.m1:
        put(v, params.m1_width, params.n_b)
    for v in msg.m2:
        put(v, params.m2_width, params.n_c * params.l1)
    if kind == _KIND_RS:
        for v in msg.m3:
            put(v, params.n_c, (1 << params.n_c) - 1)
    else:
        for v in msg.m3:
            put(v, 1, 1)
    pad = -nbits % 8
    payload = (acc << pad).to_bytes((nbits + pad) // 8, "big") if nbits else b""
    return header + payload


def parse_message(data: bytes) -> tuple:
    """Inverse of serialize_message; returns (SyncMessage, CodeParams)."""
    if len(data) < _HEADER_LEN:
        raise MessageFormatError("truncated header")
    if data[:4] != MAGIC:
        raise MessageFormatError("bad magic; not a sync message")
    if data[4] != VERSION:
        raise MessageFormatError(f"unsupported version {data[4]}")
    n = int.from_bytes(data[5:9], "big")
    n_c = data[9]
    l1 = int.from_bytes(data[10:12], "big")
    l2 = int.from_bytes(data[12:14], "big")
    kind = data[14]
    z = int.from_bytes(data[15:17], "big")
    seed = int.from_bytes(data[17:25], "big")
    if kind == _KIND_RS:
        if seed != 0:
            raise MessageFormatError("nonzero seed with Reed-Solomon code kind")
        if n_c == 0 or z % n_c:
            raise MessageFormatError("parity bits not a whole symbol count")
        code = ReedSolomon(z // n_c)
    elif kind == _KIND_RANDOM:
        code = RandomBinary(z, seed)
    else:
        raise MessageFormatError(f"unknown code kind {kind}")
    try:
        params = CodeParams(n_c, l1, l2, code)
    except ParamError as exc:
        raise MessageFormatError(f"invalid parameters: {exc}") from exc
    if params.n != n:
        raise MessageFormatError(
            f"header length {n} does not match n_c*l1*l2 = {params.n}")
    nbits = message_bits(params)
    expect = _HEADER_LEN + ceil(nbits / 8)
    if len(data) < expect:
        raise MessageFormatError("truncated payload")
    if len(data) > expect:
        raise MessageFormatError("trailing bytes after payload")
    payload = data[_HEADER_LEN:]
    acc = int.from_bytes(payload, "big")
    total = 8 * len(payload)
    pos = 0

    def take(width, upper, what):
        nonlocal pos
        v = (acc >> (total - pos - width)) & ((1 << width) - 1)
        pos += width
        if v > upper:
            raise MessageFormatError(f"{what} value {v} outside 0..{upper}")
        return v

    m1 = tuple(take(params.m1_width, params.n_b, "block syndrome")
               for _ in range(l1))
    m2 = tuple(take(params.m2_width, params.n_c * l1, "chunk-string syndrome")
               for _ in range(l2))
    if kind == _KIND_RS:
        m3 = tuple(take(n_c, (1 << n_c) - 1, "parity symbol")
                   for _ in range(z // n_c))
    else:
        m3 = tuple(take(1, 1, "parity bit") for _ in range(z))
    if total > pos and acc & ((1 << (total - pos)) - 1):
        raise MessageFormatError("nonzero padding bits")
    return SyncMessage(m1, m2, m3), params
