"""Public VT-syndrome surface: checksum of a bit sequence and single-deletion
restoration.

These wrap the selected kernel backend with validated, typed results.  The
internal hot paths call the kernels directly.
"""

from typing import NamedTuple

from . import kernels
from .bits import validate_bits


class VtSyndrome(NamedTuple):
    value: int
    modulus: int


class InsertDecodeResult(NamedTuple):
    restored: bytes
    positions: range  # 1-based insertion positions, all yielding `restored`


def vt_syndrome(bits) -> VtSyndrome:
    """Checksum sum(j * w_j for 1-based j) mod (len + 1).  Empty input gives
    VtSyndrome(0, 1)."""
    b = validate_bits(bits)
    return VtSyndrome(kernels.vt_syndrome(b), len(b) + 1)


def vt_insert_decode(received, target) -> InsertDecodeResult:
    """Restore the unique 1-bit-longer supersequence of `received` whose
    checksum equals `target`.

    `target` is a VtSyndrome (its modulus must equal len(received) + 2) or a
    plain value in [0, len(received) + 1].  The returned positions are the
    full run of insertion indices producing the same string.
    """
    b = validate_bits(received)
    modulus = len(b) + 2
    if isinstance(target, VtSyndrome):
        if target.modulus != modulus:
            raise ValueError(f"target modulus {target.modulus} does not match "
                             f"restored length + 1 = {modulus}")
        target = target.value
    if not 0 <= target < modulus:
        raise ValueError(f"target {target} outside 0..{modulus - 1}")
    restored, lo, hi = kernels.vt_insert_decode(b, target)
    return InsertDecodeResult(restored, range(lo, hi + 1))
