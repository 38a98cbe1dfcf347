"""One-way synchronization from deletions.

A node holding an n-bit sequence sends a compact message (per-block and
per-chunk-string VT syndromes plus a linear-code parity syndrome); a node
holding the same sequence minus k deleted bits reconstructs the original
from that message alone.  Includes a list decoder with a brute-force
reference twin, a Monte-Carlo statistics harness, and a CLI.
"""

from .decoder import DecodeReport, DecoderLimits, decode
from .encoder import (CodeParams, MessageFormatError, ParamError, RandomBinary,
                      ReedSolomon, SyncMessage, block_of, chunk_string_of,
                      encode, message_bits, parse_message, serialize_message,
                      sync_rate)
from .kernels import BACKEND as kernel_backend
from .oracle import brute_force_decode, enumerate_supersequences
from .sim import (AggregateStats, SetupSpec, builtin_setups, export_stats,
                  get_setup, run_trials)
from .vt import InsertDecodeResult, VtSyndrome, vt_insert_decode, vt_syndrome

__version__ = "0.1.0"

__all__ = [
    "AggregateStats", "CodeParams", "DecodeReport", "DecoderLimits",
    "InsertDecodeResult", "MessageFormatError", "ParamError", "RandomBinary",
    "ReedSolomon", "SetupSpec", "SyncMessage", "VtSyndrome", "block_of",
    "brute_force_decode", "builtin_setups", "chunk_string_of", "decode",
    "encode", "enumerate_supersequences", "export_stats", "get_setup",
    "kernel_backend", "message_bits", "parse_message", "run_trials",
    "serialize_message", "sync_rate", "vt_insert_decode", "vt_syndrome",
    "__version__",
]
