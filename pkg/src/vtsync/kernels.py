"""Backend selection for the hot kernels.

The compiled extension (vtsync._core) is preferred; the pure-Python twin
(vtsync._corepy) is used when the extension is unavailable or when the
environment variable VTSYNC_NO_EXT=1 forces it.  `set_backend` rebinds the
module-level functions; callers that want to honor a switch mid-process
should look the functions up through this module (the library does).
"""

import os

from . import _corepy

_BACKENDS = {"python": _corepy}
try:
    if os.environ.get("VTSYNC_NO_EXT") != "1":
        from . import _core

        _BACKENDS["c"] = _core
except ImportError:
    pass

BACKEND = "c" if "c" in _BACKENDS else "python"


def available_backends():
    return tuple(sorted(_BACKENDS))


def set_backend(name):
    """Switch the active kernel backend ('c' or 'python').  Test/bench hook;
    not thread-safe against concurrent decodes."""
    global BACKEND, vt_syndrome, vt_insert_decode
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    mod = _BACKENDS[name]
    BACKEND = name
    vt_syndrome = mod.vt_syndrome
    vt_insert_decode = mod.vt_insert_decode


vt_syndrome = _BACKENDS[BACKEND].vt_syndrome
vt_insert_decode = _BACKENDS[BACKEND].vt_insert_decode
