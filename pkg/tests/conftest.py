import sys
from pathlib import Path

import pytest

try:
    import vtsync  # noqa: F401
except ImportError:  # running from a checkout without installing
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from vtsync import CodeParams, ReedSolomon, encode
from vtsync.bits import bits_from_str

# 60-bit worked example: chunks read as GF(16) symbols
# [4 10 5 | 0 3 14 | 7 7 1 | 0 2 4 | 4 6 8]
X60_STR = ("0100 1010 0101 0000 0011 1110 0111 0111 0001 "
           "0000 0010 0100 0100 0110 1000")
X60 = bits_from_str(X60_STR)
X60_SYMBOLS = (4, 10, 5, 0, 3, 14, 7, 7, 1, 0, 2, 4, 4, 6, 8)
M1_60 = (10, 6, 3, 4, 11)
M2_60 = (11, 20, 4)
M3_60 = (11, 6, 13, 2)


@pytest.fixture(scope="session")
def params60():
    return CodeParams(4, 5, 3, ReedSolomon(4))


@pytest.fixture(scope="session")
def x60():
    return X60


@pytest.fixture(scope="session")
def msg60(params60):
    return encode(X60, params60)
