"""GF(2^m) arithmetic, parity-check matrices, and erasure solving.

Two matrix flavors back the erasure-repair layer: a Vandermonde matrix over
GF(2^m) (Reed-Solomon parity checks, symbol granularity) and a seeded
random binary matrix (single-bit parity checks).  Both expose `syndrome`
and `solve_erasures`; the solver classifies the linear system over the
erased positions as unique, inconsistent, or affine.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .rng import Xorshift64Star

# Primitive polynomials with x (=2) as a primitive element; verified by the
# test suite (powers of 2 enumerate every nonzero element).
PRIMITIVE_POLYS = {
    2: 0b111,          # x^2+x+1
    3: 0b1011,         # x^3+x+1
    4: 0b10011,        # x^4+x+1
    5: 0b100101,       # x^5+x^2+1
    6: 0b1000011,      # x^6+x+1
    7: 0b10000011,     # x^7+x+1
    8: 0b100011101,    # x^8+x^4+x^3+x^2+1
}

UNIQUE = "unique"
INCONSISTENT = "inconsistent"
AFFINE = "affine"


class GF2m:
    """Field of order 2^m with log/antilog multiplication tables."""

    __slots__ = ("m", "order", "poly", "exp", "log")

    def __init__(self, m: int):
        if m not in PRIMITIVE_POLYS:
            raise ValueError(f"unsupported field degree {m}; "
                             f"supported: {sorted(PRIMITIVE_POLYS)}")
        self.m = m
        self.order = 1 << m
        self.poly = PRIMITIVE_POLYS[m]
        # exp table doubled so log[a]+log[b] indexes without a mod
        self.exp = [0] * (2 * (self.order - 1))
        self.log = [0] * self.order
        v = 1
        for i in range(self.order - 1):
            self.exp[i] = v
            self.log[v] = i
            v <<= 1
            if v & self.order:
                v ^= self.poly
        for i in range(self.order - 1, 2 * (self.order - 1)):
            self.exp[i] = self.exp[i - (self.order - 1)]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^m)")
        return self.exp[self.order - 1 - self.log[a]]

    def alpha_pow(self, e: int) -> int:
        return self.exp[e % (self.order - 1)]


@lru_cache(maxsize=None)
def get_field(m: int) -> GF2m:
    return GF2m(m)


def field_mul(m: int, a: int, b: int) -> int:
    """Product of two GF(2^m) elements (polynomial basis)."""
    return get_field(m).mul(a, b)


@dataclass(frozen=True)
class ErasureSolution:
    """Solution set of the parity equations restricted to erased positions.

    `positions` lists the erased positions (ascending).  For `unique`, the
    single assignment is in `particular`.  For `affine`, the set is
    {particular + sum(c_t * basis[t])} over all coefficient tuples from the
    field of size `alphabet`; its size is alphabet ** free_dim.
    """

    status: str
    positions: tuple
    particular: tuple | None
    basis: tuple
    alphabet: int
    _field_m: int | None = None

    @property
    def free_dim(self) -> int:
        return len(self.basis)

    def solution_count(self) -> int:
        if self.status == INCONSISTENT:
            return 0
        return self.alphabet ** self.free_dim

    def iter_solutions(self, limit: int | None = None):
        """Yield assignments (tuples aligned with `positions`), at most `limit`."""
        if self.status == INCONSISTENT:
            return
        if self.free_dim == 0:
            if limit is None or limit >= 1:
                yield self.particular
            return
        mul = get_field(self._field_m).mul if self._field_m else None
        emitted = 0
        for coeffs in product(range(self.alphabet), repeat=self.free_dim):
            if limit is not None and emitted >= limit:
                return
            vals = list(self.particular)
            for c, vec in zip(coeffs, self.basis):
                if not c:
                    continue
                for t, bv in enumerate(vec):
                    vals[t] ^= bv if mul is None else mul(c, bv)
            emitted += 1
            yield tuple(vals)


def _classify(positions, particular, basis, alphabet, field_m=None):
    if particular is None:
        return ErasureSolution(INCONSISTENT, positions, None, (), alphabet, field_m)
    status = UNIQUE if not basis else AFFINE
    return ErasureSolution(status, positions, tuple(particular), tuple(basis),
                           alphabet, field_m)


@dataclass(frozen=True)
class ReedSolomonMatrix:
    """Vandermonde parity checks over GF(2^m): entry (i, j) = alpha^(i*j)."""

    m: int
    z_sym: int
    cols: int
    rows: tuple

    def syndrome(self, symbols) -> tuple:
        if len(symbols) != self.cols:
            raise ValueError(f"expected {self.cols} symbols, got {len(symbols)}")
        f = get_field(self.m)
        exp, log = f.exp, f.log
        out = []
        for row in self.rows:
            acc = 0
            for h, v in zip(row, symbols):
                if h and v:
                    acc ^= exp[log[h] + log[v]]
            out.append(acc)
        return tuple(out)

    def solve_erasures(self, values, target) -> ErasureSolution:
        """Solve for the erased symbols.  `values` has one entry per column,
        with None marking erasures; `target` is the desired syndrome."""
        if len(values) != self.cols:
            raise ValueError(f"expected {self.cols} values, got {len(values)}")
        if len(target) != self.z_sym:
            raise ValueError(f"expected {self.z_sym} target entries")
        f = get_field(self.m)
        mul = f.mul
        positions = tuple(j for j, v in enumerate(values) if v is None)
        residual = list(target)
        for i, row in enumerate(self.rows):
            acc = 0
            for j, v in enumerate(values):
                if v:
                    acc ^= mul(row[j], v)
            residual[i] ^= acc
        mat = [[row[j] for j in positions] for row in self.rows]
        particular, basis = _gauss_field(f, mat, residual, len(positions))
        return _classify(positions, particular, basis, f.order, self.m)


def _gauss_field(f, mat, rhs, ncols):
    """Gauss-Jordan over GF(2^m).  Returns (particular, basis) or (None, ())
    when inconsistent.  `mat` and `rhs` are consumed."""
    nrows = len(mat)
    mul, inv = f.mul, f.inv
    pivot_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        rhs[r], rhs[p] = rhs[p], rhs[r]
        s = inv(mat[r][c])
        if s != 1:
            mat[r] = [mul(s, x) for x in mat[r]]
            rhs[r] = mul(s, rhs[r])
        for i in range(nrows):
            if i != r and mat[i][c]:
                fac = mat[i][c]
                rowr = mat[r]
                rowi = mat[i]
                for t in range(ncols):
                    if rowr[t]:
                        rowi[t] ^= mul(fac, rowr[t])
                rhs[i] ^= mul(fac, rhs[r])
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if rhs[i]:
            return None, ()
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    particular = [0] * ncols
    for t, c in enumerate(pivot_cols):
        particular[c] = rhs[t]
    basis = []
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        for t, c in enumerate(pivot_cols):
            vec[c] = mat[t][fc]  # char 2: negation is identity
        basis.append(tuple(vec))
    return particular, tuple(basis)


@dataclass(frozen=True)
class RandomBinaryMatrix:
    """z x n binary parity checks; rows stored as ints, bit (n-1-j) = column j.

    Entries are drawn row-major from xorshift64*, one entry per draw, taking
    the top output bit, so a (z, n, seed) triple pins the matrix exactly.
    """

    z: int
    cols: int
    seed: int
    rows: tuple

    def syndrome(self, x) -> tuple:
        """Parity bits of H*x; `x` is an int (bit n-1-j = position j) or a
        bit sequence of length n."""
        if not isinstance(x, int):
            if len(x) != self.cols:
                raise ValueError(f"expected {self.cols} bits, got {len(x)}")
            from .bits import pack_int
            x = pack_int(x)
        return tuple((row & x).bit_count() & 1 for row in self.rows)

    def solve_erasures(self, values, target) -> ErasureSolution:
        if len(values) != self.cols:
            raise ValueError(f"expected {self.cols} values, got {len(values)}")
        if len(target) != self.z:
            raise ValueError(f"expected {self.z} target bits")
        positions = tuple(j for j, v in enumerate(values) if v is None)
        known = 0
        for j, v in enumerate(values):
            if v:
                known |= 1 << (self.cols - 1 - j)
        nu = len(positions)
        # row of the subsystem: erased columns packed MSB-first, rhs appended
        sub = []
        for i, row in enumerate(self.rows):
            s = 0
            for t, j in enumerate(positions):
                s |= ((row >> (self.cols - 1 - j)) & 1) << (nu - 1 - t)
            rhs = target[i] ^ ((row & known).bit_count() & 1)
            sub.append((s << 1) | rhs)
        particular, basis = _gauss_gf2(sub, nu)
        return _classify(positions, particular, basis, 2)


def _gauss_gf2(rows, ncols):
    """Gauss-Jordan over GF(2) on rows packed as ints (rhs in bit 0, column c
    in bit ncols-c).  Returns (particular, basis) or (None, ())."""
    nrows = len(rows)
    pivot_cols = []
    r = 0
    for c in range(ncols):
        bit = 1 << (ncols - c)
        p = next((i for i in range(r, nrows) if rows[i] & bit), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(nrows):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if rows[i] & 1:
            return None, ()
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    particular = [0] * ncols
    for t, c in enumerate(pivot_cols):
        particular[c] = rows[t] & 1
    basis = []
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        fbit = 1 << (ncols - fc)
        for t, c in enumerate(pivot_cols):
            vec[c] = 1 if rows[t] & fbit else 0
        basis.append(tuple(vec))
    return particular, tuple(basis)


@lru_cache(maxsize=64)
def rs_parity_matrix(m: int, z_sym: int, cols: int) -> ReedSolomonMatrix:
    """Vandermonde matrix rows alpha^(i*j), i < z_sym, j < cols."""
    if z_sym < 1:
        raise ValueError("need at least one parity row")
    f = get_field(m)
    if cols > f.order - 1:
        raise ValueError(f"at most {f.order - 1} columns over GF(2^{m}), got {cols}")
    rows = tuple(tuple(f.alpha_pow(i * j) for j in range(cols)) for i in range(z_sym))
    return ReedSolomonMatrix(m, z_sym, cols, rows)


@lru_cache(maxsize=16)
def random_parity_matrix(z: int, n: int, seed: int) -> RandomBinaryMatrix:
    """Reproducible z x n fair-bit matrix for the given seed."""
    if z < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    rng = Xorshift64Star(seed)
    rows = []
    for _ in range(z):
        acc = 0
        for _ in range(n):
            acc = (acc << 1) | (rng.next64() >> 63)
        rows.append(acc)
    return RandomBinaryMatrix(z, n, seed, tuple(rows))
