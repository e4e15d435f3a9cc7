import galois
import numpy as np

from ..config import Config
from ..errors import SingularMatrixError

GF3 = galois.GF(3)


def to_trit(value):
    """Canonical trit; signed spin labels {-1, 0, 1} are accepted (-1 -> 2)"""
    value = int(value)
    if value not in (-1, 0, 1, 2):
        raise ValueError(f"not a trit: {value}")
    return value % 3


def to_trits(values):
    return np.array([to_trit(v) for v in values], dtype=np.int8)


def lift_signed(values):
    """Map {0, 1, 2} onto the symmetric labels {0, 1, -1}"""
    arr = np.asarray(values, dtype=np.int64) % 3
    return np.where(arr == 2, -1, arr)


class GF3Matrix:
    """Immutable matrix over GF(3) backed by a galois field array"""

    __slots__ = ("_data",)

    def __init__(self, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValueError(f"GF3Matrix needs a 2-D array, got shape {arr.shape}")
        data = GF3(arr % 3)
        data.setflags(write=False)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("GF3Matrix is immutable")

    @classmethod
    def _wrap(cls, field_array):
        return cls(field_array.view(np.ndarray))

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def from_text(cls, text):
        """Parse a digit grid: rows of '0'/'1'/'2', newline separated"""
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines:
            raise ValueError("empty GF(3) matrix text")
        width = len(lines[0])
        rows = []
        for line in lines:
            if len(line) != width or set(line) - set("012"):
                raise ValueError(f"malformed GF(3) row: {line!r}")
            rows.append([int(ch) for ch in line])
        return cls(rows)

    def to_text(self):
        return "\n".join("".join(str(int(v)) for v in row) for row in self.array) + "\n"

    @property
    def field(self):
        return self._data

    @property
    def array(self):
        return self._data.view(np.ndarray).astype(np.int64)

    @property
    def rows(self):
        return self._data.shape[0]

    @property
    def cols(self):
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    @property
    def is_square(self):
        return self.rows == self.cols

    def transpose(self):
        return GF3Matrix(self.array.T)

    def is_identity(self):
        return self.is_square and np.array_equal(self.array, np.eye(self.rows, dtype=np.int64))

    def mat_vec(self, vector):
        vec = np.asarray(vector, dtype=np.int64) % 3
        if vec.shape != (self.cols,):
            raise ValueError(f"vector of length {vec.shape} does not match {self.cols} columns")
        return (self.array @ vec) % 3

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, GF3Matrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.array, other.array)

    def __hash__(self):
        return hash((self.shape, self.array.tobytes()))

    def __repr__(self):
        return f"GF3Matrix({self.rows}x{self.cols})"


def mat_mul(a, b):
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    return GF3Matrix._wrap(a.field @ b.field)


def mat_pow(m, e):
    """m^e by square-and-multiply; m^0 is the identity"""
    if not m.is_square:
        raise ValueError(f"matrix power needs a square matrix, got {m.rows}x{m.cols}")
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    result = GF3.Identity(m.rows)
    base = m.field
    while e:
        if e & 1:
            result = result @ base
        base = base @ base
        e >>= 1
    return GF3Matrix._wrap(result)


def rank(m):
    return int(np.linalg.matrix_rank(m.field.copy()))


def kernel_basis(m):
    """Basis of {v : m v = 0}, one vector per row"""
    basis = m.field.copy().null_space()
    return [np.asarray(row.view(np.ndarray), dtype=np.int64) for row in basis]


def row_reduce(m):
    return GF3Matrix._wrap(m.field.copy().row_reduce())


def determinant(m):
    if not m.is_square:
        raise ValueError("determinant needs a square matrix")
    return int(np.linalg.det(m.field.copy()))


def multiplicative_order(m, cap=Config.ORDER_CAP):
    """Smallest e >= 1 with m^e = I, or None beyond cap"""
    if not m.is_square:
        raise ValueError("multiplicative order needs a square matrix")
    if determinant(m) == 0:
        raise SingularMatrixError(f"{m!r} is singular over GF(3); no power equals the identity")
    base = m.array
    identity = np.eye(m.rows, dtype=np.int64)
    power = base.copy()
    for e in range(1, cap + 1):
        if np.array_equal(power, identity):
            return e
        power = (power @ base) % 3
    return None


def binomial_mod3(n, r):
    """C(n, r) mod 3 via Lucas' theorem on base-3 digits"""
    if r < 0 or r > n:
        return 0
    result = 1
    while n or r:
        nd, rd = n % 3, r % 3
        if rd > nd:
            return 0
        # C(nd, rd) for digits below 3
        result = (result * (1 if rd in (0, nd) else nd)) % 3
        n //= 3
        r //= 3
    return result
