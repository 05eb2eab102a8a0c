"""
Field Data Models
Prime fields F_q and immutable dense matrices / vectors over them
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, List
import numpy as np

from ..config import settings
from ..exceptions import InvalidArgumentError


def _is_prime(value: int) -> bool:
    if value < 2:
        return False
    divisor = 2
    while divisor * divisor <= value:
        if value % divisor == 0:
            return False
        divisor += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """Finite field F_q for a prime q, 2 <= q <= 251"""
    q: int

    def __post_init__(self):
        if not isinstance(self.q, (int, np.integer)) or isinstance(self.q, bool):
            raise InvalidArgumentError(f"Field modulus must be an integer, got {self.q!r}")
        if not _is_prime(int(self.q)) or self.q > settings.MAX_FIELD_MODULUS:
            raise InvalidArgumentError(
                f"Field modulus must be a prime between 2 and {settings.MAX_FIELD_MODULUS}, got {self.q}"
            )
        object.__setattr__(self, 'q', int(self.q))

    def reduce(self, value: int) -> int:
        return int(value) % self.q

    def inv(self, value: int) -> int:
        """Multiplicative inverse of a nonzero element"""
        value = self.reduce(value)
        if value == 0:
            raise InvalidArgumentError("Zero has no multiplicative inverse")
        return pow(value, -1, self.q)

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)


def _as_array(data, ndim: int, q: int) -> np.ndarray:
    arr = np.array(data, dtype=np.int64)
    if arr.size == 0 and arr.ndim < ndim:
        arr = arr.reshape((0,) * ndim)
    if arr.ndim != ndim:
        raise InvalidArgumentError(f"Expected a {ndim}-dimensional array, got shape {arr.shape}")
    arr = np.mod(arr, q)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FieldVector:
    """Vector over F_q; entries are reduced mod q and read-only"""
    field: PrimeField
    data: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'data', _as_array(self.data, 1, self.field.q))

    @classmethod
    def of(cls, field: PrimeField, values: Iterable[int]) -> 'FieldVector':
        return cls(field, np.array(list(values), dtype=np.int64))

    @classmethod
    def zeros(cls, field: PrimeField, length: int) -> 'FieldVector':
        return cls(field, np.zeros(length, dtype=np.int64))

    @classmethod
    def unit(cls, field: PrimeField, length: int, position: int) -> 'FieldVector':
        """Unit vector with a 1 at 0-based position"""
        values = np.zeros(length, dtype=np.int64)
        values[position] = 1
        return cls(field, values)

    def __len__(self) -> int:
        return int(self.data.shape[0])

    def __getitem__(self, index: int) -> int:
        return int(self.data[index])

    @property
    def entries(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.data)

    def support(self) -> Tuple[int, ...]:
        """0-based positions of nonzero entries"""
        return tuple(int(i) for i in np.flatnonzero(self.data))

    def __add__(self, other: 'FieldVector') -> 'FieldVector':
        self._check_compatible(other)
        return FieldVector(self.field, self.data + other.data)

    def __sub__(self, other: 'FieldVector') -> 'FieldVector':
        self._check_compatible(other)
        return FieldVector(self.field, self.data - other.data)

    def scale(self, scalar: int) -> 'FieldVector':
        return FieldVector(self.field, self.data * int(scalar))

    def _check_compatible(self, other: 'FieldVector') -> None:
        if self.field != other.field or len(self) != len(other):
            raise InvalidArgumentError("Vectors must share field and length")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldVector):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.field.q, self.data.tobytes(), len(self)))

    def __repr__(self) -> str:
        return f"FieldVector(q={self.field.q}, {self.entries})"


@dataclass(frozen=True, eq=False)
class FieldMatrix:
    """Dense matrix over F_q; entries are reduced mod q and read-only"""
    field: PrimeField
    data: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'data', _as_array(self.data, 2, self.field.q))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_rows(cls, field: PrimeField, rows: Sequence[Sequence[int]], cols: int = None) -> 'FieldMatrix':
        rows = [list(r) for r in rows]
        if not rows:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise InvalidArgumentError(f"Ragged matrix rows: lengths {sorted(widths)}")
        return cls(field, np.array(rows, dtype=np.int64).reshape(len(rows), widths.pop()))

    @classmethod
    def identity(cls, field: PrimeField, size: int) -> 'FieldMatrix':
        return cls(field, np.eye(size, dtype=np.int64))

    @classmethod
    def zeros(cls, field: PrimeField, rows: int, cols: int) -> 'FieldMatrix':
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def from_columns(cls, field: PrimeField, columns: Sequence[FieldVector], rows: int = 0) -> 'FieldMatrix':
        if not columns:
            return cls.zeros(field, rows, 0)
        return cls(field, np.column_stack([c.data for c in columns]))

    # ------------------------------------------------------------------
    # Shape and access
    # ------------------------------------------------------------------
    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Tuple[int, ...]:
        """Row-major entries"""
        return tuple(int(v) for v in self.data.reshape(-1))

    def to_lists(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.data]

    def entry(self, row: int, col: int) -> int:
        return int(self.data[row, col])

    def row(self, index: int) -> FieldVector:
        return FieldVector(self.field, self.data[index, :])

    def column(self, index: int) -> FieldVector:
        return FieldVector(self.field, self.data[:, index])

    def is_zero_column(self, index: int) -> bool:
        return not np.any(self.data[:, index])

    def select_rows(self, indices: Sequence[int]) -> 'FieldMatrix':
        idx = list(indices)
        if not idx:
            return FieldMatrix.zeros(self.field, 0, self.cols)
        return FieldMatrix(self.field, self.data[idx, :])

    def select_columns(self, indices: Sequence[int]) -> 'FieldMatrix':
        idx = list(indices)
        if not idx:
            return FieldMatrix.zeros(self.field, self.rows, 0)
        return FieldMatrix(self.field, self.data[:, idx])

    def transpose(self) -> 'FieldMatrix':
        return FieldMatrix(self.field, self.data.T)

    # ------------------------------------------------------------------
    # Block assembly
    # ------------------------------------------------------------------
    def hstack(self, other: 'FieldMatrix') -> 'FieldMatrix':
        self._check_field(other)
        if self.rows != other.rows:
            raise InvalidArgumentError(f"Cannot place {self.shape} beside {other.shape}")
        return FieldMatrix(self.field, np.hstack([self.data, other.data]))

    def vstack(self, other: 'FieldMatrix') -> 'FieldMatrix':
        self._check_field(other)
        if self.cols != other.cols:
            raise InvalidArgumentError(f"Cannot stack {self.shape} on {other.shape}")
        return FieldMatrix(self.field, np.vstack([self.data, other.data]))

    def append_column(self, vector: FieldVector) -> 'FieldMatrix':
        if len(vector) != self.rows:
            raise InvalidArgumentError(f"Column of length {len(vector)} does not fit {self.rows} rows")
        return FieldMatrix(self.field, np.column_stack([self.data, vector.data]))

    # ------------------------------------------------------------------
    # Elementary operations (each returns a new matrix)
    # ------------------------------------------------------------------
    def swap_rows(self, a: int, b: int) -> 'FieldMatrix':
        arr = self.data.copy()
        arr[[a, b]] = arr[[b, a]]
        return FieldMatrix(self.field, arr)

    def scale_row(self, index: int, scalar: int) -> 'FieldMatrix':
        arr = self.data.copy()
        arr[index, :] = arr[index, :] * int(scalar)
        return FieldMatrix(self.field, arr)

    def add_row_multiple(self, target: int, source: int, scalar: int) -> 'FieldMatrix':
        """Replace row target by row target + scalar * row source"""
        arr = self.data.copy()
        arr[target, :] = arr[target, :] + int(scalar) * arr[source, :]
        return FieldMatrix(self.field, arr)

    def scale_column(self, index: int, scalar: int) -> 'FieldMatrix':
        arr = self.data.copy()
        arr[:, index] = arr[:, index] * int(scalar)
        return FieldMatrix(self.field, arr)

    def delete_row(self, index: int) -> 'FieldMatrix':
        return FieldMatrix(self.field, np.delete(self.data, index, axis=0).reshape(self.rows - 1, self.cols))

    def delete_column(self, index: int) -> 'FieldMatrix':
        return FieldMatrix(self.field, np.delete(self.data, index, axis=1).reshape(self.rows, self.cols - 1))

    def with_zero_row(self, position: int = None) -> 'FieldMatrix':
        position = self.rows if position is None else position
        arr = np.insert(self.data, position, 0, axis=0).reshape(self.rows + 1, self.cols)
        return FieldMatrix(self.field, arr)

    def matmul(self, other: 'FieldMatrix') -> 'FieldMatrix':
        self._check_field(other)
        if self.cols != other.rows:
            raise InvalidArgumentError(f"Cannot multiply {self.shape} by {other.shape}")
        return FieldMatrix(self.field, self.data @ other.data)

    def _check_field(self, other: 'FieldMatrix') -> None:
        if self.field != other.field:
            raise InvalidArgumentError(f"Field mismatch: F_{self.field.q} vs F_{other.field.q}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.field.q, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FieldMatrix(q={self.field.q}, {self.to_lists()})"
