"""
Exact Linear Algebra over F_q
Gaussian elimination mod q on FieldMatrix values; no floating point anywhere
"""

from functools import lru_cache
from itertools import product
from typing import List, Optional, Tuple
import numpy as np

from .field_models import FieldMatrix, FieldVector
from ..exceptions import InvalidArgumentError


def rref_array(arr: np.ndarray, q: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row-echelon form of a raw integer array over F_q

    Returns a fresh array and the 0-based pivot columns in increasing order.
    Used directly by the hot loops of the verifiers and the matroid engine.
    """
    A = np.mod(np.array(arr, dtype=np.int64), q)
    rows, cols = A.shape
    r = 0
    pivots: List[int] = []
    for c in range(cols):
        if r >= rows:
            break
        nonzero = np.flatnonzero(A[r:, c])
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, q)
        A[r, :] = (A[r, :] * inv) % q
        factors = A[:, c].copy()
        factors[r] = 0
        if np.any(factors):
            A = (A - np.outer(factors, A[r, :])) % q
        pivots.append(c)
        r += 1
    return A, pivots


def rank_array(arr: np.ndarray, q: int) -> int:
    if arr.size == 0:
        return 0
    return len(rref_array(arr, q)[1])


def rref(matrix: FieldMatrix) -> Tuple[FieldMatrix, Tuple[int, ...]]:
    """
    Reduced row-echelon form over F_q

    Returns:
        (R, pivot_cols) with 0-based pivot columns in increasing order
    """
    reduced, pivots = rref_array(matrix.data, matrix.field.q)
    return FieldMatrix(matrix.field, reduced), tuple(pivots)


def rank(matrix: FieldMatrix) -> int:
    """Dimension of the row space"""
    return rank_array(matrix.data, matrix.field.q)


def _check_vector_fits(matrix: FieldMatrix, vector: FieldVector) -> None:
    if len(vector) != matrix.rows:
        raise InvalidArgumentError(
            f"Vector of length {len(vector)} does not match {matrix.rows} matrix rows"
        )
    if vector.field != matrix.field:
        raise InvalidArgumentError("Vector and matrix live over different fields")


def in_column_span(matrix: FieldMatrix, vector: FieldVector) -> bool:
    """True iff vector lies in the span of the columns of matrix"""
    _check_vector_fits(matrix, vector)
    return rank(matrix.append_column(vector)) == rank(matrix)


def solve_in_column_span(matrix: FieldMatrix, vector: FieldVector) -> Optional[FieldVector]:
    """
    One coefficient vector x with matrix @ x = vector, free variables set to zero

    Returns None when vector is outside the column span.
    """
    _check_vector_fits(matrix, vector)
    q = matrix.field.q
    cols = matrix.cols
    augmented = np.column_stack([matrix.data, vector.data]) if cols else vector.data.reshape(-1, 1)
    reduced, pivots = rref_array(augmented, q)
    if cols in pivots:
        return None
    solution = np.zeros(cols, dtype=np.int64)
    for row_idx, pc in enumerate(pivots):
        solution[pc] = reduced[row_idx, cols]
    return FieldVector(matrix.field, solution)


def vec_mat_mul(z: FieldVector, matrix: FieldMatrix) -> FieldVector:
    """Row vector times matrix, mod q"""
    if len(z) != matrix.rows:
        raise InvalidArgumentError(
            f"Vector of length {len(z)} cannot multiply a {matrix.rows}x{matrix.cols} matrix"
        )
    if z.field != matrix.field:
        raise InvalidArgumentError("Vector and matrix live over different fields")
    return FieldVector(matrix.field, z.data @ matrix.data)


def weight(vector: FieldVector) -> int:
    """Hamming weight"""
    return int(np.count_nonzero(vector.data))


# Tables with more rows than this are rebuilt on every call instead of cached
CACHED_VECTOR_ROWS = 1 << 16


def all_vectors(q: int, length: int) -> np.ndarray:
    """
    Every vector of F_q^length as the rows of a read-only array, in lexicographic order
    (first coordinate most significant)
    """
    if q ** length > CACHED_VECTOR_ROWS:
        return _build_vectors(q, length)
    return _cached_vectors(q, length)


@lru_cache(maxsize=16)
def _cached_vectors(q: int, length: int) -> np.ndarray:
    return _build_vectors(q, length)


def _build_vectors(q: int, length: int) -> np.ndarray:
    if length == 0:
        vectors = np.zeros((1, 0), dtype=np.int64)
    else:
        vectors = np.array(list(product(range(q), repeat=length)), dtype=np.int64)
    vectors.setflags(write=False)
    return vectors
