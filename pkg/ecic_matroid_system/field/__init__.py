"""
Finite field arithmetic and exact linear algebra for the ECIC Matroid System
"""

from .field_models import PrimeField, FieldMatrix, FieldVector
from .linear_algebra import (
    rank,
    rref,
    in_column_span,
    solve_in_column_span,
    vec_mat_mul,
    weight,
    all_vectors,
)

__all__ = [
    'PrimeField', 'FieldMatrix', 'FieldVector',
    'rank', 'rref', 'in_column_span', 'solve_in_column_span', 'vec_mat_mul', 'weight', 'all_vectors',
]
