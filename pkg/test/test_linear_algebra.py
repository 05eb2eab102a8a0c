"""
Linear Algebra Test - prime fields, FieldMatrix and exact elimination over F_q
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ecic_matroid_system.exceptions import InvalidArgumentError
from ecic_matroid_system.field.linear_algebra import CACHED_VECTOR_ROWS, _cached_vectors
from ecic_matroid_system.field import (
    PrimeField,
    FieldMatrix,
    FieldVector,
    rank,
    rref,
    in_column_span,
    solve_in_column_span,
    vec_mat_mul,
    weight,
    all_vectors,
)


@st.composite
def matrices(draw, max_rows: int = 4, max_cols: int = 5, min_rows: int = 0, min_cols: int = 0):
    q = draw(st.sampled_from([2, 3, 5, 7]))
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    entries = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return FieldMatrix.from_rows(PrimeField(q), entries, cols=cols)


@st.composite
def matrix_and_vector(draw):
    matrix = draw(matrices(min_rows=1))
    values = draw(st.lists(st.integers(0, matrix.field.q - 1), min_size=matrix.rows, max_size=matrix.rows))
    return matrix, FieldVector.of(matrix.field, values)


class TestPrimeField:

    @pytest.mark.parametrize("q", [2, 3, 5, 7, 11, 251])
    def test_accepts_primes(self, q):
        assert PrimeField(q).q == q

    @pytest.mark.parametrize("q", [0, 1, 4, 9, 253, 257])
    def test_rejects_non_primes_and_large_moduli(self, q):
        with pytest.raises(InvalidArgumentError):
            PrimeField(q)

    def test_inverses(self):
        field = PrimeField(7)
        for value in field.nonzero_elements():
            assert (value * field.inv(value)) % 7 == 1
        with pytest.raises(InvalidArgumentError):
            field.inv(0)

    def test_invalid_argument_is_a_value_error(self):
        with pytest.raises(ValueError):
            PrimeField(6)


class TestFieldMatrix:

    def test_entries_are_reduced_and_read_only(self):
        matrix = FieldMatrix.from_rows(PrimeField(3), [[4, -1], [3, 5]])
        assert matrix.to_lists() == [[1, 2], [0, 2]]
        with pytest.raises(ValueError):
            matrix.data[0, 0] = 2

    def test_ragged_rows_rejected(self):
        with pytest.raises(InvalidArgumentError):
            FieldMatrix.from_rows(PrimeField(2), [[1, 0], [1]])

    def test_block_assembly(self):
        field = PrimeField(2)
        left = FieldMatrix.identity(field, 2)
        right = FieldMatrix.from_rows(field, [[1], [1]])
        assert left.hstack(right).to_lists() == [[1, 0, 1], [0, 1, 1]]
        assert left.vstack(FieldMatrix.zeros(field, 1, 2)).shape == (3, 2)
        with pytest.raises(InvalidArgumentError):
            left.hstack(FieldMatrix.zeros(field, 3, 1))

    def test_field_mismatch_rejected(self):
        with pytest.raises(InvalidArgumentError):
            FieldMatrix.identity(PrimeField(2), 2).matmul(FieldMatrix.identity(PrimeField(3), 2))

    def test_elementary_operations_return_new_matrices(self):
        field = PrimeField(5)
        matrix = FieldMatrix.from_rows(field, [[1, 2], [3, 4]])
        assert matrix.swap_rows(0, 1).to_lists() == [[3, 4], [1, 2]]
        assert matrix.scale_row(0, 3).to_lists() == [[3, 1], [3, 4]]
        assert matrix.add_row_multiple(1, 0, 2).to_lists() == [[1, 2], [0, 3]]
        assert matrix.scale_column(1, 2).to_lists() == [[1, 4], [3, 3]]
        assert matrix.with_zero_row(1).to_lists() == [[1, 2], [0, 0], [3, 4]]
        assert matrix.delete_column(0).to_lists() == [[2], [4]]
        assert matrix.to_lists() == [[1, 2], [3, 4]]

    def test_equality_and_hash(self):
        field = PrimeField(3)
        a = FieldMatrix.from_rows(field, [[1, 2]])
        b = FieldMatrix.from_rows(field, [[4, 5]])
        assert a == b and hash(a) == hash(b)
        assert a != FieldMatrix.from_rows(PrimeField(5), [[1, 2]])


class TestElimination:

    def test_rref_of_identity(self):
        reduced, pivots = rref(FieldMatrix.identity(PrimeField(2), 2))
        assert pivots == (0, 1)
        assert reduced == FieldMatrix.identity(PrimeField(2), 2)

    def test_rref_over_f3(self):
        reduced, pivots = rref(FieldMatrix.from_rows(PrimeField(3), [[2, 1, 0], [1, 2, 1]]))
        assert pivots == (0, 2)
        assert reduced.to_lists() == [[1, 2, 0], [0, 0, 1]]

    def test_rank_examples(self):
        assert rank(FieldMatrix.from_rows(PrimeField(2), [[1, 1], [1, 1]])) == 1
        assert rank(FieldMatrix.from_rows(PrimeField(3), [[1, 1], [1, 2]])) == 2
        assert rank(FieldMatrix.zeros(PrimeField(2), 0, 3)) == 0
        assert rank(FieldMatrix.zeros(PrimeField(2), 3, 0)) == 0

    def test_span_and_solution(self):
        field = PrimeField(2)
        matrix = FieldMatrix.from_rows(field, [[1, 1], [1, 0], [0, 1]])
        target = FieldVector.of(field, [0, 1, 1])
        assert in_column_span(matrix, target)
        x = solve_in_column_span(matrix, target)
        assert vec_mat_mul(x, matrix.transpose()) == target
        assert not in_column_span(matrix, FieldVector.of(field, [1, 0, 0]))
        assert solve_in_column_span(matrix, FieldVector.of(field, [1, 0, 0])) is None

    def test_dimension_mismatch(self):
        field = PrimeField(2)
        with pytest.raises(InvalidArgumentError):
            in_column_span(FieldMatrix.identity(field, 2), FieldVector.zeros(field, 3))
        with pytest.raises(InvalidArgumentError):
            vec_mat_mul(FieldVector.zeros(field, 3), FieldMatrix.identity(field, 2))

    def test_weight_and_vector_listing(self):
        assert weight(FieldVector.of(PrimeField(3), [0, 2, 1, 0])) == 2
        vectors = all_vectors(3, 2)
        assert vectors.shape == (9, 2)
        assert vectors[0].tolist() == [0, 0] and vectors[1].tolist() == [0, 1] and vectors[-1].tolist() == [2, 2]

    def test_vector_tables_are_cached_only_when_small(self):
        small = all_vectors(5, 3)
        assert all_vectors(5, 3) is small
        assert not small.flags.writeable

        # 251^3 rows is past the cache bound
        assert 251 ** 2 <= CACHED_VECTOR_ROWS < 251 ** 3
        before = _cached_vectors.cache_info().currsize
        wide = all_vectors(17, 4)
        assert wide.shape == (17 ** 4, 4)
        assert all_vectors(17, 4) is not wide
        assert _cached_vectors.cache_info().currsize == before
        assert _cached_vectors.cache_info().maxsize == 16


class TestEliminationProperties:

    @given(matrices())
    @settings(max_examples=150, deadline=None)
    def test_rank_equals_rank_of_transpose(self, matrix):
        assert rank(matrix) == rank(matrix.transpose())

    @given(matrices())
    @settings(max_examples=150, deadline=None)
    def test_rref_is_idempotent(self, matrix):
        reduced, pivots = rref(matrix)
        again, pivots_again = rref(reduced)
        assert again == reduced
        assert pivots_again == pivots
        assert len(pivots) == rank(matrix)

    @given(matrices())
    @settings(max_examples=150, deadline=None)
    def test_rref_pivot_columns_are_unit_vectors(self, matrix):
        reduced, pivots = rref(matrix)
        for row, column in enumerate(pivots):
            expected = np.zeros(matrix.rows, dtype=np.int64)
            expected[row] = 1
            assert np.array_equal(reduced.data[:, column], expected)

    @given(matrix_and_vector())
    @settings(max_examples=150, deadline=None)
    def test_solution_exists_iff_in_span(self, pair):
        matrix, vector = pair
        solution = solve_in_column_span(matrix, vector)
        assert (solution is not None) == in_column_span(matrix, vector)
        if solution is not None:
            assert vec_mat_mul(solution, matrix.transpose()) == vector

    @given(matrices(min_rows=1, min_cols=1), st.data())
    @settings(max_examples=150, deadline=None)
    def test_codeword_weight_invariant_under_column_scaling(self, matrix, data):
        q = matrix.field.q
        z = FieldVector.of(matrix.field, data.draw(
            st.lists(st.integers(0, q - 1), min_size=matrix.rows, max_size=matrix.rows)))
        column = data.draw(st.integers(0, matrix.cols - 1))
        scalar = data.draw(st.integers(1, q - 1))
        scaled = matrix.scale_column(column, scalar)
        assert weight(vec_mat_mul(z, matrix)) == weight(vec_mat_mul(z, scaled))

    @given(matrices(min_rows=2))
    @settings(max_examples=100, deadline=None)
    def test_row_operations_preserve_rank(self, matrix):
        q = matrix.field.q
        changed = matrix.swap_rows(0, 1).scale_row(0, q - 1).add_row_multiple(1, 0, 1).with_zero_row()
        assert rank(changed) == rank(matrix)
