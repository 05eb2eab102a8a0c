"""
Vector Matroid Test - rank oracle, closure, bases, contraction and the independence axioms
"""

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ecic_matroid_system.bridge import CertificateBuilder
from ecic_matroid_system.exceptions import (
    DependentSetError,
    GroundSetTooLargeError,
    InvalidArgumentError,
    UnknownLabelError,
)
from ecic_matroid_system.field import FieldMatrix, PrimeField, rank
from ecic_matroid_system.matroid import RepresentationPerturber, VectorMatroid, check_axioms


def random_matroid(rng: np.random.Generator, max_rows: int = 4, max_cols: int = 8) -> VectorMatroid:
    q = int(rng.choice([2, 3, 5]))
    rows = int(rng.integers(1, max_rows + 1))
    cols = int(rng.integers(1, max_cols + 1))
    data = rng.integers(0, q, size=(rows, cols))
    labels = tuple(int(v) for v in rng.permutation(np.arange(1, 3 * cols + 1))[:cols])
    return VectorMatroid(FieldMatrix(PrimeField(q), data), labels)


def independent_sets(matroid: VectorMatroid):
    labels = matroid.labels
    return {frozenset(s) for k in range(len(labels) + 1) for s in combinations(labels, k)
            if matroid.is_independent(s)}


@pytest.fixture
def weighted_three_matroid(weighted_three):
    return CertificateBuilder().code_to_certificate(weighted_three.problem, weighted_three.code).matroid


@st.composite
def matroids(draw):
    q = draw(st.sampled_from([2, 3]))
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 7))
    entries = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols),
                            min_size=rows, max_size=rows))
    return VectorMatroid(FieldMatrix.from_rows(PrimeField(q), entries), tuple(range(1, cols + 1)))


class TestRankOracle:

    def test_weighted_three_ranks(self, weighted_three_matroid):
        assert weighted_three_matroid.rep.shape == (10, 17)
        assert weighted_three_matroid.rank_of(weighted_three_matroid.ground_set) == 10
        assert weighted_three_matroid.rank_of(set()) == 0
        assert weighted_three_matroid.rank_of({1, 2, 3}) == 3
        assert weighted_three_matroid.is_independent(set(range(1, 11)))

    def test_weighted_three_closure_of_basis_tail(self, weighted_three_matroid):
        tail = frozenset(range(4, 11))
        assert weighted_three_matroid.closure(tail) == tail
        assert weighted_three_matroid.closure(weighted_three_matroid.ground_set) == weighted_three_matroid.ground_set

    def test_closure_in_identity_matroid(self):
        matroid = VectorMatroid(FieldMatrix.identity(PrimeField(2), 3), (1, 2, 3))
        assert matroid.closure({1}) == frozenset({1})

    def test_zero_column_is_a_loop(self):
        matroid = VectorMatroid(FieldMatrix.from_rows(PrimeField(3), [[1, 0], [0, 0]]), (5, 9))
        assert not matroid.is_independent({9})
        assert not matroid.is_independent({5, 9})
        assert matroid.is_independent(set())

    def test_unknown_label(self):
        matroid = VectorMatroid(FieldMatrix.identity(PrimeField(2), 2), (1, 2))
        with pytest.raises(UnknownLabelError):
            matroid.rank_of({3})
        with pytest.raises(KeyError):
            matroid.closure({7})

    def test_labels_must_match_columns(self):
        with pytest.raises(InvalidArgumentError):
            VectorMatroid(FieldMatrix.identity(PrimeField(2), 2), (1,))
        with pytest.raises(InvalidArgumentError):
            VectorMatroid(FieldMatrix.identity(PrimeField(2), 2), (1, 1))

    def test_extend_to_basis(self, weighted_three_matroid):
        basis = weighted_three_matroid.extend_to_basis({1, 2, 3})
        assert basis == frozenset(range(1, 11))
        assert weighted_three_matroid.extend_to_basis({11, 12}) >= {11, 12}
        assert len(weighted_three_matroid.extend_to_basis({11, 12})) == 10

    def test_extend_dependent_set(self):
        matroid = VectorMatroid(FieldMatrix.from_rows(PrimeField(2), [[1, 1], [0, 0]]), (1, 2))
        with pytest.raises(DependentSetError):
            matroid.extend_to_basis({1, 2})

    def test_bases_containing(self):
        matroid = VectorMatroid(FieldMatrix.from_rows(PrimeField(2), [[1, 0, 1], [0, 1, 1]]), (1, 2, 3))
        assert matroid.bases_containing({1}) == [frozenset({1, 2}), frozenset({1, 3})]


class TestContraction:

    def test_all_ones_receiver1_pattern12(self, all_ones):
        matroid = CertificateBuilder().code_to_certificate(all_ones.problem, all_ones.code).matroid
        minor = matroid.contract({2, 3, 6})
        assert minor.labels == (1, 4, 5, 7, 8, 9)
        expected = [[1, 0, 0, 1, 1, 1], [0, 1, 0, 1, 0, 0], [0, 0, 1, 0, 1, 0]]
        assert minor.rep.to_lists() == expected

        stacked = minor.rep.vstack(FieldMatrix.from_rows(PrimeField(2), expected))
        assert rank(stacked) == rank(minor.rep) == 3

    def test_contracting_a_loop_only_deletes_it(self):
        matroid = VectorMatroid(FieldMatrix.from_rows(PrimeField(2), [[1, 0, 1], [0, 0, 1]]), (1, 2, 3))
        minor = matroid.contract({2})
        assert minor.labels == (1, 3)
        assert minor.rep.to_lists() == [[1, 1], [0, 1]]

    def test_contract_unknown_label(self):
        matroid = VectorMatroid(FieldMatrix.identity(PrimeField(2), 2), (1, 2))
        with pytest.raises(UnknownLabelError):
            matroid.contract({4})

    def test_contraction_matches_rank_formula(self):
        rng = np.random.default_rng(23)
        for _ in range(60):
            matroid = random_matroid(rng, max_cols=10)
            labels = list(matroid.labels)
            contracted = {label for label in labels if rng.random() < 0.4}
            minor = matroid.contract(contracted)
            assert minor.ground_set == matroid.ground_set - contracted
            base = matroid.rank_of(contracted)
            for k in range(len(minor.labels) + 1):
                for subset in combinations(minor.labels, k):
                    assert minor.rank_of(subset) == matroid.rank_of(set(subset) | contracted) - base

    def test_contracted_matroids_satisfy_axioms(self):
        rng = np.random.default_rng(29)
        for _ in range(50):
            matroid = random_matroid(rng, max_cols=10)
            contracted = {label for label in matroid.labels if rng.random() < 0.3}
            assert check_axioms(matroid.contract(contracted))

    def test_contraction_order_does_not_matter(self):
        rng = np.random.default_rng(31)
        for _ in range(30):
            matroid = random_matroid(rng)
            labels = list(matroid.labels)
            first, second = labels[: len(labels) // 2], labels[len(labels) // 2:][:1]
            stepwise = matroid.contract(first).contract(second)
            at_once = matroid.contract(set(first) | set(second))
            assert independent_sets(stepwise) == independent_sets(at_once)


class TestAxiomsAndPerturbation:

    def test_axiom_check_refuses_large_ground_sets(self, weighted_three_matroid):
        with pytest.raises(GroundSetTooLargeError):
            check_axioms(weighted_three_matroid, limit=12)

    @given(matroids())
    @settings(max_examples=60, deadline=None)
    def test_vector_matroids_satisfy_axioms(self, matroid):
        assert check_axioms(matroid)

    @given(matroids(), st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_rank_axioms(self, matroid, seed):
        rng = np.random.default_rng(seed)
        labels = matroid.labels
        x = {label for label in labels if rng.random() < 0.5}
        y = {label for label in labels if rng.random() < 0.5}
        r = matroid.rank_of
        assert 0 <= r(x) <= len(x)
        assert r(x) <= r(x | y)
        assert r(x | y) + r(x & y) <= r(x) + r(y)

    @given(matroids(), st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_closure_properties(self, matroid, seed):
        rng = np.random.default_rng(seed)
        subset = {label for label in matroid.labels if rng.random() < 0.5}
        closed = matroid.closure(subset)
        assert subset <= closed
        assert matroid.closure(closed) == closed
        assert matroid.rank_of(closed) == matroid.rank_of(subset)

    @given(matroids(), st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_perturbations_preserve_the_matroid(self, matroid, seed):
        rng = np.random.default_rng(seed)
        perturbed, notes = RepresentationPerturber().apply(matroid, 10, rng)
        assert len(notes) == 10
        assert perturbed.labels == matroid.labels
        assert independent_sets(perturbed) == independent_sets(matroid)

    def test_protected_columns_are_never_scaled(self):
        matroid = VectorMatroid(FieldMatrix.identity(PrimeField(5), 3), (1, 2, 3))
        rng = np.random.default_rng(0)
        _, notes = RepresentationPerturber().apply(matroid, 50, rng, protected=(1, 2, 3))
        assert not any(note.startswith("scale column") for note in notes)
