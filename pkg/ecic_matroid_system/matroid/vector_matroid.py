"""
Vector Matroid - ECIC Matroid System
Matroids represented by a matrix over F_q with opaque integer labels on the columns
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Tuple

import numpy as np

from ..config import EngineConfig
from ..field import FieldMatrix, FieldVector
from ..field.linear_algebra import rank_array
from ..exceptions import (
    InvalidArgumentError,
    UnknownLabelError,
    DependentSetError,
    GroundSetTooLargeError,
)

LabelSet = FrozenSet[int]

logger = logging.getLogger("VectorMatroid")


@dataclass(frozen=True, eq=False)
class VectorMatroid:
    """
    Vector matroid M[A]

    Column k of rep carries labels[k]; a label set is independent iff the
    selected columns are linearly independent over F_q.
    """
    rep: FieldMatrix
    labels: Tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(label) for label in self.labels)
        if len(labels) != self.rep.cols:
            raise InvalidArgumentError(
                f"{len(labels)} labels for a representation with {self.rep.cols} columns"
            )
        if len(set(labels)) != len(labels):
            raise InvalidArgumentError(f"Matroid labels must be distinct, got {labels}")
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, '_positions', {label: k for k, label in enumerate(labels)})

    # ------------------------------------------------------------------
    # Ground set
    # ------------------------------------------------------------------
    @property
    def ground_set(self) -> LabelSet:
        return frozenset(self.labels)

    @property
    def field(self):
        return self.rep.field

    def __len__(self) -> int:
        return len(self.labels)

    def position(self, label: int) -> int:
        """0-based column of label"""
        try:
            return self._positions[label]
        except KeyError:
            raise UnknownLabelError(f"Label {label} is not in the ground set {sorted(self.labels)}") from None

    def _columns(self, labels: Iterable[int]) -> List[int]:
        return [self.position(label) for label in sorted(set(labels))]

    def column_of(self, label: int) -> FieldVector:
        return self.rep.column(self.position(label))

    def representation_of(self, labels: Iterable[int]) -> FieldMatrix:
        """Columns of labels in increasing label order"""
        return self.rep.select_columns(self._columns(labels))

    # ------------------------------------------------------------------
    # Rank oracle
    # ------------------------------------------------------------------
    def rank(self) -> int:
        """r(M)"""
        return rank_array(self.rep.data, self.field.q)

    def rank_of(self, labels: Iterable[int]) -> int:
        columns = self._columns(labels)
        if not columns:
            return 0
        return rank_array(self.rep.data[:, columns], self.field.q)

    def is_independent(self, labels: Iterable[int]) -> bool:
        labels = set(labels)
        return self.rank_of(labels) == len(labels)

    def closure(self, labels: Iterable[int]) -> LabelSet:
        """cl(S): every label whose addition leaves the rank of S unchanged"""
        base = frozenset(labels)
        base_rank = self.rank_of(base)
        return base | frozenset(
            label for label in self.labels
            if label not in base and self.rank_of(base | {label}) == base_rank
        )

    def extend_to_basis(self, labels: Iterable[int]) -> LabelSet:
        """Greedy extension of an independent set, scanning labels in ground-set order"""
        basis = set(labels)
        current = self.rank_of(basis)
        if current != len(basis):
            raise DependentSetError(f"Cannot extend dependent set {sorted(basis)} to a basis")
        target = self.rank()
        for label in self.labels:
            if current == target:
                break
            if label in basis:
                continue
            if self.rank_of(basis | {label}) > current:
                basis.add(label)
                current += 1
        return frozenset(basis)

    def bases_containing(self, labels: Iterable[int]) -> List[LabelSet]:
        """All bases containing the given independent set, in lexicographic order of the added labels"""
        required = frozenset(labels)
        if not self.is_independent(required):
            raise DependentSetError(f"{sorted(required)} is dependent")
        free = [label for label in self.labels if label not in required]
        missing = self.rank() - len(required)
        bases = []
        for extra in combinations(free, missing):
            candidate = required | frozenset(extra)
            if self.is_independent(candidate):
                bases.append(candidate)
        return bases

    # ------------------------------------------------------------------
    # Minors
    # ------------------------------------------------------------------
    def contract(self, labels: Iterable[int]) -> 'VectorMatroid':
        """
        M/T by pivot-and-delete, contracting labels in increasing order

        A loop is deleted without touching the rows; otherwise the column is
        reduced to a single nonzero entry and that row and column are removed.
        """
        q = self.field.q
        to_contract = sorted(set(labels))
        for label in to_contract:
            self.position(label)

        data = self.rep.data.copy()
        current_labels = list(self.labels)
        for label in to_contract:
            col = current_labels.index(label)
            nonzero = np.flatnonzero(data[:, col])
            if nonzero.size:
                pivot = int(nonzero[0])
                data[pivot, :] = (data[pivot, :] * pow(int(data[pivot, col]), -1, q)) % q
                factors = data[:, col].copy()
                factors[pivot] = 0
                data = (data - np.outer(factors, data[pivot, :])) % q
                data = np.delete(data, pivot, axis=0)
            data = np.delete(data, col, axis=1)
            del current_labels[col]

        data = data.reshape(data.shape[0], len(current_labels))
        return VectorMatroid(FieldMatrix(self.field, data), tuple(current_labels))

    def with_representation(self, rep: FieldMatrix) -> 'VectorMatroid':
        return VectorMatroid(rep, self.labels)

    # ------------------------------------------------------------------
    # Axioms
    # ------------------------------------------------------------------
    def independent_masks(self) -> np.ndarray:
        """Boolean array indexed by column bitmask: True where the columns are independent"""
        size = len(self.labels)
        q = self.field.q
        independent = np.zeros(1 << size, dtype=bool)
        independent[0] = True
        for mask in range(1, 1 << size):
            columns = [k for k in range(size) if mask >> k & 1]
            independent[mask] = rank_array(self.rep.data[:, columns], q) == len(columns)
        return independent

    def to_dict(self) -> Dict[str, object]:
        return {'labels': list(self.labels), 'representation': self.rep.to_lists()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorMatroid):
            return NotImplemented
        return self.labels == other.labels and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.labels, self.rep))

    def __repr__(self) -> str:
        return f"VectorMatroid(labels={list(self.labels)}, rank={self.rank()})"


def check_axioms(matroid: VectorMatroid, limit: int = EngineConfig.axiom_check_limit) -> bool:
    """
    Exhaustively verify I1, I2 and I3 over every subset of the ground set

    Raises:
        GroundSetTooLargeError: when the ground set has more than limit labels
    """
    size = len(matroid)
    if size > limit:
        raise GroundSetTooLargeError(f"Axiom check refused: {size} labels exceed the limit of {limit}")

    independent = matroid.independent_masks()
    full = (1 << size) - 1

    # I1
    if not independent[0]:
        return False

    masks = np.flatnonzero(independent)
    popcounts = np.array([bin(int(mask)).count("1") for mask in masks], dtype=np.int64)
    by_size = {k: masks[popcounts == k] for k in range(size + 1)}

    for mask in (int(m) for m in masks):
        # I2: dropping any single element stays independent
        for k in range(size):
            if mask >> k & 1 and not independent[mask ^ (1 << k)]:
                logger.debug(f"⚠️ I2 violated at mask {mask:b}")
                return False

        # I3: every larger-by-one independent set offers an augmenting element
        larger = by_size.get(bin(mask).count("1") + 1)
        if larger is None or larger.size == 0:
            continue
        augment = 0
        for k in range(size):
            bit = 1 << k
            if not mask & bit and independent[mask | bit]:
                augment |= bit
        if np.any((larger & (full ^ mask) & augment) == 0):
            logger.debug(f"⚠️ I3 violated at mask {mask:b}")
            return False
    return True
