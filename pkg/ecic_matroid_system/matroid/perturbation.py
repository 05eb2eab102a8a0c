"""
Representation Perturber - ECIC Matroid System
Random representation changes that leave the vector matroid unchanged
"""

import logging
from enum import Enum
from typing import Iterable, List, Optional, Tuple

import numpy as np

from .vector_matroid import VectorMatroid
from ..field import FieldMatrix


class PerturbationKind(Enum):
    """Elementary operations preserving the matroid of a representation"""
    SWAP_ROWS = "swap_rows"
    SCALE_ROW = "scale_row"
    ADD_ROW_MULTIPLE = "add_row_multiple"
    ADJOIN_ZERO_ROW = "adjoin_zero_row"
    DELETE_ZERO_ROW = "delete_zero_row"
    SCALE_COLUMN = "scale_column"


class RepresentationPerturber:
    """
    Applies random matroid-preserving operations to a representation

    Column scaling is limited to labels outside protected; every other
    operation acts on rows only.
    """

    def __init__(self):
        self.logger = logging.getLogger("RepresentationPerturber")

    def apply(self, matroid: VectorMatroid, operations: int, rng: np.random.Generator,
              protected: Iterable[int] = ()) -> Tuple[VectorMatroid, List[str]]:
        """
        Apply operations random steps

        Returns:
            (perturbed matroid, human-readable log of the steps applied)
        """
        protected = frozenset(protected)
        scalable = [matroid.position(label) for label in matroid.labels if label not in protected]
        rep = matroid.rep
        applied: List[str] = []

        for _ in range(operations):
            kind = self._choose(rep, scalable, rng)
            rep, note = self._apply_one(kind, rep, scalable, rng)
            applied.append(note)

        self.logger.debug(f"📊 Applied {len(applied)} perturbations: {applied}")
        return matroid.with_representation(rep), applied

    def _choose(self, rep: FieldMatrix, scalable: List[int], rng: np.random.Generator) -> PerturbationKind:
        kinds = [PerturbationKind.SCALE_ROW, PerturbationKind.ADJOIN_ZERO_ROW]
        if rep.rows >= 2:
            kinds += [PerturbationKind.SWAP_ROWS, PerturbationKind.ADD_ROW_MULTIPLE]
        if any(not np.any(rep.data[r, :]) for r in range(rep.rows)):
            kinds.append(PerturbationKind.DELETE_ZERO_ROW)
        if scalable:
            kinds.append(PerturbationKind.SCALE_COLUMN)
        return kinds[int(rng.integers(len(kinds)))]

    def _apply_one(self, kind: PerturbationKind, rep: FieldMatrix, scalable: List[int],
                   rng: np.random.Generator) -> Tuple[FieldMatrix, str]:
        q = rep.field.q
        nonzero = int(rng.integers(1, q))

        if kind == PerturbationKind.SWAP_ROWS:
            a, b = (int(v) for v in rng.choice(rep.rows, size=2, replace=False))
            return rep.swap_rows(a, b), f"swap rows {a + 1},{b + 1}"
        if kind == PerturbationKind.SCALE_ROW:
            r = int(rng.integers(rep.rows)) if rep.rows else 0
            if rep.rows == 0:
                return rep.with_zero_row(), "adjoin zero row"
            return rep.scale_row(r, nonzero), f"scale row {r + 1} by {nonzero}"
        if kind == PerturbationKind.ADD_ROW_MULTIPLE:
            target, source = (int(v) for v in rng.choice(rep.rows, size=2, replace=False))
            factor = int(rng.integers(0, q))
            return rep.add_row_multiple(target, source, factor), \
                f"row {target + 1} += {factor} * row {source + 1}"
        if kind == PerturbationKind.ADJOIN_ZERO_ROW:
            position = int(rng.integers(rep.rows + 1))
            return rep.with_zero_row(position), f"adjoin zero row at {position + 1}"
        if kind == PerturbationKind.DELETE_ZERO_ROW:
            zero_rows = [r for r in range(rep.rows) if not np.any(rep.data[r, :])]
            r = zero_rows[int(rng.integers(len(zero_rows)))]
            return rep.delete_row(r), f"delete zero row {r + 1}"

        col = scalable[int(rng.integers(len(scalable)))]
        return rep.scale_column(col, nonzero), f"scale column {col + 1} by {nonzero}"
