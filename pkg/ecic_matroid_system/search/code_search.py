"""
Code Searcher - ECIC Matroid System
Shortest differential error-correcting index codes by canonical enumeration or seeded sampling
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations_with_replacement, islice
from math import comb
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .search_models import SearchSpec, SearchResult, SearchMode, LengthOutcome, LengthStatus
from ..coding import Problem, ErrorProfile, IndexCode, CodeVerifier
from ..config import EngineConfig
from ..exceptions import SearchSpaceTooLargeError
from ..field import FieldMatrix
from ..field.linear_algebra import all_vectors


def canonical_columns(q: int, n: int) -> np.ndarray:
    """Nonzero vectors of F_q^n whose first nonzero entry is 1, in lexicographic order"""
    vectors = all_vectors(q, n)
    keep = []
    for index, row in enumerate(vectors):
        nonzero = np.flatnonzero(row)
        if nonzero.size and row[nonzero[0]] == 1:
            keep.append(index)
    return vectors[keep]


def canonical_count(q: int, n: int, length: int) -> int:
    """Number of multisets of length canonical columns: C(k + N - 1, N), k = (q^n - 1)/(q - 1)"""
    k = (q ** n - 1) // (q - 1)
    return comb(k + length - 1, length)


class CodeSearcher:
    """
    Minimal-length code search

    Exhaustive mode enumerates nondecreasing tuples of canonical columns
    (column scaling and column order do not change any verdict), evaluating
    ordered batches concurrently and keeping the first passing candidate.
    Random mode draws budget sorted tuples of canonical columns per length
    from a generator seeded with (seed, N).
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.verifier = CodeVerifier(self.config)
        self.logger = logging.getLogger("CodeSearcher")
        self.logger.debug("🏛️ Code Searcher initialized")

    @staticmethod
    def length_floor(profile: ErrorProfile) -> int:
        """max(1, max_i 2*delta_i + 1)"""
        return max(1, 2 * profile.max_delta + 1)

    def search(self, spec: SearchSpec) -> SearchResult:
        """Try lengths n_min..n_max in order and return the first passing code"""
        spec.validate()
        spec.problem.validate()
        spec.profile.check_against(spec.problem)

        floor = self.length_floor(spec.profile)
        budget = spec.budget or self.config.default_budget
        outcomes: List[LengthOutcome] = []
        tested = 0

        self.logger.info(
            f"🔍 Searching N={spec.n_min}..{spec.n_max} ({spec.mode.value}), length floor {floor}"
        )
        for length in range(spec.n_min, spec.n_max + 1):
            if length < floor:
                outcomes.append(LengthOutcome(length, LengthStatus.REFUTED_BY_BOUND))
                continue

            mode = spec.mode
            if mode == SearchMode.EXHAUSTIVE:
                count = canonical_count(spec.problem.q, spec.problem.n, length)
                if count > self.config.search_ceiling:
                    self.logger.warning(
                        f"⚠️ N={length}: {count} canonical candidates exceed the ceiling, sampling instead"
                    )
                    mode = SearchMode.RANDOM

            if mode == SearchMode.EXHAUSTIVE:
                matrix, count = self._first_passing(spec.problem, spec.profile,
                                                    self._enumerate(spec.problem, length))
                status_if_missing = LengthStatus.REFUTED
            else:
                matrix, count = self._first_passing(spec.problem, spec.profile,
                                                    self._sample(spec.problem, length, budget, spec.seed))
                status_if_missing = LengthStatus.NOT_REFUTED
            tested += count

            if matrix is not None:
                code = IndexCode(FieldMatrix(spec.problem.field, matrix))
                outcomes.append(LengthOutcome(length, LengthStatus.FOUND, count))
                self.logger.info(f"✅ N={length}: passing code after {count} candidates")
                return SearchResult(spec.mode, tuple(outcomes), code, tested)

            outcomes.append(LengthOutcome(length, status_if_missing, count))
            self.logger.info(f"📊 N={length}: {status_if_missing.value} after {count} candidates")

        return SearchResult(spec.mode, tuple(outcomes), None, tested)

    def refute_length(self, problem: Problem, profile: ErrorProfile, length: int) -> bool:
        """
        True iff no n x N code passes the weight criterion

        Raises:
            SearchSpaceTooLargeError: when the canonical enumeration exceeds search_ceiling
        """
        problem.validate()
        profile.check_against(problem)
        if length < self.length_floor(profile):
            return True
        count = canonical_count(problem.q, problem.n, length)
        if count > self.config.search_ceiling:
            raise SearchSpaceTooLargeError(count, self.config.search_ceiling)
        matrix, _ = self._first_passing(problem, profile, self._enumerate(problem, length))
        return matrix is None

    # ------------------------------------------------------------------
    # Candidate streams
    # ------------------------------------------------------------------
    def _enumerate(self, problem: Problem, length: int) -> Iterator[np.ndarray]:
        columns = canonical_columns(problem.q, problem.n)
        for choice in combinations_with_replacement(range(len(columns)), length):
            yield columns[list(choice)].T

    def _sample(self, problem: Problem, length: int, budget: int, seed: int) -> Iterator[np.ndarray]:
        columns = canonical_columns(problem.q, problem.n)
        rng = np.random.default_rng([seed, length])
        for _ in range(budget):
            choice = np.sort(rng.integers(0, len(columns), size=length))
            yield columns[choice].T

    def _first_passing(self, problem: Problem, profile: ErrorProfile,
                       candidates: Iterator[np.ndarray]) -> Tuple[Optional[np.ndarray], int]:
        """First candidate in stream order that passes, plus how many were tested to reach it"""
        tested = 0
        with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
            while True:
                batch = list(islice(candidates, self.config.search_batch_size))
                if not batch:
                    return None, tested
                verdicts = list(executor.map(
                    lambda matrix: self.verifier.passes_weight(problem, profile, matrix), batch
                ))
                for matrix, passed in zip(batch, verdicts):
                    tested += 1
                    if passed:
                        return np.ascontiguousarray(matrix), tested
