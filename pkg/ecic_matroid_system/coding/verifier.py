"""
Code Verifier - ECIC Matroid System
The two code-level oracles for differential error correction:
the codeword weight criterion and the error-pattern rank criterion
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Optional, Tuple, Callable

import numpy as np

from .coding_models import (
    Problem,
    ErrorProfile,
    IndexCode,
    ErrorPattern,
    OracleKind,
    ReceiverVerdict,
    VerifierReport,
    WeightWitness,
    PatternWitness,
)
from ..config import EngineConfig
from ..field.linear_algebra import all_vectors, rank_array


def first_light_codeword(q: int, block: np.ndarray, demand_pos: int,
                         required: int) -> Optional[Tuple[Tuple[int, ...], int]]:
    """
    Scan z over F_q^k (k = block rows) with z[demand_pos] != 0 in lexicographic
    order and return the first (z, weight(z @ block)) whose weight is below required.
    """
    candidates = all_vectors(q, block.shape[0])
    candidates = candidates[candidates[:, demand_pos] != 0]
    weights = np.count_nonzero((candidates @ block) % q, axis=1)
    light = np.flatnonzero(weights < required)
    if light.size == 0:
        return None
    first = int(light[0])
    return tuple(int(v) for v in candidates[first]), int(weights[first])


def demand_in_span(q: int, stacked: np.ndarray, target: np.ndarray) -> bool:
    return rank_array(np.column_stack([stacked, target]), q) == rank_array(stacked, q)


class CodeVerifier:
    """
    Code-level verification oracles

    verify_weight enumerates the admissible z restricted to the unknown
    messages of each receiver; verify_rank enumerates every error pattern
    of size 2*delta_i. Receivers are checked concurrently and the report is
    assembled in receiver order.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.logger = logging.getLogger("CodeVerifier")
        self.logger.debug(f"🏛️ Code Verifier initialized with {self.config.max_workers} workers")

    # ------------------------------------------------------------------
    # Public oracles
    # ------------------------------------------------------------------
    def verify_weight(self, problem: Problem, profile: ErrorProfile, code: IndexCode) -> VerifierReport:
        """Every admissible zL must have weight >= 2*delta_i + 1"""
        return self._run(OracleKind.WEIGHT, problem, profile, code, self._weight_verdict)

    def verify_rank(self, problem: Problem, profile: ErrorProfile, code: IndexCode) -> VerifierReport:
        """
        The demand unit vector must lie in the span of [L_unknown ; I_F] for every pattern F

        A receiver with 2*delta > N is reported as a failing verdict with
        infeasible=True rather than raised; only the matroidal check raises
        InfeasibleProfileError.
        """
        return self._run(OracleKind.RANK, problem, profile, code, self._rank_verdict)

    def verify(self, oracle: OracleKind, problem: Problem, profile: ErrorProfile,
               code: IndexCode) -> VerifierReport:
        if oracle == OracleKind.WEIGHT:
            return self.verify_weight(problem, profile, code)
        if oracle == OracleKind.RANK:
            return self.verify_rank(problem, profile, code)
        raise ValueError(f"CodeVerifier does not run the {oracle.value} oracle")

    def passes_weight(self, problem: Problem, profile: ErrorProfile, matrix: np.ndarray) -> bool:
        """
        Fast boolean form of verify_weight on a raw n x N array, used by the search.
        Stops at the first failing receiver.
        """
        length = matrix.shape[1]
        for i in problem.receivers:
            delta = profile.delta(i)
            if 2 * delta > length:
                return False
            block = matrix[[j - 1 for j in problem.unknowns(i)], :]
            if first_light_codeword(problem.q, block, problem.demand_position(i), 2 * delta + 1) is not None:
                return False
        return True

    # ------------------------------------------------------------------
    # Per-receiver checks
    # ------------------------------------------------------------------
    def _weight_verdict(self, problem: Problem, profile: ErrorProfile, code: IndexCode,
                        receiver: int) -> ReceiverVerdict:
        delta = profile.delta(receiver)
        if 2 * delta > code.length:
            return ReceiverVerdict(receiver, False, infeasible=True)

        rows = [j - 1 for j in problem.unknowns(receiver)]
        block = code.matrix.data[rows, :]
        required = 2 * delta + 1
        light = first_light_codeword(problem.q, block, problem.demand_position(receiver), required)
        if light is None:
            return ReceiverVerdict(receiver, True)

        restricted, light_weight = light
        z = [0] * problem.n
        for row, value in zip(rows, restricted):
            z[row] = value
        self.logger.debug(f"⚠️ R{receiver}: light codeword z={z} weight {light_weight}")
        return ReceiverVerdict(receiver, False, WeightWitness(tuple(z), light_weight, required))

    def _rank_verdict(self, problem: Problem, profile: ErrorProfile, code: IndexCode,
                      receiver: int) -> ReceiverVerdict:
        delta = profile.delta(receiver)
        length = code.length
        if 2 * delta > length:
            return ReceiverVerdict(receiver, False, infeasible=True)

        rows = [j - 1 for j in problem.unknowns(receiver)]
        block = code.matrix.data[rows, :]
        identity = np.eye(length, dtype=np.int64)
        target = np.zeros(len(rows) + 2 * delta, dtype=np.int64)
        target[problem.demand_position(receiver)] = 1

        for support in combinations(range(length), 2 * delta):
            stacked = np.vstack([block, identity[list(support), :]]) if support else block
            if not demand_in_span(problem.q, stacked, target):
                pattern = ErrorPattern(tuple(j + 1 for j in support))
                self.logger.debug(f"⚠️ R{receiver}: demand leaves the span at pattern {pattern}")
                return ReceiverVerdict(receiver, False, PatternWitness(receiver, pattern))
        return ReceiverVerdict(receiver, True)

    # ------------------------------------------------------------------
    # Orchestration
    # ------------------------------------------------------------------
    def _run(self, oracle: OracleKind, problem: Problem, profile: ErrorProfile, code: IndexCode,
             check: Callable[[Problem, ErrorProfile, IndexCode, int], ReceiverVerdict]) -> VerifierReport:
        problem.validate()
        profile.check_against(problem)
        code.check_against(problem)

        try:
            with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
                verdicts = tuple(executor.map(
                    lambda i: check(problem, profile, code, i), problem.receivers
                ))
        except Exception as e:
            self.logger.error(f"💀 {oracle.value} oracle crashed: {str(e)}")
            raise

        report = VerifierReport(oracle, verdicts)
        self.logger.info(
            f"📊 {oracle.value} oracle: {report.passed_count}/{problem.m} receivers pass"
        )
        return report
