"""
Decode Simulator - ECIC Matroid System
Monte Carlo error injection followed by brute-force decoding at every receiver
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np

from .simulation_models import SimulationResult
from ..coding import Problem, ErrorProfile, IndexCode, BruteForceDecoder
from ..config import EngineConfig


class DecodeSimulator:
    """
    Empirical check of differential error correction

    Each trial draws x uniformly; each receiver then sees its own error of
    uniform weight in [0, delta_i] with uniform support and uniform nonzero
    values. Trial t uses the generator seeded with (seed, t), so results do
    not depend on the worker count.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.decoder = BruteForceDecoder(self.config)
        self.logger = logging.getLogger("DecodeSimulator")
        self.logger.debug("🏛️ Decode Simulator initialized")

    def simulate(self, problem: Problem, profile: ErrorProfile, code: IndexCode,
                 trials: Optional[int] = None, seed: Optional[int] = None) -> SimulationResult:
        """
        Run seeded decoding trials

        Returns:
            SimulationResult with per-receiver success counts
        """
        trials = self.config.default_trials if trials is None else trials
        seed = self.config.default_seed if seed is None else seed
        problem.validate()
        profile.check_against(problem)
        code.check_against(problem)

        if trials <= 0:
            self.logger.info("📊 No trials requested")
            return SimulationResult(0, seed, profile.deltas, (0,) * problem.m)

        try:
            with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
                outcomes = list(executor.map(
                    lambda t: self._run_trial(problem, profile, code, seed, t), range(trials)
                ))
        except Exception as e:
            self.logger.error(f"💀 Simulation failed: {str(e)}")
            raise

        successes = tuple(int(s) for s in np.sum(np.array(outcomes, dtype=np.int64), axis=0))
        result = SimulationResult(trials, seed, profile.deltas, successes)
        for i in problem.receivers:
            self.logger.info(f"📊 R{i}: {successes[i - 1]}/{trials} decoded")
        return result

    def _run_trial(self, problem: Problem, profile: ErrorProfile, code: IndexCode,
                   seed: int, trial: int) -> List[int]:
        rng = np.random.default_rng([seed, trial])
        q = problem.q
        length = code.length
        x = rng.integers(0, q, size=problem.n)
        codeword = (x @ code.matrix.data) % q

        results = []
        for i in problem.receivers:
            delta = profile.delta(i)
            error_weight = int(rng.integers(0, min(delta, length) + 1))
            error = np.zeros(length, dtype=np.int64)
            if error_weight:
                support = rng.choice(length, size=error_weight, replace=False)
                error[support] = rng.integers(1, q, size=error_weight)
            received = (codeword + error) % q

            base = np.zeros(problem.n, dtype=np.int64)
            for j in problem.side_info[i - 1]:
                base[j - 1] = x[j - 1]
            outcome = self.decoder.decode_raw(problem, i, code.matrix.data, received, base, delta)
            results.append(int(outcome.value is not None and outcome.value == int(x[problem.demands[i - 1] - 1])))
        return results
