"""
Equivalence Harness - ECIC Matroid System
Cross-checks the weight, rank and matroidal oracles on one instance
"""

import logging
from typing import Optional

from .certificate_models import EquivalenceOutcome
from .conditions import CertificateChecker
from .construction import CertificateBuilder
from ..coding import Problem, ErrorProfile, IndexCode, CodeVerifier
from ..config import EngineConfig
from ..exceptions import ZeroColumnError, InfeasibleProfileError


class EquivalenceHarness:
    """
    Runs all three oracles and reports whether they agree

    A code with a zero column has no certificate; its matroidal leg is
    recorded as rejected and only the two code-level oracles are compared.
    An infeasible profile counts as a failing matroidal verdict.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.verifier = CodeVerifier(self.config)
        self.builder = CertificateBuilder(self.config)
        self.checker = CertificateChecker(self.config)
        self.logger = logging.getLogger("EquivalenceHarness")

    def evaluate(self, problem: Problem, profile: ErrorProfile, code: IndexCode) -> EquivalenceOutcome:
        weight = self.verifier.verify_weight(problem, profile, code).overall
        rank = self.verifier.verify_rank(problem, profile, code).overall

        matroid: Optional[bool]
        try:
            certificate = self.builder.code_to_certificate(problem, code)
        except ZeroColumnError:
            matroid = None
        else:
            try:
                matroid = self.checker.check_matroidal(certificate, problem, profile).overall
            except InfeasibleProfileError:
                matroid = False

        outcome = EquivalenceOutcome(weight, rank, matroid, code.zero_columns())
        if not outcome.agree:
            self.logger.error(f"💀 Oracles disagree: {outcome.to_dict()}")
        return outcome

    def check(self, problem: Problem, profile: ErrorProfile, code: IndexCode) -> bool:
        """True iff the oracles agree"""
        return self.evaluate(problem, profile, code).agree
