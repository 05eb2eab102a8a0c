"""
Certificate Checker - ECIC Matroid System
Executable matroidal conditions A, B1, B2 and C with explicit contractions
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, permutations
from typing import List, Optional

from .certificate_models import (
    Certificate,
    ConditionAOutcome,
    ColumnCheck,
    ConditionBOutcome,
    ConditionCOutcome,
    ContractionEntry,
)
from ..coding import (
    Problem,
    ErrorProfile,
    ErrorPattern,
    OracleKind,
    PatternWitness,
    ReceiverVerdict,
    VerifierReport,
)
from ..config import EngineConfig
from ..exceptions import (
    InvalidArgumentError,
    InfeasibleProfileError,
    MalformedCertificateError,
    GroundSetTooLargeError,
)


class CertificateChecker:
    """
    Matroidal Differential ECIC Checker

    Checks a certificate (M, g, B) against a problem and an error profile.
    Condition C contracts M by B_{F,i} = g(chi_i) + {b_{n+j} : j not in F}
    for every receiver i and every error pattern F with |F| = 2*delta_i.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.logger = logging.getLogger("CertificateChecker")
        self.logger.debug("🏛️ Certificate Checker initialized")

    # ------------------------------------------------------------------
    # Conditions
    # ------------------------------------------------------------------
    def check_condition_A(self, cert: Certificate, problem: Optional[Problem] = None) -> ConditionAOutcome:
        """g is one-one on the messages and g(messages) is independent"""
        cert.check_ground_shape()
        if problem is not None:
            self._check_problem_fits(cert, problem)

        counts = Counter(cert.ground_map.message_labels)
        duplicates = tuple(sorted(label for label, count in counts.items() if count > 1))
        if duplicates:
            return ConditionAOutcome(False, duplicate_labels=duplicates)
        if not cert.matroid.is_independent(cert.ground_map.message_labels):
            return ConditionAOutcome(False, dependent=True)
        return ConditionAOutcome(True)

    def check_condition_B(self, cert: Certificate) -> ConditionBOutcome:
        """B1: g(c_i) outside cl(B - g(messages)); B2: the three ranks around b_{n+i} and g(c_i) agree"""
        cert.check_ground_shape()
        cert.check_basis_shape()

        matroid = cert.matroid
        messages = frozenset(cert.ground_map.message_labels)
        tail = frozenset(cert.basis_tail)
        tail_rank = matroid.rank_of(tail)
        expected = cert.n + 1

        checks = []
        for i in range(1, cert.length + 1):
            code_label = cert.ground_map.code(i)
            b1 = matroid.rank_of(tail | {code_label}) > tail_rank
            ranks = (
                matroid.rank_of(messages | {cert.tail(i), code_label}),
                matroid.rank_of(messages | {cert.tail(i)}),
                matroid.rank_of(messages | {code_label}),
            )
            b2 = ranks[0] == ranks[1] == ranks[2]
            checks.append(ColumnCheck(i, b1, b2, ranks, b2 and ranks[0] == expected))
            if not (b1 and b2):
                self.logger.debug(f"⚠️ c_{i}: B1={b1} B2={b2} ranks={ranks}")

        return ConditionBOutcome(tuple(checks))

    def check_condition_C(self, cert: Certificate, problem: Problem,
                          profile: ErrorProfile) -> ConditionCOutcome:
        """
        Span check on every contraction

        Raises:
            InfeasibleProfileError: when 2*delta_i > N at some receiver
        """
        cert.check_ground_shape()
        cert.check_basis_shape()
        self._check_problem_fits(cert, problem)
        profile.check_against(problem)
        for i in problem.receivers:
            if 2 * profile.delta(i) > cert.length:
                raise InfeasibleProfileError(i, profile.delta(i), cert.length)

        try:
            with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
                verdicts = tuple(executor.map(
                    lambda i: self._receiver_verdict(cert, problem, profile, i), problem.receivers
                ))
        except MalformedCertificateError:
            raise
        except Exception as e:
            self.logger.error(f"💀 Condition C failed to run: {str(e)}")
            raise

        return ConditionCOutcome(verdicts)

    def check_matroidal(self, cert: Certificate, problem: Problem, profile: ErrorProfile,
                        exhaustive_bases: bool = False) -> VerifierReport:
        """
        Conjunction of A, B and C

        With exhaustive_bases, every basis containing g(messages) and every
        tail pairing consistent with B2 is tried, and the certificate passes
        when any of them satisfies B and C.
        """
        problem.validate()
        profile.check_against(problem)

        outcome_a = self.check_condition_A(cert, problem)
        if not outcome_a.passed:
            self.logger.info(f"📊 {outcome_a.describe()}")
            return VerifierReport(OracleKind.MATROID, (), outcome_a.describe())

        if exhaustive_bases:
            return self._check_all_bases(cert, problem, profile)
        return self._check_with_basis(cert, problem, profile)

    def _check_with_basis(self, cert: Certificate, problem: Problem,
                          profile: ErrorProfile) -> VerifierReport:
        outcome_b = self.check_condition_B(cert)
        if not outcome_b.passed:
            self.logger.info(f"📊 {outcome_b.describe()}")
            return VerifierReport(OracleKind.MATROID, (), outcome_b.describe())

        outcome_c = self.check_condition_C(cert, problem, profile)
        report = VerifierReport(OracleKind.MATROID, outcome_c.verdicts)
        self.logger.info(f"📊 matroid oracle: {report.passed_count}/{problem.m} receivers pass")
        return report

    def _check_all_bases(self, cert: Certificate, problem: Problem,
                         profile: ErrorProfile) -> VerifierReport:
        size = len(cert.matroid)
        if size > self.config.exhaustive_basis_limit:
            raise GroundSetTooLargeError(
                f"Exhaustive basis mode refused: {size} labels exceed {self.config.exhaustive_basis_limit}"
            )

        stored = self._check_with_basis(cert, problem, profile)
        if stored.overall:
            return stored

        messages = frozenset(cert.ground_map.message_labels)
        for basis in cert.matroid.bases_containing(messages):
            tail_labels = sorted(basis - messages)
            for pairing in permutations(tail_labels):
                candidate = cert.with_basis(basis, tuple(pairing))
                if candidate.basis == cert.basis and candidate.basis_tail == cert.basis_tail:
                    continue
                if not self.check_condition_B(candidate).passed:
                    continue
                report = self._check_with_basis(candidate, problem, profile)
                if report.overall:
                    self.logger.info(f"✅ Basis {sorted(basis)} with tail {list(pairing)} satisfies B and C")
                    return report
        return stored

    # ------------------------------------------------------------------
    # Contractions
    # ------------------------------------------------------------------
    def contracted_set(self, cert: Certificate, problem: Problem, receiver: int,
                       pattern: ErrorPattern) -> frozenset:
        """B_{F,i}: the basis minus g(unknown messages) minus the tail elements paired with F"""
        unknown = {cert.ground_map.message(j) for j in problem.unknowns(receiver)}
        removed_tail = {cert.tail(j) for j in pattern.indices}
        return cert.basis - unknown - removed_tail

    def contraction_entry(self, cert: Certificate, problem: Problem, receiver: int,
                          pattern: ErrorPattern) -> ContractionEntry:
        contracted = self.contracted_set(cert, problem, receiver, pattern)
        minor = cert.matroid.contract(contracted)

        expected = len(problem.unknowns(receiver)) + cert.length + len(pattern)
        if len(minor) != expected:
            raise MalformedCertificateError(
                f"R{receiver}, pattern {pattern}: contraction has {len(minor)} elements, expected {expected}"
            )
        demand_label = cert.ground_map.message(problem.demands[receiver - 1])
        code_labels = cert.ground_map.code_labels
        survivors = minor.ground_set
        if demand_label not in survivors or not set(code_labels) <= survivors:
            raise MalformedCertificateError(
                f"R{receiver}, pattern {pattern}: code or demand labels were contracted out"
            )

        code_rank = minor.rank_of(code_labels)
        in_span = minor.rank_of(set(code_labels) | {demand_label}) == code_rank
        return ContractionEntry(receiver, pattern, contracted, minor, demand_label, code_labels, in_span)

    def contraction_table(self, cert: Certificate, problem: Problem, profile: ErrorProfile,
                          receiver: int) -> List[ContractionEntry]:
        """Every error pattern of receiver with its contracted matroid, in lexicographic order"""
        cert.check_ground_shape()
        cert.check_basis_shape()
        self._check_problem_fits(cert, problem)
        delta = profile.delta(receiver)
        if 2 * delta > cert.length:
            raise InfeasibleProfileError(receiver, delta, cert.length)
        return [
            self.contraction_entry(cert, problem, receiver, ErrorPattern(support))
            for support in combinations(range(1, cert.length + 1), 2 * delta)
        ]

    def _receiver_verdict(self, cert: Certificate, problem: Problem, profile: ErrorProfile,
                          receiver: int) -> ReceiverVerdict:
        for support in combinations(range(1, cert.length + 1), 2 * profile.delta(receiver)):
            pattern = ErrorPattern(support)
            entry = self.contraction_entry(cert, problem, receiver, pattern)
            if not entry.in_span:
                self.logger.debug(f"⚠️ R{receiver}: demand column leaves the span at pattern {pattern}")
                return ReceiverVerdict(receiver, False, PatternWitness(receiver, pattern))
        return ReceiverVerdict(receiver, True)

    @staticmethod
    def _check_problem_fits(cert: Certificate, problem: Problem) -> None:
        if cert.n != problem.n:
            raise InvalidArgumentError(f"Certificate maps {cert.n} messages, problem has {problem.n}")
        if cert.matroid.field != problem.field:
            raise InvalidArgumentError(
                f"Certificate is over F_{cert.matroid.field.q}, problem over F_{problem.q}"
            )
