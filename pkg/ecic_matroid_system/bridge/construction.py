"""
Certificate Builder - ECIC Matroid System
Code to certificate construction and certificate to code extraction
"""

import logging
from typing import Optional

import numpy as np

from .certificate_models import Certificate, GroundMap
from .conditions import CertificateChecker
from ..coding import Problem, IndexCode
from ..config import EngineConfig
from ..exceptions import ZeroColumnError, PreconditionViolatedError
from ..field import FieldMatrix, FieldVector, solve_in_column_span
from ..matroid import VectorMatroid


class CertificateBuilder:
    """
    Converts between index codes and matroidal certificates

    Forward: Y = [I_{n+N} | [L ; I_N]] on labels 1..n+2N with g(i) = i,
    g(c_i) = n+N+i and B = {1..n+N}, b_{n+i} = n+i.
    Backward: express every g(c_j) in the basis g(messages) + tail and
    normalise the tail coefficient d_j to 1.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.checker = CertificateChecker(self.config)
        self.logger = logging.getLogger("CertificateBuilder")
        self.logger.debug("🏛️ Certificate Builder initialized")

    def code_to_certificate(self, problem: Problem, code: IndexCode,
                            allow_zero_columns: bool = False) -> Certificate:
        """
        Build the canonical certificate of a code

        Raises:
            ZeroColumnError: when L has a zero column and allow_zero_columns is False
        """
        code.check_against(problem)
        zero = code.zero_columns()
        if zero and not allow_zero_columns:
            self.logger.warning(f"⚠️ Code has zero columns {list(zero)}")
            raise ZeroColumnError(zero[0])

        n, length = code.n, code.length
        field_ = code.field
        zeta = code.matrix.vstack(FieldMatrix.identity(field_, length))
        representation = FieldMatrix.identity(field_, n + length).hstack(zeta)
        matroid = VectorMatroid(representation, tuple(range(1, n + 2 * length + 1)))

        ground_map = GroundMap(
            message_labels=tuple(range(1, n + 1)),
            code_labels=tuple(range(n + length + 1, n + 2 * length + 1)),
        )
        certificate = Certificate(
            matroid=matroid,
            ground_map=ground_map,
            basis=frozenset(range(1, n + length + 1)),
            basis_tail=tuple(range(n + 1, n + length + 1)),
        )
        self.logger.info(f"✅ Built {representation.rows}x{representation.cols} certificate")
        return certificate

    def certificate_to_code(self, cert: Certificate) -> IndexCode:
        """
        Extract L from a certificate satisfying Conditions A and B

        Raises:
            MalformedCertificateError: shape violations
            PreconditionViolatedError: Condition A or B fails
        """
        cert.check_ground_shape()
        outcome_a = self.checker.check_condition_A(cert)
        if not outcome_a.passed:
            raise PreconditionViolatedError(outcome_a.describe(), outcome_a)
        outcome_b = self.checker.check_condition_B(cert)
        if not outcome_b.passed:
            raise PreconditionViolatedError(outcome_b.describe(), outcome_b)

        n, length = cert.n, cert.length
        field_ = cert.matroid.field
        ordered_basis = list(cert.ground_map.message_labels) + list(cert.basis_tail)
        basis_columns = FieldMatrix.from_columns(
            field_, [cert.matroid.column_of(label) for label in ordered_basis], rows=cert.matroid.rep.rows
        )

        columns = []
        for j in range(1, length + 1):
            coefficients = solve_in_column_span(basis_columns, cert.matroid.column_of(cert.ground_map.code(j)))
            if coefficients is None:
                raise PreconditionViolatedError(f"g(c_{j}) is outside the span of the basis", outcome_b)
            tail_part = coefficients.data[n:]
            d_j = int(tail_part[j - 1])
            others = np.delete(tail_part, j - 1)
            if d_j == 0 or np.any(others):
                raise PreconditionViolatedError(
                    f"g(c_{j}) is not a combination of the messages and b_{n + j} alone", outcome_b
                )
            columns.append(FieldVector(field_, coefficients.data[:n] * field_.inv(d_j)))

        code = IndexCode(FieldMatrix.from_columns(field_, columns, rows=n))
        self.logger.info(f"✅ Extracted {n}x{length} code from certificate")
        return code
