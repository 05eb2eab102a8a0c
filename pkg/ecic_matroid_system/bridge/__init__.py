"""
Code to matroid correspondence: certificates, condition checks, construction and extraction
"""

from .certificate_models import (
    GroundMap,
    Certificate,
    ConditionAOutcome,
    ColumnCheck,
    ConditionBOutcome,
    ConditionCOutcome,
    ContractionEntry,
    EquivalenceOutcome,
)
from .conditions import CertificateChecker
from .construction import CertificateBuilder
from .equivalence import EquivalenceHarness

__all__ = [
    'GroundMap', 'Certificate', 'ConditionAOutcome', 'ColumnCheck', 'ConditionBOutcome',
    'ConditionCOutcome', 'ContractionEntry', 'EquivalenceOutcome',
    'CertificateChecker', 'CertificateBuilder', 'EquivalenceHarness',
]
