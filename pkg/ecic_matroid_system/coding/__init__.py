"""
Index coding problems, codes and the code-level verification oracles
"""

from .coding_models import (
    OracleKind,
    Problem,
    ErrorProfile,
    IndexCode,
    ErrorPattern,
    WeightWitness,
    PatternWitness,
    ReceiverVerdict,
    VerifierReport,
    DecodeOutcome,
    Collision,
)
from .verifier import CodeVerifier
from .decoder import BruteForceDecoder

__all__ = [
    'OracleKind', 'Problem', 'ErrorProfile', 'IndexCode', 'ErrorPattern',
    'WeightWitness', 'PatternWitness', 'ReceiverVerdict', 'VerifierReport',
    'DecodeOutcome', 'Collision', 'CodeVerifier', 'BruteForceDecoder',
]
