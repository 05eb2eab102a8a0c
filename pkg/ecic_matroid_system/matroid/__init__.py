"""
Vector matroids over prime fields: rank oracle, closure, contraction and axiom checks
"""

from .vector_matroid import VectorMatroid, LabelSet, check_axioms
from .perturbation import RepresentationPerturber, PerturbationKind

__all__ = ['VectorMatroid', 'LabelSet', 'check_axioms', 'RepresentationPerturber', 'PerturbationKind']
