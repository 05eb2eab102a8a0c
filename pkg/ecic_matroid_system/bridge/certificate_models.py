"""
Certificate Data Models
Matroidal certificates for index codes and the outcomes of their condition checks
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Optional, Tuple

from ..coding import ErrorPattern, PatternWitness, ReceiverVerdict
from ..exceptions import MalformedCertificateError
from ..matroid import VectorMatroid


@dataclass(frozen=True)
class GroundMap:
    """g on the messages 1..n and on the transmissions c_1..c_N"""
    message_labels: Tuple[int, ...]
    code_labels: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'message_labels', tuple(int(l) for l in self.message_labels))
        object.__setattr__(self, 'code_labels', tuple(int(l) for l in self.code_labels))

    @property
    def n(self) -> int:
        return len(self.message_labels)

    @property
    def length(self) -> int:
        return len(self.code_labels)

    def message(self, index: int) -> int:
        """g(index) for a 1-based message index"""
        return self.message_labels[index - 1]

    def code(self, index: int) -> int:
        """g(c_index) for a 1-based transmission index"""
        return self.code_labels[index - 1]


@dataclass(frozen=True)
class Certificate:
    """
    (M, g, B) with the basis tail b_{n+1..n+N} paired in order with c_1..c_N
    """
    matroid: VectorMatroid
    ground_map: GroundMap
    basis: FrozenSet[int]
    basis_tail: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'basis', frozenset(int(l) for l in self.basis))
        object.__setattr__(self, 'basis_tail', tuple(int(l) for l in self.basis_tail))

    @property
    def n(self) -> int:
        return self.ground_map.n

    @property
    def length(self) -> int:
        return self.ground_map.length

    def tail(self, index: int) -> int:
        """b_{n+index}"""
        return self.basis_tail[index - 1]

    def check_ground_shape(self) -> None:
        """
        |E| = n + 2N, r(M) = n + N, every g-image in E, code labels distinct and
        disjoint from message labels

        Raises:
            MalformedCertificateError
        """
        n, length = self.n, self.length
        ground = self.matroid.ground_set
        if length < 1:
            raise MalformedCertificateError("Certificate maps no transmissions (N = 0)")
        if len(ground) != n + 2 * length:
            raise MalformedCertificateError(
                f"Ground set has {len(ground)} elements, expected n + 2N = {n + 2 * length}"
            )
        matroid_rank = self.matroid.rank()
        if matroid_rank != n + length:
            raise MalformedCertificateError(f"Matroid rank is {matroid_rank}, expected n + N = {n + length}")
        stray = sorted(set(self.ground_map.message_labels + self.ground_map.code_labels) - ground)
        if stray:
            raise MalformedCertificateError(f"Labels {stray} of g are not in the ground set")
        code = self.ground_map.code_labels
        if len(set(code)) != len(code):
            raise MalformedCertificateError(f"Code labels {list(code)} are not distinct")
        shared = sorted(set(code) & set(self.ground_map.message_labels))
        if shared:
            raise MalformedCertificateError(f"Labels {shared} are used for both messages and transmissions")

    def check_basis_shape(self) -> None:
        """
        B is a basis containing g(messages) and the tail lists B - g(messages)

        Raises:
            MalformedCertificateError
        """
        messages = set(self.ground_map.message_labels)
        if len(self.basis_tail) != self.length:
            raise MalformedCertificateError(
                f"Basis tail has {len(self.basis_tail)} labels, expected N = {self.length}"
            )
        if len(set(self.basis_tail)) != len(self.basis_tail):
            raise MalformedCertificateError(f"Basis tail {list(self.basis_tail)} repeats a label")
        if not messages <= self.basis:
            raise MalformedCertificateError("Basis does not contain the message labels")
        if set(self.basis_tail) != self.basis - messages:
            raise MalformedCertificateError("Basis tail is not B minus the message labels")
        if not self.basis <= self.matroid.ground_set:
            raise MalformedCertificateError(f"Basis labels {sorted(self.basis - self.matroid.ground_set)} not in E")
        if len(self.basis) != self.matroid.rank() or not self.matroid.is_independent(self.basis):
            raise MalformedCertificateError(f"{sorted(self.basis)} is not a basis of the matroid")

    def with_basis(self, basis: FrozenSet[int], basis_tail: Tuple[int, ...]) -> 'Certificate':
        return Certificate(self.matroid, self.ground_map, basis, basis_tail)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'q': self.matroid.field.q,
            'representation': self.matroid.rep.to_lists(),
            'labels': list(self.matroid.labels),
            'message_labels': list(self.ground_map.message_labels),
            'code_labels': list(self.ground_map.code_labels),
            'basis': sorted(self.basis),
            'basis_tail': list(self.basis_tail),
        }


@dataclass(frozen=True)
class ConditionAOutcome:
    """g one-one on the messages and g(messages) independent"""
    passed: bool
    duplicate_labels: Tuple[int, ...] = ()
    dependent: bool = False

    def describe(self) -> str:
        if self.passed:
            return "Condition A: pass"
        if self.duplicate_labels:
            return f"Condition A: g is not one-one, labels {list(self.duplicate_labels)} repeat (fail)"
        return "Condition A: message labels are dependent (fail)"


@dataclass(frozen=True)
class ColumnCheck:
    """B1 and B2 for one transmission c_i"""
    index: int
    b1: bool
    b2: bool
    ranks: Tuple[int, int, int]
    common_rank: bool

    @property
    def passed(self) -> bool:
        return self.b1 and self.b2


@dataclass(frozen=True)
class ConditionBOutcome:
    """
    Per-transmission B1/B2 results

    common_rank records the secondary check that the three B2 ranks equal n + 1.
    """
    checks: Tuple[ColumnCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def b1_failures(self) -> Tuple[int, ...]:
        return tuple(c.index for c in self.checks if not c.b1)

    @property
    def b2_failures(self) -> Tuple[int, ...]:
        return tuple(c.index for c in self.checks if not c.b2)

    def describe(self) -> str:
        if self.passed:
            return "Condition B: pass"
        parts = []
        if self.b1_failures:
            parts.append(f"B1 fails at c_{self.b1_failures[0]}")
        if self.b2_failures:
            parts.append(f"B2 fails at c_{self.b2_failures[0]}")
        return f"Condition B: {', '.join(parts)} (fail)"


@dataclass(frozen=True)
class ConditionCOutcome:
    """Per-receiver span checks on every contraction M / B_{F,i}"""
    verdicts: Tuple[ReceiverVerdict, ...]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def witness(self) -> Optional[PatternWitness]:
        for v in self.verdicts:
            if not v.passed:
                return v.witness
        return None


@dataclass(frozen=True)
class ContractionEntry:
    """One row of a contraction table: the matroid M / B_{F,i} and its span verdict"""
    receiver: int
    pattern: ErrorPattern
    contracted: FrozenSet[int]
    matroid: VectorMatroid
    demand_label: int
    code_labels: Tuple[int, ...]
    in_span: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'receiver': self.receiver,
            'pattern': list(self.pattern.indices),
            'contracted': sorted(self.contracted),
            'labels': list(self.matroid.labels),
            'representation': self.matroid.rep.to_lists(),
            'demand_label': self.demand_label,
            'in_span': self.in_span,
        }


@dataclass(frozen=True)
class EquivalenceOutcome:
    """Verdicts of the three oracles on one instance"""
    weight: bool
    rank: bool
    matroid: Optional[bool]
    zero_columns: Tuple[int, ...] = ()

    @property
    def agree(self) -> bool:
        if self.zero_columns:
            # the certificate must have been rejected
            return self.matroid is None and self.weight == self.rank
        return self.weight == self.rank == self.matroid

    def to_dict(self) -> Dict[str, Any]:
        return {
            'weight': self.weight,
            'rank': self.rank,
            'matroid': self.matroid,
            'zero_columns': list(self.zero_columns),
            'agree': self.agree,
        }
