"""
Index Coding Data Models
Problems, error profiles, codes, error patterns and verifier reports

Receivers, messages and transmissions are numbered from 1 in every model;
only raw matrix positions are 0-based.
"""

from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Any, Union

import numpy as np

from ..field import PrimeField, FieldMatrix, FieldVector
from ..exceptions import (
    InvalidArgumentError,
    DemandInSideInfoError,
    IndexOutOfRangeError,
    ProblemValidationError,
)


class OracleKind(Enum):
    """Independent verification oracles"""
    WEIGHT = "weight"
    RANK = "rank"
    MATROID = "matroid"


@dataclass(frozen=True)
class Problem:
    """Index coding problem (m, n, chi, f) over F_q"""
    field: PrimeField
    m: int
    n: int
    side_info: Tuple[FrozenSet[int], ...]
    demands: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'side_info', tuple(frozenset(int(j) for j in s) for s in self.side_info))
        object.__setattr__(self, 'demands', tuple(int(f) for f in self.demands))

    @classmethod
    def create(cls, q: int, n: int, side_info: Sequence[Iterable[int]], demands: Sequence[int]) -> 'Problem':
        return cls(PrimeField(q), len(demands), n, tuple(side_info), tuple(demands))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def receivers(self) -> range:
        return range(1, self.m + 1)

    def validate(self) -> None:
        """
        Check every problem invariant

        Raises:
            InvalidArgumentError: sizes of side_info / demands disagree with m
            IndexOutOfRangeError: an index lies outside 1..n
            DemandInSideInfoError: f(i) is part of chi_i
        """
        if self.m < 1 or self.n < 1:
            raise InvalidArgumentError(f"Problem needs m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        if len(self.side_info) != self.m or len(self.demands) != self.m:
            raise InvalidArgumentError(
                f"Expected {self.m} side-information sets and demands, "
                f"got {len(self.side_info)} and {len(self.demands)}"
            )
        for i in self.receivers:
            side = self.side_info[i - 1]
            demand = self.demands[i - 1]
            outside = sorted(j for j in side if j < 1 or j > self.n)
            if outside:
                raise IndexOutOfRangeError(
                    f"Receiver R{i}: side information index {outside[0]} outside 1..{self.n}", receiver=i
                )
            if demand < 1 or demand > self.n:
                raise IndexOutOfRangeError(
                    f"Receiver R{i}: demand {demand} outside 1..{self.n}", receiver=i
                )
            if demand in side:
                raise DemandInSideInfoError(
                    f"Receiver R{i}: demanded message {demand} is already in its side information",
                    receiver=i,
                )

    def is_valid(self) -> bool:
        try:
            self.validate()
        except (ProblemValidationError, InvalidArgumentError):
            return False
        return True

    def unknowns(self, receiver: int) -> Tuple[int, ...]:
        """Messages receiver does not know, increasing"""
        side = self.side_info[receiver - 1]
        return tuple(j for j in range(1, self.n + 1) if j not in side)

    def demand_position(self, receiver: int) -> int:
        """0-based position of f(i) inside unknowns(i)"""
        return self.unknowns(receiver).index(self.demands[receiver - 1])

    def to_dict(self) -> Dict[str, Any]:
        return {
            'q': self.q,
            'm': self.m,
            'n': self.n,
            'side_info': [sorted(s) for s in self.side_info],
            'demands': list(self.demands),
        }


@dataclass(frozen=True)
class ErrorProfile:
    """Per-receiver error demands delta_1..delta_m"""
    deltas: Tuple[int, ...]

    def __post_init__(self):
        deltas = tuple(int(d) for d in self.deltas)
        if any(d < 0 for d in deltas):
            raise InvalidArgumentError(f"Error demands must be non-negative, got {deltas}")
        object.__setattr__(self, 'deltas', deltas)

    @classmethod
    def uniform(cls, m: int, delta: int) -> 'ErrorProfile':
        """Every receiver corrects delta errors"""
        return cls((delta,) * m)

    @classmethod
    def subset(cls, m: int, receivers: Iterable[int], delta: int) -> 'ErrorProfile':
        """Only the given receivers (1-based) correct delta errors"""
        chosen = set(receivers)
        return cls(tuple(delta if i in chosen else 0 for i in range(1, m + 1)))

    def __len__(self) -> int:
        return len(self.deltas)

    def delta(self, receiver: int) -> int:
        return self.deltas[receiver - 1]

    @property
    def max_delta(self) -> int:
        return max(self.deltas, default=0)

    def dominates(self, other: 'ErrorProfile') -> bool:
        """Componentwise >="""
        return len(self) == len(other) and all(a >= b for a, b in zip(self.deltas, other.deltas))

    def check_against(self, problem: Problem) -> None:
        if len(self) != problem.m:
            raise InvalidArgumentError(f"Error profile has {len(self)} entries, problem has {problem.m} receivers")


@dataclass(frozen=True)
class IndexCode:
    """Scalar linear index code given by its n x N encoding matrix L"""
    matrix: FieldMatrix

    def __post_init__(self):
        if self.matrix.cols < 1:
            raise InvalidArgumentError("An index code needs length N >= 1")

    @classmethod
    def from_rows(cls, q: Union[int, PrimeField], rows: Sequence[Sequence[int]]) -> 'IndexCode':
        field_ = q if isinstance(q, PrimeField) else PrimeField(q)
        return cls(FieldMatrix.from_rows(field_, rows))

    @property
    def field(self) -> PrimeField:
        return self.matrix.field

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def length(self) -> int:
        return self.matrix.cols

    def zero_columns(self) -> Tuple[int, ...]:
        """1-based indices of all-zero columns"""
        return tuple(j + 1 for j in range(self.length) if self.matrix.is_zero_column(j))

    def encode(self, x: FieldVector) -> FieldVector:
        if len(x) != self.n:
            raise InvalidArgumentError(f"Message vector must have length {self.n}")
        return FieldVector(self.field, x.data @ self.matrix.data)

    def check_against(self, problem: Problem) -> None:
        if self.field != problem.field:
            raise InvalidArgumentError(f"Code is over F_{self.field.q}, problem over F_{problem.q}")
        if self.n != problem.n:
            raise InvalidArgumentError(f"Code has {self.n} rows, problem has {problem.n} messages")

    def to_lists(self) -> List[List[int]]:
        return self.matrix.to_lists()


@dataclass(frozen=True)
class ErrorPattern:
    """Support set F of an error vector, 1-based transmission indices"""
    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'indices', tuple(sorted(int(j) for j in self.indices)))

    def __len__(self) -> int:
        return len(self.indices)

    def rows(self) -> List[int]:
        return [j - 1 for j in self.indices]

    def __str__(self) -> str:
        return "{" + ",".join(str(j) for j in self.indices) + "}"


@dataclass(frozen=True)
class WeightWitness:
    """Admissible z whose codeword zL is too light"""
    z: Tuple[int, ...]
    weight: int
    required: int

    def describe(self) -> str:
        return f"z=({','.join(str(v) for v in self.z)}) wt={self.weight} < {self.required}"

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': 'weight', 'z': list(self.z), 'weight': self.weight, 'required': self.required}


@dataclass(frozen=True)
class PatternWitness:
    """Error pattern at which the demand leaves the span"""
    receiver: int
    pattern: ErrorPattern

    def describe(self) -> str:
        return f"pattern {self.pattern}"

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': 'pattern', 'receiver': self.receiver, 'pattern': list(self.pattern.indices)}


Witness = Union[WeightWitness, PatternWitness]


@dataclass(frozen=True)
class ReceiverVerdict:
    """Outcome of one oracle at one receiver"""
    receiver: int
    passed: bool
    witness: Optional[Witness] = None
    infeasible: bool = False

    def describe(self) -> str:
        if self.passed:
            return f"R{self.receiver}: pass"
        if self.infeasible:
            return f"R{self.receiver}: infeasible profile (2*delta > N) (fail)"
        return f"R{self.receiver}: {self.witness.describe()} (fail)"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'receiver': self.receiver,
            'passed': self.passed,
            'infeasible': self.infeasible,
            'witness': self.witness.to_dict() if self.witness else None,
        }


@dataclass(frozen=True)
class VerifierReport:
    """
    Per-receiver verdicts of one oracle

    global_failure is set when the matroidal oracle rejects before reaching
    the receivers (Condition A or B); verdicts is then empty.
    """
    oracle: OracleKind
    verdicts: Tuple[ReceiverVerdict, ...]
    global_failure: Optional[str] = None

    @property
    def overall(self) -> bool:
        return self.global_failure is None and all(v.passed for v in self.verdicts)

    @property
    def passed_count(self) -> int:
        return sum(1 for v in self.verdicts if v.passed)

    @property
    def failed_receivers(self) -> Tuple[int, ...]:
        return tuple(v.receiver for v in self.verdicts if not v.passed)

    def verdict(self, receiver: int) -> ReceiverVerdict:
        for v in self.verdicts:
            if v.receiver == receiver:
                return v
        raise KeyError(receiver)

    def verdict_pattern(self) -> Tuple[bool, ...]:
        return tuple(v.passed for v in self.verdicts)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'oracle': self.oracle.value,
            'overall': self.overall,
            'passed': self.passed_count,
            'receivers': len(self.verdicts),
            'global_failure': self.global_failure,
            'verdicts': [v.to_dict() for v in self.verdicts],
        }


@dataclass(frozen=True)
class DecodeOutcome:
    """Brute-force decoding result; value is None when ambiguous"""
    value: Optional[int]
    candidates: Tuple[int, ...] = dc_field(default_factory=tuple)

    @property
    def ambiguous(self) -> bool:
        return self.value is None


@dataclass(frozen=True)
class Collision:
    """Two message vectors that agree on chi_i, differ at f(i) and collide after errors"""
    receiver: int
    x: FieldVector
    x_prime: FieldVector
    error: FieldVector
    error_prime: FieldVector
    received: FieldVector

    def side_values(self, problem: Problem) -> Dict[int, int]:
        return {j: self.x[j - 1] for j in sorted(problem.side_info[self.receiver - 1])}


def as_field_vector(field_: PrimeField, values: Union[FieldVector, Sequence[int], np.ndarray]) -> FieldVector:
    if isinstance(values, FieldVector):
        return values
    return FieldVector(field_, np.asarray(values, dtype=np.int64))
