"""
Search Data Models
Search requests, per-length outcomes and results
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from ..coding import Problem, ErrorProfile, IndexCode
from ..exceptions import InvalidArgumentError


class SearchMode(Enum):
    """How candidate codes are produced"""
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class LengthStatus(Enum):
    """What the search established about one code length"""
    REFUTED_BY_BOUND = "refuted_by_bound"   # N < 2*delta_i + 1 for some receiver
    REFUTED = "refuted"                     # every canonical candidate failed
    FOUND = "found"
    NOT_REFUTED = "not_refuted"             # random budget spent without a hit


@dataclass(frozen=True)
class SearchSpec:
    """A search request"""
    problem: Problem
    profile: ErrorProfile
    n_min: int = 1
    n_max: int = 8
    mode: SearchMode = SearchMode.EXHAUSTIVE
    budget: Optional[int] = None
    seed: int = 0

    def validate(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise InvalidArgumentError(f"Invalid length range {self.n_min}..{self.n_max}")
        if self.budget is not None and self.budget < 1:
            raise InvalidArgumentError("Random search budget must be positive")


@dataclass(frozen=True)
class LengthOutcome:
    """Result for a single length N"""
    length: int
    status: LengthStatus
    candidates: int = 0

    @property
    def exhausted(self) -> bool:
        return self.status in (LengthStatus.REFUTED, LengthStatus.REFUTED_BY_BOUND)

    def describe(self) -> str:
        if self.status == LengthStatus.FOUND:
            return f"N={self.length} found"
        if self.status == LengthStatus.REFUTED_BY_BOUND:
            return f"N={self.length} refuted (weight bound)"
        if self.status == LengthStatus.REFUTED:
            return f"N={self.length} refuted ({self.candidates} canonical candidates)"
        return f"N={self.length} not refuted ({self.candidates} random candidates, none passed)"


@dataclass(frozen=True)
class SearchResult:
    """First passing code (if any) and what was learned about each length tried"""
    mode: SearchMode
    lengths: Tuple[LengthOutcome, ...]
    code: Optional[IndexCode] = None
    candidates_tested: int = 0

    @property
    def found(self) -> Optional[Tuple[int, IndexCode]]:
        if self.code is None:
            return None
        return self.code.length, self.code

    @property
    def exhausted(self) -> Dict[int, bool]:
        return {o.length: o.exhausted for o in self.lengths}

    @property
    def refuted_lengths(self) -> Tuple[int, ...]:
        return tuple(o.length for o in self.lengths if o.exhausted)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'mode': self.mode.value,
            'found_length': self.code.length if self.code else None,
            'code': self.code.to_lists() if self.code else None,
            'candidates_tested': self.candidates_tested,
            'lengths': [
                {'length': o.length, 'status': o.status.value, 'candidates': o.candidates}
                for o in self.lengths
            ],
        }
