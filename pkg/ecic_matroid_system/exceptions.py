"""
Exception hierarchy for the ECIC Matroid System
Verification failures are verdicts, not exceptions: these signal misuse or malformed input.
"""

from typing import Optional, Any


class IndexCodingError(Exception):
    """Base class for every error raised by the package"""
    pass


class InvalidArgumentError(IndexCodingError, ValueError):
    """Dimension mismatch, bad modulus or bad label values"""
    pass


class ConfigurationError(IndexCodingError):
    """Configuration related errors"""
    pass


class ProblemValidationError(IndexCodingError):
    """An index coding problem violates one of its invariants"""

    def __init__(self, message: str, receiver: Optional[int] = None):
        super().__init__(message)
        self.receiver = receiver


class DemandInSideInfoError(ProblemValidationError):
    """f(i) is part of the side information of receiver i"""
    pass


class IndexOutOfRangeError(ProblemValidationError):
    """A side-information or demand index lies outside 1..n"""
    pass


class InfeasibleProfileError(IndexCodingError):
    """2*delta_i exceeds the code length, so no error pattern of the required size exists"""

    def __init__(self, receiver: int, delta: int, length: int):
        super().__init__(
            f"Receiver R{receiver}: infeasible profile, 2*delta={2 * delta} > N={length}"
        )
        self.receiver = receiver
        self.delta = delta
        self.length = length


class UnknownLabelError(IndexCodingError, KeyError):
    """A label is not part of the matroid ground set"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown label"


class DependentSetError(IndexCodingError):
    """A label set expected to be independent is dependent"""
    pass


class GroundSetTooLargeError(IndexCodingError):
    """Exhaustive enumeration over the ground set was refused"""
    pass


class MalformedCertificateError(IndexCodingError):
    """A certificate violates the shape fixed by the matroidal definition"""
    pass


class ZeroColumnError(IndexCodingError):
    """The code matrix has a zero column, which makes Condition B1 unsatisfiable"""

    def __init__(self, column: int):
        super().__init__(
            f"Column {column} of L is zero: Condition B1 cannot hold "
            f"(g(c_{column}) would lie in the closure of the basis tail)"
        )
        self.column = column


class PreconditionViolatedError(IndexCodingError):
    """Extraction was attempted on a certificate that fails Condition A or B"""

    def __init__(self, message: str, outcome: Any = None):
        super().__init__(message)
        self.outcome = outcome


class SearchSpaceTooLargeError(IndexCodingError):
    """Exhaustive refutation would enumerate more candidates than allowed"""

    def __init__(self, candidates: int, ceiling: int):
        super().__init__(
            f"Exhaustive enumeration needs {candidates} candidates, ceiling is {ceiling}"
        )
        self.candidates = candidates
        self.ceiling = ceiling


class InstanceParseError(IndexCodingError):
    """An instance or certificate file could not be parsed"""

    def __init__(self, path: str, message: str, field: Optional[str] = None,
                 line: Optional[int] = None):
        location = f"{path}"
        if line is not None:
            location += f":{line}"
        if field is not None:
            location += f" [{field}]"
        super().__init__(f"{location}: {message}")
        self.path = path
        self.field = field
        self.line = line
