"""
Brute-Force Decoder - ECIC Matroid System
Exhaustive decoding at one receiver and collision construction from light codewords
"""

import logging
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from .coding_models import Problem, IndexCode, DecodeOutcome, Collision, as_field_vector
from .verifier import first_light_codeword
from ..config import EngineConfig
from ..exceptions import InvalidArgumentError
from ..field import FieldVector
from ..field.linear_algebra import all_vectors


class BruteForceDecoder:
    """
    Exhaustive decoder for a single receiver

    Tries every completion of the unknown messages and keeps those whose
    codeword lies within delta of the received word.
    """

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig()
        self.logger = logging.getLogger("BruteForceDecoder")

    def decode(self, problem: Problem, receiver: int, code: IndexCode,
               received: Union[FieldVector, Sequence[int]], side: Mapping[int, int],
               delta: int) -> DecodeOutcome:
        """
        Decode x_{f(i)} at receiver from received word and side information

        Args:
            problem: Index coding problem
            receiver: 1-based receiver index
            code: Encoding matrix
            received: Length-N received word
            side: Values of the messages in chi_i, keyed by 1-based message index
            delta: Number of errors to tolerate

        Returns:
            DecodeOutcome holding the decoded value, or ambiguous when the
            consistent completions disagree (or none exists)
        """
        received = as_field_vector(problem.field, received)
        if len(received) != code.length:
            raise InvalidArgumentError(f"Received word has length {len(received)}, code length is {code.length}")
        known = problem.side_info[receiver - 1]
        if set(side) != set(known):
            raise InvalidArgumentError(
                f"R{receiver}: side values given for {sorted(side)}, expected {sorted(known)}"
            )

        base = np.zeros(problem.n, dtype=np.int64)
        for j, value in side.items():
            base[j - 1] = int(value) % problem.q
        return self.decode_raw(problem, receiver, code.matrix.data, received.data, base, delta)

    def decode_raw(self, problem: Problem, receiver: int, matrix: np.ndarray, received: np.ndarray,
                   base: np.ndarray, delta: int) -> DecodeOutcome:
        """decode on raw arrays; base holds the side values and zeros elsewhere"""
        q = problem.q
        unknown_rows = [j - 1 for j in problem.unknowns(receiver)]
        completions = all_vectors(q, len(unknown_rows))
        messages = np.tile(base, (completions.shape[0], 1))
        messages[:, unknown_rows] = completions
        distances = np.count_nonzero((received - messages @ matrix) % q, axis=1)
        consistent = messages[distances <= delta, problem.demands[receiver - 1] - 1]
        values = tuple(sorted({int(v) for v in consistent}))
        if len(values) == 1:
            return DecodeOutcome(values[0], values)
        return DecodeOutcome(None, values)

    def find_collision(self, problem: Problem, receiver: int, code: IndexCode,
                       delta: int) -> Optional[Collision]:
        """
        Build two messages that receiver cannot tell apart under delta errors each

        Uses the first light codeword zL (weight <= 2*delta): x = 0 and x' = z agree on
        chi_i and differ at f(i); supp(zL) is split into a first part of at most delta
        positions (the error on x) and the rest, negated (the error on x').
        Returns None when no light codeword exists at this receiver.
        """
        q = problem.q
        rows = [j - 1 for j in problem.unknowns(receiver)]
        light = first_light_codeword(q, code.matrix.data[rows, :], problem.demand_position(receiver),
                                     2 * delta + 1)
        if light is None:
            return None

        z = np.zeros(problem.n, dtype=np.int64)
        z[rows] = light[0]
        codeword = (z @ code.matrix.data) % q
        support = np.flatnonzero(codeword)
        head, tail = support[:delta], support[delta:]

        error = np.zeros(code.length, dtype=np.int64)
        error[head] = codeword[head]
        error_prime = np.zeros(code.length, dtype=np.int64)
        error_prime[tail] = -codeword[tail]

        field_ = problem.field
        collision = Collision(
            receiver=receiver,
            x=FieldVector.zeros(field_, problem.n),
            x_prime=FieldVector(field_, z),
            error=FieldVector(field_, error),
            error_prime=FieldVector(field_, error_prime),
            received=FieldVector(field_, error),
        )
        self.logger.debug(f"⚠️ R{receiver}: collision built from z={tuple(int(v) for v in z)}")
        return collision
