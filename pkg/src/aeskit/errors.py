"""Exception hierarchy for aeskit."""

from __future__ import annotations


class AesError(Exception):
    """Base class for every error raised by the toolkit."""


class GraphError(AesError, ValueError):
    """Invalid graph construction input (loops, out-of-range vertices)."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class ContractError(AesError, ValueError):
    """An operation was called outside its documented precondition."""


class ParameterError(AesError, ValueError):
    """A numeric parameter (r, k, degrees, sizes) is out of range."""


class InfeasibleError(ParameterError):
    """A construction target cannot be realized with nonnegative part sizes."""

    def __init__(self, message: str, constraint: str):
        super().__init__(message)
        self.constraint = constraint


class SpecInconsistencyError(AesError, ValueError):
    """Real part sizes do not add up to the vertex count within tolerance."""

    def __init__(self, message: str, real_sum, n: int):
        super().__init__(message)
        self.real_sum = real_sum
        self.n = n


class WitnessError(ContractError):
    """The input graph contains a forbidden clique or short odd cycle."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


class HypothesisError(ContractError):
    """The degree hypothesis required by a strict extraction does not hold."""

    def __init__(self, message: str, verdict):
        super().__init__(message)
        self.verdict = verdict


class Graph6Error(AesError, ValueError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
