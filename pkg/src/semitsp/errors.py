"""Exception types shared across the package.

Hierarchy matters for the CLI exit-code mapping: ValidationError and
ParseError map to exit 2, SolverError to exit 3.
"""


class SemitspError(Exception):
    pass


class ValidationError(SemitspError):
    """An input object violates a structural invariant."""


class AsymmetricWeight(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__(f"w[{i}][{j}] != w[{j}][{i}]")
        self.i, self.j = i, j


class NonpositiveWeight(ValidationError):
    def __init__(self, i: int, j: int):
        super().__init__(f"w[{i}][{j}] must be > 0")
        self.i, self.j = i, j


class NonzeroDiagonal(ValidationError):
    def __init__(self, i: int):
        super().__init__(f"w[{i}][{i}] must be 0")
        self.i = i


class NotAPermutation(ValidationError):
    pass


class InvalidTour(ValidationError):
    pass


class InvalidParams(ValidationError):
    pass


class InvalidConstants(ValidationError):
    pass


class SolverError(SemitspError):
    """An operation was invoked outside its supported domain."""


class TooFewVertices(SolverError):
    pass


class TooLarge(SolverError):
    pass


class SetTooLarge(SolverError):
    pass


class OddSetSize(SolverError):
    pass


class NoEdges(SolverError):
    pass


class RootNotInTree(SolverError):
    pass


class NotATraversal(SolverError):
    pass


class DisconnectedMultigraph(SolverError):
    pass


class NoMatchingEdge(SolverError):
    pass


class WalkDoesNotStartWithMatchingEdge(SolverError):
    pass


class MatchingEdgeLost(SolverError):
    pass


class ParseError(SemitspError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class InternalInvariantViolation(SemitspError):
    """A condition that is provably impossible was observed; signals a bug."""
