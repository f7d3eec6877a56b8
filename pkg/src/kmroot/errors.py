"""Exception hierarchy. Every error names the offending entry or argument."""

from __future__ import annotations


class KMRootError(ValueError):
    """Base class for all errors raised by this package."""


# --- cartan -----------------------------------------------------------------

class NotSquare(KMRootError):
    pass


class BadDiagonal(KMRootError):
    def __init__(self, i: int, value: int):
        self.i = i
        super().__init__(f"diagonal entry ({i},{i}) is {value}, expected 2")


class PositiveOffDiagonal(KMRootError):
    def __init__(self, i: int, j: int, value: int):
        self.i, self.j = i, j
        super().__init__(f"off-diagonal entry ({i},{j}) is {value} > 0")


class AsymmetricZero(KMRootError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"entry ({i},{j}) is zero but ({j},{i}) is not")


class RankTooLarge(KMRootError):
    pass


class NotConnected(KMRootError):
    pass


class NotIndefinite(KMRootError):
    pass


# --- catalog ----------------------------------------------------------------

class UnknownName(KMRootError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown name"


class RankOutOfRange(KMRootError):
    pass


# --- lattice ----------------------------------------------------------------

class HostMismatch(KMRootError):
    pass


class IndexOutOfRange(KMRootError, IndexError):
    pass


class NotNormTwo(KMRootError):
    pass


class NotAffine(KMRootError):
    pass


class NormalizationFailed(KMRootError):
    pass


class SingularMatrix(KMRootError):
    pass


class TheoremHypothesisViolated(KMRootError):
    pass


class NegativeCoordinates(KMRootError):
    pass


# --- embed ------------------------------------------------------------------

class EmbeddingError(KMRootError):
    pass


class NotRealRoot(EmbeddingError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"root {i} is not a real root of the host")


class NotPositive(EmbeddingError):
    def __init__(self, i: int):
        self.i = i
        super().__init__(f"root {i} has a negative coordinate")


class PositivePairing(EmbeddingError):
    def __init__(self, i: int, j: int, value: int):
        self.i, self.j = i, j
        super().__init__(f"roots {i} and {j} pair to {value} > 0")


class TooManyRoots(EmbeddingError):
    pass


class NoDesignatedZero(EmbeddingError):
    pass


class BadVertex(EmbeddingError):
    pass


class NotAChain(EmbeddingError):
    pass


class BadParameter(EmbeddingError):
    pass


class UnknownTarget(EmbeddingError):
    pass


class NoExtension(EmbeddingError):
    pass


class ParseError(KMRootError):
    def __init__(self, msg: str, line: int = 0, column: int = 0):
        self.line, self.column = line, column
        super().__init__(f"line {line}, column {column}: {msg}")
