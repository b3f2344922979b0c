"""Exception types raised across the package."""


class JackMapsError(ValueError):
    """Base class for all errors raised by jackmaps."""


class NotExpressible(JackMapsError):
    """A Laurent polynomial in A is not a polynomial in gamma = -A + 1/A."""


class NotLaurent(JackMapsError):
    """A rational function did not reduce to a Laurent polynomial."""


class TooLarge(JackMapsError):
    """Input exceeds the resource guard of an exhaustive routine."""


class EmptyDiagram(JackMapsError):
    pass


class SizeMismatch(JackMapsError):
    pass


class UnknownEdge(JackMapsError):
    pass


class Inconsistent(JackMapsError):
    """An exact linear system has no solution (or fails verification)."""

    def __init__(self, message, rank_defect=None):
        super().__init__(message)
        self.rank_defect = rank_defect


class Underdetermined(JackMapsError):
    """An exact linear system has more than one solution."""

    def __init__(self, message, rank_defect=None):
        super().__init__(message)
        self.rank_defect = rank_defect


class AmbiguousChoice(JackMapsError):
    """Ribbon insertion step where the two sides offer different numbers of choices."""


class InvalidMap(JackMapsError):
    """Malformed permutation pair or ribbon graph."""
