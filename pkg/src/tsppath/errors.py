"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all tsppath errors."""


class ParseError(Error):
    """Instance text is structurally malformed (bad token or row count)."""


class AsymmetryError(Error):
    """Distance matrix has dist(i, j) != dist(j, i) for some pair."""


class DomainError(Error):
    """A value violates its documented domain (range, sign, or shape)."""


class InvalidPathError(Error):
    """Path has wrong endpoints or is not a permutation of all cities."""


class SizeError(Error):
    """Instance is larger than a solver's size cap allows."""


class InsufficientDataError(Error):
    """Not enough records to compute the requested statistic."""
