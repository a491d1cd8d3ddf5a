"""Exception types shared across the library."""


class CyclographError(ValueError):
    """Base class for all errors raised by this package."""


class NotSquare(CyclographError):
    """Input rows do not form a square matrix."""


class NotSymmetric(CyclographError):
    """Input matrix is not symmetric."""


class IndexOutOfRange(CyclographError, IndexError):
    """A vertex index lies outside the host graph."""


class SizeMismatch(CyclographError):
    """Operands have incompatible sizes."""


class NotMonic(CyclographError):
    """Polynomial operation requires a monic input."""


class NotSquarefree(CyclographError):
    """Polynomial operation requires a squarefree input."""


class EmptyMatrix(CyclographError):
    """Operation undefined for the 0-vertex matrix."""


class TooLarge(CyclographError):
    """Input exceeds the configured size limit."""


class UnknownName(CyclographError, KeyError):
    """No catalog entry with the requested name."""


class BadK(CyclographError):
    """Invalid size parameter for a tesselation family."""


class BadArm(CyclographError):
    """Invalid arm length for a starlike tree."""


class Disconnected(CyclographError):
    """Operation requires a connected graph."""


class RankTooSmall(CyclographError):
    """Profile machinery requires path rank at least 5."""


class NoProfile(CyclographError):
    """No column placement is consistent with the adjacency structure."""


class BoundTooLarge(CyclographError):
    """Scan bound exceeds the range the growing argument covers."""


class GuardExceeded(CyclographError):
    """A growth scan hit the vertex-count guard instead of terminating."""


class CaseFailed(CyclographError):
    """A degree-bound computer check found a counterexample."""


class MismatchReport(CyclographError):
    """Classification verification found missing or extra classes."""


class RowMismatch(CyclographError):
    """A computed table row disagrees with the reference value."""
