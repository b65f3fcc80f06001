"""Exception types shared across the package."""


class PairGraphError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(PairGraphError, ValueError):
    """Invalid input, rejected before any construction work is done."""


class IdentityInGeneratingSet(ValidationError):
    """The identity is not allowed in a generating set (it would create loops)."""


class SymmetryViolation(ValidationError):
    """The part of a generating set inside the subgroup must be closed under inversion."""


class NotASubgroup(ValidationError):
    """Element set is not closed under multiplication and inversion."""


class NotAnAutomorphism(ValidationError):
    """Map fails the bijective-homomorphism check."""


class IndexNotTwo(ValidationError):
    """Operation requires a subgroup of index exactly 2."""


class SizeCapExceeded(ValidationError):
    """Requested object exceeds a documented size cap."""


class NotRegular(PairGraphError):
    """Operation requires a regular graph."""


class NotConnected(PairGraphError):
    """Operation requires a connected graph."""


class EigensolverError(PairGraphError):
    """The symmetric eigensolver failed to converge."""
