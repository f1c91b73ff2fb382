"""Exception hierarchy shared by every module."""


class ConvexDiffError(Exception):
    """Base class for all package errors."""


class InvalidInput(ConvexDiffError):
    """A set, scalar, or serialized payload violates its schema."""


class InvalidMatching(ConvexDiffError):
    """Matching indices are out of range or reuse an element."""


class InvalidParams(ConvexDiffError):
    """Construction parameters are out of the supported range."""


class NoSplice(ConvexDiffError):
    """No valid splice point exists for a glue step."""


class InsufficientN(ConvexDiffError):
    """The base set is too small for the requested matching."""


class TooLarge(ConvexDiffError):
    """Input exceeds an exhaustive-search or memory guard."""
