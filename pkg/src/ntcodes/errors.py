"""Exception hierarchy shared by every module."""


class NTCodesError(Exception):
    """Base class for toolkit errors."""


class DimensionError(NTCodesError, ValueError):
    """Objects with different (m, q) were combined."""


class DomainError(NTCodesError, ValueError):
    """A parameter lies outside the domain of an operation."""


class UndefinedMetricError(NTCodesError, ValueError):
    """A metric was requested on a code too small to define it."""


class MembershipError(NTCodesError, ValueError):
    """A vertex expected to be a codeword is not in the code."""


class PreconditionError(NTCodesError, ValueError):
    """An operation's precondition does not hold."""


class CapacityError(NTCodesError, RuntimeError):
    """A computation would exceed a configured size cap."""


class FormatError(NTCodesError, ValueError):
    """A file does not conform to its declared format."""
