class GroupShiftError(Exception):
    """Base class for all errors raised by groupshift."""


class InputError(GroupShiftError, ValueError):
    """Malformed or inconsistent input (unknown letters, schema violations, mismatched groups)."""


class CapacityError(GroupShiftError):
    """A search or construction exceeded its configured size budget."""


class EmptySubshiftError(GroupShiftError):
    """An operation needing a point of a subshift was given an empty one."""


class OracleUnknownError(GroupShiftError):
    """The emptiness oracle could not decide an instance the algorithm relies on."""


class ContractViolation(GroupShiftError):
    """A user-supplied procedure broke its declared contract."""


class DecodeError(GroupShiftError):
    """A recoded configuration could not be decoded at some cell."""
