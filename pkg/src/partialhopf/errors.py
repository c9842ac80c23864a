"""Exception hierarchy shared by all modules."""


class PartialHopfError(Exception):
    """Base class for library errors."""


class StructuralError(PartialHopfError, ValueError):
    """Inputs have inconsistent shapes, unknown indices or malformed data."""


class FieldMismatchError(StructuralError):
    """Scalars from two different fields met in one computation."""


class UnsupportedFieldError(PartialHopfError):
    """The field characteristic violates a construction's hypothesis."""


class VerificationError(PartialHopfError):
    """A mathematical precondition failed.

    ``witness`` carries the failing indices so callers can report them.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
