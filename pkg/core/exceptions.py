"""Error hierarchy shared by every app.

All classes derive from ValueError so callers that guard with
``except ValueError`` keep catching rejected input.
"""


class AlgebraError(ValueError):
    """Base class for rejected input anywhere in the engine."""


class DimensionMismatchError(AlgebraError):
    """Two group elements or forms with different n were combined."""


class CapacityError(AlgebraError):
    """A desk-scale cap (enumeration, exhaustive loop, table size) was exceeded."""


class StructureError(AlgebraError):
    """Structure constants, unit or degree map are malformed."""


class ParentMismatchError(AlgebraError):
    """Elements of different algebras were combined."""


class PreconditionError(AlgebraError):
    """An operation was called on input that does not meet its precondition."""


class DocumentError(AlgebraError):
    """An algebra document could not be read, parsed or validated."""
