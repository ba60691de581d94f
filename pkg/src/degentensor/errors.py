"""Exception types shared across the package."""


class DegentensorError(Exception):
    pass


class DimensionError(DegentensorError, ValueError):
    """Shapes or lengths do not match."""


class FormatError(DegentensorError, ValueError):
    """The tensor format is not supported by the requested operation."""


class ZeroTensorError(DegentensorError, ValueError):
    pass


class SingularMatrixError(DegentensorError, ValueError):
    pass


class PreconditionError(DegentensorError, ValueError):
    """An operation was called outside its mathematical hypotheses."""
