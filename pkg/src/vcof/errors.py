"""Exception types.

Law failures are never raised; they are reported. Exceptions are kept for
data that cannot even be fed through a diagram.
"""


class VcofError(Exception):
    pass


class BaseMismatchError(VcofError):
    """A value was handed to a base that did not create it."""


class StructuralError(VcofError):
    """Structure data is missing or has the wrong domain/codomain."""


class BoundaryError(VcofError):
    """Two structures cannot be composed or compared because their boundaries differ."""


class EnumerationBoundError(VcofError):
    def __init__(self, size, bound):
        super().__init__(f"candidate space of size {size} exceeds enumeration bound {bound}")
        self.size = size
        self.bound = bound


class LawError(VcofError):
    """An operation that requires lawful input was given data that fails its check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
