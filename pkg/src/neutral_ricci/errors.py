"""Exception hierarchy.

Every error raised by the pipeline derives from :class:`ClassificationError`
and carries an optional ``stage`` label naming the pipeline step that failed.
"""


class ClassificationError(Exception):
    """Base class; ``stage`` names the pipeline step, when known."""

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage

    def __str__(self):
        msg = super().__str__()
        return f"[{self.stage}] {msg}" if self.stage else msg


class ValidationError(ClassificationError):
    """Input rejected before any classification work."""


class AsymmetryViolation(ValidationError):
    pass


class TraceViolation(ValidationError):
    pass


class ConstraintViolation(ValidationError):
    """Canonical parameters break the type's linear eigenvalue constraint."""


class DegeneracyViolation(ValidationError):
    """Canonical parameters coincide where the requested subtype forbids it."""


class InconsistencyError(ClassificationError):
    """Internal consistency check failed (a bug or a conditioning problem)."""


class InconsistentPattern(InconsistencyError):
    pass


class NoAnnihilation(InconsistencyError):
    pass


class UnknownSymbol(InconsistencyError):
    def __init__(self, message, symbol=None, stage=None):
        super().__init__(message, stage=stage)
        self.symbol = symbol


class EdgeViolation(InconsistencyError):
    pass


class NotApplicable(ClassificationError):
    pass
