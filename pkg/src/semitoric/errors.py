"""Exception hierarchy shared by the whole package."""


class SemitoricError(Exception):
    """Base class for every error raised by this package."""


class GeometryError(SemitoricError):
    """Degenerate or non-exact geometric input (zero vectors, floats, ...)."""


class DomainError(SemitoricError):
    """A well-formed value was passed to an operation that does not apply to it."""


class ClassificationError(SemitoricError):
    """A vertex fits none of the three vertex classes, or its cut data is inconsistent."""


class ValidationFailure(SemitoricError):
    """A polygon failed validation.  Carries the full report on ``.report``."""

    def __init__(self, report):
        self.report = report
        summary = "; ".join(f"{v.rule} at {v.location}" for v in report.violations)
        super().__init__(f"invalid polygon: {summary}")


class PresentationError(SemitoricError):
    """A cut switch produced an inconsistent presentation (bug or bad input)."""


class ParseError(SemitoricError):
    """Malformed polygon text."""
