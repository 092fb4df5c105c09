"""
Exception hierarchy for the trimodule lab.

Structural problems (wrong shapes, mixed bases, failed corestrictions) raise.
Failures of algebraic laws are reported as values in a ``Report`` instead.
"""

from typing import Optional


class TrimoduleLabError(Exception):
    """Base class for every error raised by the package."""


class ShapeError(TrimoduleLabError):
    """Matrix dimensions do not fit the structure being built or checked."""


class FieldMismatchError(TrimoduleLabError):
    """Two operands live over different ground fields."""


class UnsupportedFieldError(TrimoduleLabError):
    """The operation is not available in the given characteristic."""


class BaseMismatchError(TrimoduleLabError):
    """Comodules or trimodules over different base bialgebras were combined."""


class NotAMonoidError(TrimoduleLabError):
    """A multiplication table is not associative or has no identity."""


class GradingError(TrimoduleLabError):
    """A graded construction was requested over a base that is not pointed."""


class CorestrictionError(TrimoduleLabError):
    """A map was expected to land inside a subspace and does not."""

    def __init__(self, containment: str, message: Optional[str] = None):
        self.containment = containment
        super().__init__(message or f"image does not lie in {containment}")


class DescentError(TrimoduleLabError):
    """A structure map does not descend to a quotient."""


class ProvenanceError(TrimoduleLabError):
    """A module was expected to remember the comodule it is free on."""


class CertificationError(TrimoduleLabError):
    """A computed object failed the property that characterizes it."""


class PreconditionError(TrimoduleLabError):
    """A checked precondition of an operation does not hold."""


class InvariantViolation(TrimoduleLabError):
    """Two computations that must agree disagree."""


class ParseError(TrimoduleLabError):
    """A structure file violates the schema."""

    def __init__(self, rule: str, location: str, detail: str = ""):
        self.rule = rule
        self.location = location
        self.detail = detail
        text = f"{rule} at {location}"
        if detail:
            text = f"{text}: {detail}"
        super().__init__(text)
