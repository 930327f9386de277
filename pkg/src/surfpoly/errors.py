"""Exception types shared across the package."""


class SurfpolyError(Exception):
    """Base class for all errors raised by surfpoly."""


class InvalidPremap(SurfpolyError):
    """A permutation triple violates the premap axioms."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"invalid premap: {report.summary()}")


class EdgeOutOfRange(SurfpolyError, IndexError):
    pass


class MalformedRotation(SurfpolyError):
    pass


class SpecOutOfRange(SurfpolyError):
    """Bouquet parameters outside the admissible range."""


class ParseError(SurfpolyError):
    """Input text does not conform to a supported file format."""


class ValidationError(SurfpolyError):
    """Parsed data is well-formed but semantically invalid."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class NegativeExponentRemains(SurfpolyError):
    """A Laurent substitution left a negative exponent in the result."""


class SubsetCapExceeded(SurfpolyError):
    def __init__(self, edges, cap):
        self.edges = edges
        self.cap = cap
        super().__init__(
            f"map has {edges} edges; subset expansion capped at {cap} "
            f"(raise max_edges to override)"
        )


class BudgetExceeded(SurfpolyError):
    pass


class NotConnected(SurfpolyError):
    pass


class NotAbelian(SurfpolyError):
    pass


class UnknownGroup(SurfpolyError, KeyError):
    pass


class MethodDisagreement(SurfpolyError):
    """Independent counting methods returned different values."""
