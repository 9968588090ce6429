"""Exception hierarchy shared by all toricheck modules."""


class ToricheckError(Exception):
    """Base class for all errors raised by this package."""


class GraphFormatError(ToricheckError):
    """The graph description (JSON) does not match the expected schema."""


class GraphValidationError(ToricheckError):
    """A structurally well-formed graph violates a semantic invariant."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InvalidParameterError(ToricheckError):
    """A parameter index is outside the range 1..num_params, or empty."""


class NotDisciplinedError(ToricheckError):
    """Resolution is impossible: a loop carries a mixed-support label."""

    def __init__(self, edge_id):
        self.edge_id = edge_id
        super().__init__(f"loop edge {edge_id!r} has label supported on more "
                         f"than one parameter; no regular nodal model exists")


class SizeLimitError(ToricheckError):
    """A brute-force oracle was asked to handle an input above its cap."""


class InternalInvariantError(ToricheckError):
    """An always-true mathematical invariant failed: implementation bug."""
