"""Exception hierarchy shared by every subgroup_graphs module."""


class SubgroupGraphError(Exception):
    """Base class for all errors raised by subgroup_graphs."""


class InvalidParameters(SubgroupGraphError):
    """A family specification violates its arithmetic side conditions."""


class OrderBudgetExceeded(SubgroupGraphError):
    """A group (or product) would exceed the configured maximum order."""


class AmbientMismatch(SubgroupGraphError):
    """Two subgroups belong to different ambient groups."""


class NotADivisor(SubgroupGraphError):
    """A prime does not divide the group order."""


class MalformedExpression(SubgroupGraphError):
    """A graph expression cannot be parsed or evaluated."""


class SearchBudgetExceeded(SubgroupGraphError):
    """An exact combinatorial search ran out of nodes."""

    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes


class InvalidScheme(SubgroupGraphError):
    """An embedding scheme does not match its graph."""


class OutOfRange(SubgroupGraphError):
    """Closed-form parameters fall outside the formula's domain."""


class UnsupportedFormat(SubgroupGraphError):
    """An export or input format is not known."""
