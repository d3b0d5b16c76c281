"""Error types raised by radiolabel.

Every error derives from :class:`RadioLabelError`, which is a ``ValueError`` so
callers that only care about "bad input" can catch the builtin. Each subclass
keeps the offending values as attributes for structured reporting.
"""

from typing import Any


class RadioLabelError(ValueError):
    """Base class for all radiolabel errors."""

    def as_dict(self) -> dict[str, Any]:
        """Return the error as a JSON-friendly dictionary."""
        fields = {
            key: value
            for key, value in vars(self).items()
            if not key.startswith("_")
        }
        return {"error": type(self).__name__, "message": str(self), **fields}


class InvalidGraphError(RadioLabelError):
    """The edge list or role map does not describe a simple graph."""


class DisconnectedGraphError(RadioLabelError):
    """No path joins two vertices of the graph."""

    def __init__(self, u: int, v: int) -> None:
        self.u = u
        self.v = v
        super().__init__(f"graph is disconnected: vertex {v} unreachable from {u}")


class InvalidVertexError(RadioLabelError):
    """A vertex id outside ``0 .. n_vertices - 1``."""

    def __init__(self, vertex: int, n_vertices: int) -> None:
        self.vertex = vertex
        self.n_vertices = n_vertices
        super().__init__(
            f"vertex {vertex} out of range for a graph on {n_vertices} vertices"
        )


class FamilyParameterError(RadioLabelError):
    """A family parameter is below the family's minimum."""

    def __init__(self, family: str, parameter: str, minimum: int, value: int) -> None:
        self.family = family
        self.parameter = parameter
        self.minimum = minimum
        self.value = value
        super().__init__(
            f"{family} requires {parameter} >= {minimum}, got {parameter}={value}"
        )


class NoClosedFormError(RadioLabelError):
    """The radio number of this instance has no closed form."""

    def __init__(self, family: str, n: int) -> None:
        self.family = family
        self.n = n
        super().__init__(
            f"no closed form radio number for {family} with n={n}; use the solver"
        )


class NotAGearError(RadioLabelError):
    """A gear-only operation received a graph that is not a standard gear."""


class InvalidLabelingError(RadioLabelError):
    """A labeling is partial, non-injective or uses non-positive values."""


class EmptyLabelingError(RadioLabelError):
    """The span of an empty labeling is undefined."""


class NoConstructionError(RadioLabelError):
    """No explicit construction is available for this instance."""

    def __init__(self, family: str, n: int) -> None:
        self.family = family
        self.n = n
        super().__init__(f"no construction available for {family} with n={n}")


class BoundHypothesisError(RadioLabelError):
    """The gear forbidden-value bound needs diameter 4, i.e. n >= 4."""

    def __init__(self, n: int) -> None:
        self.n = n
        super().__init__(
            f"diameter hypothesis fails: gear bound needs n >= 4, got n={n}"
        )


class SearchBudgetExceeded(RadioLabelError):
    """The feasibility search ran out of nodes or time before finishing."""

    def __init__(self, span: int, nodes_explored: int, elapsed: float) -> None:
        self.span = span
        self.nodes_explored = nodes_explored
        self.elapsed = elapsed
        super().__init__(
            f"search budget exhausted at span {span} "
            f"after {nodes_explored} nodes ({elapsed:.2f}s)"
        )


class FixtureStoreError(RadioLabelError):
    """The fixture file could not be read or does not match its schema."""
