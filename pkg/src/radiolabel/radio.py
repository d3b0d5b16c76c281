"""Labelings and the radio condition.

A radio labeling of a connected graph ``G`` is an injective map ``c`` from the
vertices to the positive integers with

    d(u, v) + |c(u) - c(v)| >= diam(G) + 1

for every pair of distinct vertices. Labels start at 1; conventions that
allow 0 differ from ours by exactly one.
"""

from collections.abc import Iterator, Mapping
from typing import Any

import structlog
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .exceptions import EmptyLabelingError, InvalidLabelingError
from .graph_core import DistanceMatrix, Graph, VertexId
from .intervals import IntervalSet

logger = structlog.get_logger(__name__)


class Labeling(BaseModel):
    """Vertex labels, optionally with the position index of each vertex.

    Positivity and injectivity are checked by the verifier and by
    :meth:`from_document`, so they surface as ``InvalidLabelingError``.
    """

    model_config = ConfigDict(frozen=True, extra="ignore")

    labels: dict[VertexId, int]
    positions: dict[VertexId, int] | None = None

    @property
    def span(self) -> int:
        return span(self)

    def __getitem__(self, u: VertexId) -> int:
        return self.labels[u]

    def to_document(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "labels": {str(u): self.labels[u] for u in sorted(self.labels)}
        }
        if self.positions is not None:
            doc["positions"] = {
                str(u): self.positions[u] for u in sorted(self.positions)
            }
        return doc

    @classmethod
    def from_document(cls, data: Mapping[str, Any]) -> "Labeling":
        """Parse a labeling document.

        Raises:
            InvalidLabelingError: if the document is malformed or a label is
                not positive
        """
        try:
            labeling = cls.model_validate(data)
        except ValidationError as e:
            raise InvalidLabelingError(f"malformed labeling document: {e}") from e
        _require_positive(labeling)
        return labeling


class Violation(BaseModel):
    """A pair of vertices breaking the radio condition."""

    model_config = ConfigDict(frozen=True)

    u: VertexId
    v: VertexId
    distance: int = Field(ge=1)
    label_gap: int = Field(ge=0)
    required: int

    def __str__(self) -> str:
        return (
            f"({self.u},{self.v}) d={self.distance} "
            f"gap={self.label_gap} need={self.required}"
        )


def span(c: Labeling) -> int:
    """Largest label used by ``c``."""
    if not c.labels:
        raise EmptyLabelingError("span of an empty labeling is undefined")
    return max(c.labels.values())


def _require_positive(c: Labeling) -> None:
    for u in sorted(c.labels):
        if c.labels[u] < 1:
            raise InvalidLabelingError(
                f"vertex {u} has label {c.labels[u]}; labels start at 1"
            )


def _require_total_injective(g: Graph, c: Labeling) -> None:
    vertices = set(g.vertices())
    labeled = set(c.labels)
    if labeled != vertices:
        missing = sorted(vertices - labeled)
        extra = sorted(labeled - vertices)
        raise InvalidLabelingError(
            f"labeling must cover exactly the {g.n_vertices} vertices "
            f"(missing {missing}, unknown {extra})"
        )
    seen: dict[int, VertexId] = {}
    for u in sorted(c.labels):
        value = c.labels[u]
        if value in seen:
            raise InvalidLabelingError(
                f"label {value} used by both vertex {seen[value]} and vertex {u}"
            )
        seen[value] = u
    _require_positive(c)


def iter_violations(
    g: Graph, dm: DistanceMatrix, c: Labeling
) -> Iterator[Violation]:
    """Yield radio-condition violations in ``(u, v)`` order.

    Raises:
        InvalidLabelingError: if ``c`` is partial, not injective or uses a
            non-positive label
    """
    _require_total_injective(g, c)
    required = dm.diameter + 1
    labels = c.labels
    for u in range(g.n_vertices):
        row = dm.dist[u]
        for v in range(u + 1, g.n_vertices):
            gap = abs(labels[u] - labels[v])
            if row[v] + gap < required:
                yield Violation(
                    u=u, v=v, distance=row[v], label_gap=gap, required=required
                )


def check(g: Graph, dm: DistanceMatrix, c: Labeling) -> list[Violation]:
    """Every unordered pair violating the radio condition; empty means valid."""
    violations = list(iter_violations(g, dm, c))
    if violations:
        logger.debug("Radio condition violated", count=len(violations))
    return violations


def is_radio_labeling(g: Graph, c: Labeling) -> bool:
    return not check(g, g.distances, c)


def forbidden_values(
    g: Graph, dm: DistanceMatrix, c: Labeling, u: VertexId
) -> IntervalSet:
    """Values the labels of the other vertices forbid for ``u``.

    A label ``c(v)`` at distance ``d`` from ``u`` rules out the open window of
    radius ``diam + 1 - d`` around it. ``c`` may be partial; ``u``'s own label,
    if any, is ignored.
    """
    forbidden = IntervalSet()
    reach = dm.diameter + 1
    for v, value in c.labels.items():
        if v == u:
            continue
        radius = reach - dm.dist[u][v]
        forbidden.add(max(1, value - radius + 1), value + radius - 1)
    return forbidden
