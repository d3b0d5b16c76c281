"""Lower bounds on the radio number."""

from enum import Enum

import structlog
from pydantic import BaseModel, ConfigDict, Field

from .exceptions import BoundHypothesisError
from .families import Family, FamilySpec, build, require_gear
from .graph_core import DistanceMatrix, Graph, VertexId

logger = structlog.get_logger(__name__)


class BoundMethod(str, Enum):
    TRIVIAL_VERTEX_COUNT = "trivial"
    ECCENTRICITY_GAP = "ecc"
    GEAR_FORBIDDEN = "gear"


class BoundReport(BaseModel):
    """A lower bound and how it was obtained."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(ge=1)
    method: BoundMethod
    per_vertex_forbidden: dict[VertexId, int] | None = None


def lower_bound_trivial(g: Graph) -> BoundReport:
    """Labels are distinct positive integers, so the span is at least ``|V|``."""
    return BoundReport(value=g.n_vertices, method=BoundMethod.TRIVIAL_VERTEX_COUNT)


def lower_bound_ecc_gap(g: Graph, dm: DistanceMatrix) -> BoundReport:
    """Eccentricity-gap bound ``|V| + sum(slack) - max(slack)``.

    With ``slack(u) = diam - ecc(u)``, two vertices with consecutive labels in
    increasing order must be at least ``1 + slack`` of the later one apart.
    Summing over every vertex but the first gives the bound. It holds for any
    connected graph but ignores pair structure, so it is usually weaker than a
    family-specific count.
    """
    slack = [dm.diameter - e for e in dm.ecc]
    value = g.n_vertices + sum(slack) - max(slack)
    return BoundReport(value=value, method=BoundMethod.ECCENTRICITY_GAP)


def lower_bound_gear(n: int) -> BoundReport:
    """Forbidden-value count for the ``n``-gear, ``n >= 4``.

    The center at label 1 forbids 2 and 3. Every spoke forbids one value on
    each side except ``v_n``, which carries the span and forbids only the value
    below it. Rims forbid nothing. The ``2n + 1`` forbidden values plus the
    ``2n + 1`` labels give ``4n + 2``.
    """
    if n < 4:
        raise BoundHypothesisError(n)
    forbidden = {0: 2}
    forbidden.update({i: 2 for i in range(1, n)})
    forbidden[n] = 1
    forbidden.update({n + i: 0 for i in range(1, n + 1)})
    value = (2 * n + 1) + sum(forbidden.values())
    return BoundReport(
        value=value, method=BoundMethod.GEAR_FORBIDDEN, per_vertex_forbidden=forbidden
    )


def best_generic_bound(g: Graph, dm: DistanceMatrix) -> BoundReport:
    """The stronger of the trivial and eccentricity-gap bounds."""
    trivial = lower_bound_trivial(g)
    ecc = lower_bound_ecc_gap(g, dm)
    return ecc if ecc.value > trivial.value else trivial


def lower_bound(g: Graph, dm: DistanceMatrix, method: BoundMethod) -> BoundReport:
    """Compute one bound by method; the gear method reads ``n`` off ``g``."""
    if method is BoundMethod.TRIVIAL_VERTEX_COUNT:
        return lower_bound_trivial(g)
    if method is BoundMethod.ECCENTRICITY_GAP:
        return lower_bound_ecc_gap(g, dm)
    return lower_bound_gear(require_gear(g))


def lower_bound_for_family(spec: FamilySpec) -> BoundReport:
    """Best bound for a family instance: the gear count when it applies."""
    if spec.family is Family.GEAR and spec.n >= 4:
        return lower_bound_gear(spec.n)
    g = build(spec)
    return best_generic_bound(g, g.distances)
