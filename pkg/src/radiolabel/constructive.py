"""Explicit span-optimal radio labelings for each family.

All labelers return labelings keyed by the vertex layout of
:mod:`radiolabel.families`.
"""

from functools import lru_cache

import structlog
from pydantic import BaseModel, ConfigDict, model_validator

from .exceptions import FamilyParameterError, NoConstructionError
from .families import Family, FamilySpec, build, require_gear
from .fixtures import FixtureStore
from .graph_core import Graph, RoleKind, VertexId
from .radio import Labeling

logger = structlog.get_logger(__name__)

GEAR_FORMULA_MIN_N = 7


class PositionAssignment(BaseModel):
    """Bijection from the gear's vertices onto positions ``0..2n``."""

    model_config = ConfigDict(frozen=True)

    pos: dict[VertexId, int]

    @model_validator(mode="after")
    def _bijective(self) -> "PositionAssignment":
        if sorted(self.pos.values()) != list(range(len(self.pos))):
            raise ValueError("positions must be a bijection onto 0..len-1")
        return self

    def inverse(self) -> dict[int, VertexId]:
        """Map each position ``x_i`` back to its vertex."""
        return {i: u for u, i in self.pos.items()}


def _require(family: Family, n: int, minimum: int, parameter: str = "n") -> None:
    if n < minimum:
        raise FamilyParameterError(family.value, parameter, minimum, n)


def label_complete(n: int) -> Labeling:
    """Consecutive labels ``1..n``; any order works since ``diam(K_n) = 1``."""
    _require(Family.COMPLETE, n, 1)
    return Labeling(labels={u: u + 1 for u in range(n)})


def label_star(n: int) -> Labeling:
    """Center 1, leaves ``3..n+2``."""
    _require(Family.STAR, n, 2)
    labels = {0: 1}
    labels.update({i: i + 2 for i in range(1, n + 1)})
    return Labeling(labels=labels)


def label_complete_bipartite(m: int, n: int) -> Labeling:
    """First partition ``1..m``, second ``m+2..m+n+1``."""
    _require(Family.COMPLETE_BIPARTITE, m, 1, "m")
    _require(Family.COMPLETE_BIPARTITE, n, 1)
    labels = {u: u + 1 for u in range(m)}
    labels.update({m + j: m + 2 + j for j in range(n)})
    return Labeling(labels=labels)


def label_wheel(n: int) -> Labeling:
    """Wheel labeling with span ``n + 2`` (``4`` for ``W_3``, ``7`` for ``W_4``).

    For ``n >= 5`` the center gets 1, ``v_1..v_ceil(n/2)`` get the odd numbers
    from 3 and the remaining spokes the even numbers from 4.
    """
    _require(Family.WHEEL, n, 3)
    if n == 3:
        return Labeling(labels={u: u + 1 for u in range(4)})
    if n == 4:
        return Labeling(labels={0: 1, 1: 3, 2: 6, 3: 4, 4: 7})
    half = -(-n // 2)
    labels = {0: 1}
    labels.update({i: 2 * i + 1 for i in range(1, half + 1)})
    labels.update({i: 2 * (i - half) + 2 for i in range(half + 1, n + 1)})
    return Labeling(labels=labels)


def gear_positions(g: Graph) -> PositionAssignment:
    """Position function of the gear construction.

    The center takes position 0, then the odd-indexed rims ``w1, w3, ...``,
    then the even-indexed rims ``w2, w4, ...``, and finally the spokes
    ``v1..vn`` at positions ``n+1..2n``.
    """
    n = require_gear(g)
    rims = g.vertices_with(RoleKind.RIM)
    order = [g.vertices_with(RoleKind.CENTER)[0]]
    order += rims[0::2] + rims[1::2]
    order += g.vertices_with(RoleKind.SPOKE)
    assert len(order) == 2 * n + 1
    return PositionAssignment(pos={u: i for i, u in enumerate(order)})


def gear_label_at(i: int, n: int) -> int:
    """Label given to position ``x_i`` of the ``n``-gear construction."""
    if i == 0:
        return 1
    if i <= n:
        return 3 + i
    return n + 2 + 3 * (i - n)


@lru_cache(maxsize=1)
def _default_store() -> FixtureStore:
    return FixtureStore()


def label_gear(g: Graph, store: FixtureStore | None = None) -> Labeling:
    """Radio labeling of the ``n``-gear with span ``4n + 2``.

    ``n >= 7`` uses the position-function construction; ``4 <= n <= 6`` comes
    from the fixture store.

    Raises:
        NotAGearError: if ``g`` is not a standard gear
        NoConstructionError: for ``n <= 3`` or a missing fixture
    """
    n = require_gear(g)
    if n >= GEAR_FORMULA_MIN_N:
        positions = gear_positions(g).pos
        labels = {u: gear_label_at(i, n) for u, i in positions.items()}
        return Labeling(labels=labels, positions=positions)
    if n < 4:
        raise NoConstructionError(Family.GEAR.value, n)
    fixture = (store or _default_store()).get(n)
    if fixture is None:
        logger.error("Missing small gear fixture", n=n)
        raise NoConstructionError(Family.GEAR.value, n)
    return fixture.to_labeling(g)


def label_family(spec: FamilySpec, store: FixtureStore | None = None) -> Labeling:
    """Dispatch to the labeler for ``spec``'s family."""
    spec.require_valid()
    if spec.family is Family.COMPLETE:
        return label_complete(spec.n)
    if spec.family is Family.STAR:
        return label_star(spec.n)
    if spec.family is Family.COMPLETE_BIPARTITE:
        assert spec.m is not None
        return label_complete_bipartite(spec.m, spec.n)
    if spec.family is Family.WHEEL:
        return label_wheel(spec.n)
    return label_gear(build(spec), store)
