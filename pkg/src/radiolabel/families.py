"""Constructors for the complete, star, complete bipartite, wheel and gear families.

Vertex layout, shared with the constructive labelers:

* complete ``K_n``: ``p1..pn`` at ``0..n-1``
* complete bipartite ``K_{m,n}``: first partition ``p1..pm`` at ``0..m-1``,
  second ``p(m+1)..p(m+n)`` at ``m..m+n-1``
* star, wheel and gear: center ``z`` at 0, spokes ``v1..vn`` at ``1..n``
* gear rims ``w1..wn`` at ``n+1..2n``
"""

from enum import Enum

import structlog
from pydantic import BaseModel, ConfigDict

from .exceptions import FamilyParameterError, NoClosedFormError, NotAGearError
from .graph_core import Graph, Role

logger = structlog.get_logger(__name__)


class Family(str, Enum):
    """Graph families with a known radio number."""

    COMPLETE = "complete"
    STAR = "star"
    COMPLETE_BIPARTITE = "complete_bipartite"
    WHEEL = "wheel"
    GEAR = "gear"


MINIMUM_N = {
    Family.COMPLETE: 1,
    Family.STAR: 2,
    Family.COMPLETE_BIPARTITE: 1,
    Family.WHEEL: 3,
    Family.GEAR: 2,
}


class FamilySpec(BaseModel):
    """A family identifier with its parameters (``m`` only for bipartite)."""

    model_config = ConfigDict(frozen=True)

    family: Family
    n: int
    m: int | None = None

    def require_valid(self) -> None:
        """Raise if a parameter is below the family's minimum."""
        minimum = MINIMUM_N[self.family]
        if self.n < minimum:
            raise FamilyParameterError(self.family.value, "n", minimum, self.n)
        if self.family is Family.COMPLETE_BIPARTITE and (self.m is None or self.m < 1):
            raise FamilyParameterError(self.family.value, "m", 1, self.m or 0)

    @property
    def label(self) -> str:
        """Short human name such as ``gear(9)`` or ``complete_bipartite(2,3)``."""
        if self.family is Family.COMPLETE_BIPARTITE:
            return f"{self.family.value}({self.m},{self.n})"
        return f"{self.family.value}({self.n})"


def parse_family(name: str) -> Family:
    """Look up a family by name; ``bipartite`` is accepted for the bipartite family."""
    key = name.strip().lower().replace("-", "_")
    if key == "bipartite":
        return Family.COMPLETE_BIPARTITE
    try:
        return Family(key)
    except ValueError:
        choices = ", ".join(f.value for f in Family)
        raise ValueError(f"unknown family {name!r} (choose from {choices})") from None


def build(spec: FamilySpec) -> Graph:
    """Construct the graph described by ``spec``."""
    spec.require_valid()
    logger.debug("Building family graph", family=spec.family.value, n=spec.n, m=spec.m)
    n = spec.n
    if spec.family is Family.COMPLETE:
        return complete_graph(n)
    if spec.family is Family.STAR:
        return star_graph(n)
    if spec.family is Family.COMPLETE_BIPARTITE:
        assert spec.m is not None
        return complete_bipartite_graph(spec.m, n)
    if spec.family is Family.WHEEL:
        return wheel_graph(n)
    return gear_graph(n)


def complete_graph(n: int) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, edges, {u: Role.plain(u + 1) for u in range(n)})


def star_graph(n: int) -> Graph:
    """``S_n = K_{1,n}``: center 0 joined to leaves ``v1..vn``."""
    roles = {0: Role.center(), **{i: Role.spoke(i) for i in range(1, n + 1)}}
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)], roles)


def complete_bipartite_graph(m: int, n: int) -> Graph:
    edges = [(u, v) for u in range(m) for v in range(m, m + n)]
    return Graph(m + n, edges, {u: Role.plain(u + 1) for u in range(m + n)})


def wheel_graph(n: int) -> Graph:
    """An ``n``-cycle ``v1..vn`` plus a center adjacent to all of it."""
    roles = {0: Role.center(), **{i: Role.spoke(i) for i in range(1, n + 1)}}
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i % n + 1) for i in range(1, n + 1)]
    return Graph(n + 1, edges, roles)


def gear_graph(n: int) -> Graph:
    """The ``n``-gear under the standard naming.

    For odd ``n`` rim ``w_i`` sits between ``v_i`` and ``v_{i+1}``; for even
    ``n`` it sits between ``v_{i-1}`` and ``v_i`` (so ``w_1`` touches ``v_n``).
    Indices wrap modulo ``n``.
    """
    roles = {0: Role.center()}
    roles.update({i: Role.spoke(i) for i in range(1, n + 1)})
    roles.update({n + i: Role.rim(i) for i in range(1, n + 1)})
    edges = [(0, i) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        other = i % n + 1 if n % 2 == 1 else (i - 2) % n + 1
        edges += [(n + i, i), (n + i, other)]
    return Graph(2 * n + 1, edges, roles)


def gear_order(g: Graph) -> int:
    """Number of spokes of a graph built by :func:`gear_graph`."""
    return (g.n_vertices - 1) // 2


def require_gear(g: Graph) -> int:
    """Return the order of a standard gear, or raise :class:`NotAGearError`."""
    n = gear_order(g)
    if g.n_vertices < 5 or g.n_vertices % 2 == 0 or g != gear_graph(n):
        raise NotAGearError(f"{g!r} is not a standard gear")
    return n


def family_radio_number(spec: FamilySpec) -> int:
    """Closed-form radio number of a family instance.

    Raises:
        FamilyParameterError: if a parameter is below the family minimum
        NoClosedFormError: for gears with ``n < 4``
    """
    spec.require_valid()
    n = spec.n
    if spec.family is Family.COMPLETE:
        return n
    if spec.family is Family.STAR:
        return n + 2
    if spec.family is Family.COMPLETE_BIPARTITE:
        assert spec.m is not None
        if spec.m == n == 1:
            # K_2 has diameter 1
            return 2
        return spec.m + n + 1
    if spec.family is Family.WHEEL:
        if n == 3:
            return 4
        if n == 4:
            return 7
        return n + 2
    if n < 4:
        raise NoClosedFormError(spec.family.value, n)
    return 4 * n + 2
