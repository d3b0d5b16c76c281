"""Immutable graphs, all-pairs distances and structural metrics.

Vertices are dense 0-based integers. The names used for the gear and wheel
families (the center ``z``, spokes ``v1..vn`` and rims ``w1..wn``) live in a
role map, so the index stays trivial for matrix access while the human-facing
name can always be recovered.
"""

from collections.abc import Iterable, Mapping
from enum import Enum
from types import MappingProxyType
from typing import Any

import networkx as nx
import structlog
from networkx.drawing.nx_pydot import to_pydot
from pydantic import BaseModel, ConfigDict, Field

from .exceptions import DisconnectedGraphError, InvalidGraphError, InvalidVertexError

logger = structlog.get_logger(__name__)

VertexId = int


class RoleKind(str, Enum):
    """Structural role of a vertex."""

    CENTER = "center"
    SPOKE = "spoke"
    RIM = "rim"
    PLAIN = "plain"


_TAG_PREFIX = {RoleKind.SPOKE: "v", RoleKind.RIM: "w", RoleKind.PLAIN: "p"}
_PREFIX_KIND = {prefix: kind for kind, prefix in _TAG_PREFIX.items()}


class Role(BaseModel):
    """Role tag of a vertex; ``index`` is 1-based and absent for the center."""

    model_config = ConfigDict(frozen=True)

    kind: RoleKind
    index: int | None = Field(default=None, ge=1)

    @classmethod
    def center(cls) -> "Role":
        return cls(kind=RoleKind.CENTER)

    @classmethod
    def spoke(cls, i: int) -> "Role":
        return cls(kind=RoleKind.SPOKE, index=i)

    @classmethod
    def rim(cls, i: int) -> "Role":
        return cls(kind=RoleKind.RIM, index=i)

    @classmethod
    def plain(cls, i: int) -> "Role":
        return cls(kind=RoleKind.PLAIN, index=i)

    @property
    def tag(self) -> str:
        """JSON tag: ``center``, ``v3``, ``w3`` or ``p3``."""
        if self.kind is RoleKind.CENTER:
            return "center"
        return f"{_TAG_PREFIX[self.kind]}{self.index}"

    @property
    def name(self) -> str:
        """Display name used in DOT output and fixtures (``z`` for the center)."""
        return "z" if self.kind is RoleKind.CENTER else self.tag

    @classmethod
    def parse(cls, tag: str) -> "Role":
        """Parse a JSON tag or display name back into a role."""
        text = tag.strip().lower()
        if text in ("center", "z"):
            return cls.center()
        kind = _PREFIX_KIND.get(text[:1])
        if kind is None or not text[1:].isdigit() or int(text[1:]) < 1:
            raise InvalidGraphError(f"unrecognized role tag {tag!r}")
        return cls(kind=kind, index=int(text[1:]))


class DistanceMatrix(BaseModel):
    """All-pairs hop counts with per-vertex eccentricity and the diameter."""

    model_config = ConfigDict(frozen=True)

    dist: tuple[tuple[int, ...], ...]
    ecc: tuple[int, ...]
    diameter: int

    def d(self, u: VertexId, v: VertexId) -> int:
        return self.dist[u][v]


class GraphDocument(BaseModel):
    """JSON form of a graph; unknown keys such as ``labels`` are ignored."""

    model_config = ConfigDict(extra="ignore")

    n_vertices: int = Field(ge=1)
    edges: list[tuple[int, int]]
    roles: dict[str, str] | None = None


class Graph:
    """Immutable simple connected graph with role-tagged vertices.

    Distances are computed once, at construction, and cached.
    """

    __slots__ = ("_n", "_edges", "_roles", "_nx", "_distances", "_by_role")

    def __init__(
        self,
        n_vertices: int,
        edges: Iterable[tuple[int, int]],
        roles: Mapping[VertexId, Role] | None = None,
    ) -> None:
        if n_vertices < 1:
            raise InvalidGraphError("a graph needs at least one vertex")
        self._n = n_vertices
        self._edges = _normalize_edges(n_vertices, edges)
        if roles is None:
            roles = {u: Role.plain(u + 1) for u in range(n_vertices)}
        self._roles = MappingProxyType(_check_roles(n_vertices, roles))
        self._by_role = {role: u for u, role in self._roles.items()}

        graph = nx.Graph()
        graph.add_nodes_from(range(n_vertices))
        graph.add_edges_from(sorted(self._edges))
        self._nx = nx.freeze(graph)
        self._distances = all_pairs_distances(self)

    @property
    def n_vertices(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def roles(self) -> Mapping[VertexId, Role]:
        return self._roles

    @property
    def distances(self) -> DistanceMatrix:
        return self._distances

    @property
    def diameter(self) -> int:
        return self._distances.diameter

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, u: VertexId) -> list[VertexId]:
        self._check_vertex(u)
        return sorted(self._nx.neighbors(u))

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return (min(u, v), max(u, v)) in self._edges

    def role_of(self, u: VertexId) -> Role:
        self._check_vertex(u)
        return self._roles[u]

    def vertex_of(self, role: Role) -> VertexId:
        """Return the vertex carrying ``role``."""
        try:
            return self._by_role[role]
        except KeyError:
            raise InvalidGraphError(f"no vertex has role {role.tag}") from None

    def vertices_with(self, kind: RoleKind) -> list[VertexId]:
        """Vertices of one role kind, ordered by their 1-based role index."""
        found = [u for u, role in self._roles.items() if role.kind is kind]
        return sorted(found, key=lambda u: self._roles[u].index or 0)

    def to_networkx(self) -> nx.Graph:
        """Return a mutable copy with each node's role tag as ``role``."""
        graph = nx.Graph(self._nx)
        nx.set_node_attributes(
            graph, {u: role.tag for u, role in self._roles.items()}, "role"
        )
        return graph

    def to_document(self) -> dict[str, Any]:
        return {
            "n_vertices": self._n,
            "edges": [[u, v] for u, v in sorted(self._edges)],
            "roles": {str(u): self._roles[u].tag for u in range(self._n)},
        }

    @classmethod
    def from_document(cls, data: Mapping[str, Any]) -> "Graph":
        """Build a graph from its JSON document form."""
        doc = GraphDocument.model_validate(data)
        roles = None
        if doc.roles is not None:
            try:
                roles = {int(key): Role.parse(tag) for key, tag in doc.roles.items()}
            except ValueError as e:
                raise InvalidGraphError(f"bad role map: {e}") from e
        return cls(doc.n_vertices, doc.edges, roles)

    def _check_vertex(self, u: VertexId) -> None:
        if not 0 <= u < self._n:
            raise InvalidVertexError(u, self._n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._edges == other._edges
            and dict(self._roles) == dict(other._roles)
        )

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n_vertices={self._n}, n_edges={len(self._edges)})"


def _normalize_edges(
    n_vertices: int, edges: Iterable[tuple[int, int]]
) -> frozenset[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n_vertices:
                raise InvalidGraphError(
                    f"edge ({u}, {v}) uses vertex {w} outside 0..{n_vertices - 1}"
                )
        if u == v:
            raise InvalidGraphError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InvalidGraphError(f"duplicate edge ({u}, {v})")
        seen.add(key)
    return frozenset(seen)


def _check_roles(
    n_vertices: int, roles: Mapping[VertexId, Role]
) -> dict[VertexId, Role]:
    if set(roles) != set(range(n_vertices)):
        raise InvalidGraphError("role map must cover exactly the vertices")
    if len(set(roles.values())) != n_vertices:
        raise InvalidGraphError("role tags must be unique")
    for u, role in roles.items():
        if (role.kind is RoleKind.CENTER) != (role.index is None):
            raise InvalidGraphError(f"vertex {u}: only the center has no index")
    return {u: roles[u] for u in range(n_vertices)}


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Breadth-first search from every vertex.

    Raises:
        DisconnectedGraphError: naming the first unreachable pair found
    """
    graph = g._nx
    n = g.n_vertices
    rows: list[tuple[int, ...]] = []
    for source, lengths in sorted(nx.all_pairs_shortest_path_length(graph)):
        if len(lengths) < n:
            missing = next(v for v in range(n) if v not in lengths)
            logger.debug("Unreachable pair", u=source, v=missing)
            raise DisconnectedGraphError(source, missing)
        rows.append(tuple(lengths[v] for v in range(n)))
    ecc = tuple(max(row) for row in rows)
    return DistanceMatrix(dist=tuple(rows), ecc=ecc, diameter=max(ecc))


def eccentricity(g: Graph, u: VertexId) -> int:
    """Largest distance from ``u`` to any vertex of ``g``."""
    if not 0 <= u < g.n_vertices:
        raise InvalidVertexError(u, g.n_vertices)
    return g.distances.ecc[u]


def to_dot(
    g: Graph,
    labels: Mapping[VertexId, int] | None = None,
    positions: Mapping[VertexId, int] | None = None,
    name: str = "G",
) -> str:
    """Render ``g`` as Graphviz DOT.

    Nodes are named by role (``z``, ``v1``, ``w1``, ...); a labeling becomes an
    ``xlabel`` annotation, and gear positions are appended as ``/x<i>``.
    """
    graph = nx.Graph(name=name)
    for u in g.vertices():
        text = g.roles[u].name
        if positions is not None and u in positions:
            text = f"{text}/x{positions[u]}"
        attrs: dict[str, str] = {"label": text}
        if labels is not None and u in labels:
            attrs["xlabel"] = str(labels[u])
        graph.add_node(u, **attrs)
    graph.add_edges_from(sorted(g.edges))
    return str(to_pydot(graph).to_string())
