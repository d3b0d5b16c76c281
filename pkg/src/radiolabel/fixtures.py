"""YAML store of span-minimal labelings for small gears.

The explicit gear construction needs ``n >= 7``. For ``n = 2..6`` the store
holds labelings found by exhaustive search, keyed by vertex display name
(``z``, ``v1``, ``w1``, ...) so the file stays readable and independent of
vertex numbering.
"""

from collections.abc import Iterable
from importlib import resources
from pathlib import Path

import structlog
import yaml
from pydantic import BaseModel, ValidationError

from .config import SolverConfig
from .exceptions import FixtureStoreError, InvalidGraphError, SearchBudgetExceeded
from .families import gear_graph
from .graph_core import Graph, Role
from .radio import Labeling
from .solver import SolveStatus, solve

logger = structlog.get_logger(__name__)

DEFAULT_FIXTURE_RESOURCE = "small_gears.yaml"


class GearFixture(BaseModel):
    """A stored labeling of the ``n``-gear."""

    n: int
    span: int
    labels: dict[str, int]
    source: str = "solver"

    def to_labeling(self, g: Graph | None = None) -> Labeling:
        """Key the stored labels by vertex id of ``g`` (the standard gear by default).

        Positions record the rank of each label, so labels increase with position.
        """
        graph = g if g is not None else gear_graph(self.n)
        try:
            labels = {
                graph.vertex_of(Role.parse(name)): value
                for name, value in self.labels.items()
            }
        except InvalidGraphError as e:
            raise FixtureStoreError(f"fixture for n={self.n}: {e}") from e
        ranked = sorted(labels, key=labels.__getitem__)
        positions = {u: rank for rank, u in enumerate(ranked)}
        return Labeling(labels=labels, positions=positions)


def default_fixture_path() -> Path:
    return Path(str(resources.files("radiolabel") / "data" / DEFAULT_FIXTURE_RESOURCE))


class FixtureStore:
    """YAML-backed collection of :class:`GearFixture` entries."""

    def __init__(self, file_path: str | Path | None = None) -> None:
        """Initialize the store.

        Args:
            file_path: Path to the YAML file; the packaged file when omitted
        """
        self.file_path = Path(file_path) if file_path else default_fixture_path()
        self._fixtures: dict[int, GearFixture] = {}
        self.reload()

    def reload(self) -> None:
        """Reload the fixtures from the YAML file."""
        if not self.file_path.exists():
            logger.debug("Fixture file not found", path=str(self.file_path))
            self._fixtures = {}
            return

        try:
            with open(self.file_path, encoding="utf-8") as f:
                data = yaml.safe_load(f)

            if not data or "gears" not in data:
                self._fixtures = {}
                return

            fixtures = [GearFixture(**entry) for entry in data["gears"]]
        except (yaml.YAMLError, ValidationError, TypeError) as e:
            logger.error("Failed to load fixtures", path=str(self.file_path))
            raise FixtureStoreError(
                f"Failed to load fixtures from {self.file_path}: {e}"
            ) from e
        self._fixtures = {fixture.n: fixture for fixture in fixtures}

    def get(self, n: int) -> GearFixture | None:
        return self._fixtures.get(n)

    def list_fixtures(self) -> list[GearFixture]:
        """All fixtures ordered by gear size."""
        return [self._fixtures[n] for n in sorted(self._fixtures)]

    def write(self, fixtures: Iterable[GearFixture] | None = None) -> None:
        """Write ``fixtures`` (the loaded ones by default) back to the file."""
        entries = list(fixtures) if fixtures is not None else self.list_fixtures()
        document = {
            "gears": [
                entry.model_dump() for entry in sorted(entries, key=lambda e: e.n)
            ]
        }
        with open(self.file_path, "w", encoding="utf-8") as f:
            yaml.safe_dump(document, f, sort_keys=False)
        self._fixtures = {entry.n: entry for entry in entries}


def regenerate_fixture(n: int, config: SolverConfig | None = None) -> GearFixture:
    """Solve the ``n``-gear exactly and package the witness as a fixture.

    Raises:
        SearchBudgetExceeded: if the solve is inconclusive under ``config``
    """
    g = gear_graph(n)
    result = solve(g, g.distances, config or SolverConfig())
    if result.status is not SolveStatus.SOLVED or result.witness is None:
        raise SearchBudgetExceeded(
            result.lower_bound, result.stats.nodes_explored, result.stats.wall_time
        )
    names = {
        g.roles[u].name: value for u, value in sorted(result.witness.labels.items())
    }
    return GearFixture(n=n, span=result.witness.span, labels=names, source="solver")
