"""Command line interface for radiolabel."""

import csv
import json
import logging
import re
import sys
from collections.abc import Callable, Iterator
from typing import IO, Any

import click
import structlog
from pydantic import ValidationError
from structlog.stdlib import LoggerFactory

from .bounds import BoundMethod, BoundReport, best_generic_bound, lower_bound
from .bounds import lower_bound_for_family
from .config import Config, SolverConfig
from .constructive import label_family
from .exceptions import InvalidLabelingError, RadioLabelError
from .families import MINIMUM_N, Family, FamilySpec, build, family_radio_number
from .families import gear_graph, parse_family
from .fixtures import FixtureStore
from .graph_core import Graph, to_dot
from .radio import Labeling, check, iter_violations
from .solver import SolveStatus, solve

# Configure structured logging
structlog.configure(
    processors=[
        structlog.stdlib.filter_by_level,
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
        structlog.processors.JSONRenderer(),
    ],
    logger_factory=LoggerFactory(),
    wrapper_class=structlog.stdlib.BoundLogger,
    cache_logger_on_first_use=True,
)

logger = structlog.get_logger(__name__)

EXIT_VERIFY_FAILED = 1
EXIT_INCONCLUSIVE = 3

FAMILY_CHOICES = [family.value for family in Family] + ["bipartite"]
TABLE_HEADER = [
    "family",
    "n",
    "lower_bound",
    "constructive_span",
    "solver_rn",
    "agrees",
]


class Duration(click.ParamType):
    """A positive duration such as ``90``, ``90s``, ``2m``, ``500ms`` or ``1h``."""

    name = "duration"
    _UNITS = {"ms": 0.001, "s": 1.0, "m": 60.0, "h": 3600.0}
    _PATTERN = re.compile(r"\s*(\d+(?:\.\d*)?)\s*(ms|s|m|h)?\s*")

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> float:
        if isinstance(value, (int, float)):
            seconds = float(value)
        else:
            match = self._PATTERN.fullmatch(str(value))
            if match is None:
                self.fail(
                    f"{value!r} is not a duration like 60s, 2m or 500ms", param, ctx
                )
            seconds = float(match.group(1)) * self._UNITS[match.group(2) or "s"]
        if seconds <= 0:
            self.fail(f"{value!r} must be positive", param, ctx)
        return seconds


def family_options(required: bool = True) -> Callable[[Callable[..., Any]], Any]:
    """Attach the ``--family``/``--n``/``--m`` options to a command."""

    def decorate(f: Callable[..., Any]) -> Any:
        f = click.option(
            "--m",
            "m",
            type=int,
            default=None,
            help="Size of the first partition (complete_bipartite only)",
        )(f)
        f = click.option(
            "--n", "n", type=int, required=required, default=None, help="Family order"
        )(f)
        return click.option(
            "--family",
            type=click.Choice(FAMILY_CHOICES, case_sensitive=False),
            required=required,
            default=None,
            help="Graph family",
        )(f)

    return decorate


output_option = click.option(
    "--output",
    "-o",
    type=click.File("w"),
    default="-",
    help="Write to this file instead of stdout ('-')",
)


def _spec_from_options(family: str, n: int | None, m: int | None) -> FamilySpec:
    """Validate family flags before any computation."""
    kind = parse_family(family)
    if n is None:
        raise click.UsageError("--n is required with --family")
    if m is not None and kind is not Family.COMPLETE_BIPARTITE:
        raise click.UsageError("--m only applies to --family complete_bipartite")
    if m is None and kind is Family.COMPLETE_BIPARTITE:
        raise click.UsageError("--family complete_bipartite needs --m")
    spec = FamilySpec(family=kind, n=n, m=m)
    try:
        spec.require_valid()
    except RadioLabelError as e:
        hint = "--m" if getattr(e, "parameter", "n") == "m" else "--n"
        raise click.BadParameter(str(e), param_hint=hint) from e
    return spec


def _read_json(stream: IO[str], param_hint: str) -> dict[str, Any]:
    try:
        data = json.load(stream)
    except json.JSONDecodeError as e:
        raise click.BadParameter(f"not valid JSON: {e}", param_hint=param_hint) from e
    if not isinstance(data, dict):
        raise click.BadParameter("expected a JSON object", param_hint=param_hint)
    return data


def _graph_from(document: dict[str, Any]) -> Graph:
    try:
        return Graph.from_document(document)
    except (RadioLabelError, ValidationError) as e:
        raise click.BadParameter(f"invalid graph: {e}", param_hint="--graph") from e


def _graph_source(
    family: str | None,
    n: int | None,
    m: int | None,
    graph_file: IO[str] | None,
) -> tuple[Graph, FamilySpec | None]:
    """Resolve exactly one of ``--family`` or ``--graph``."""
    if (family is None) == (graph_file is None):
        raise click.UsageError("pass exactly one of --family or --graph")
    if graph_file is not None:
        if n is not None or m is not None:
            raise click.UsageError("--n and --m only apply with --family")
        return _graph_from(_read_json(graph_file, "--graph")), None
    assert family is not None
    spec = _spec_from_options(family, n, m)
    return build(spec), spec


def _store(ctx: click.Context) -> FixtureStore:
    config: Config = ctx.obj["config"]
    return FixtureStore(config.app.fixture_path)


def _dump(data: Any) -> str:
    return json.dumps(data, indent=2)


@click.group()
@click.option(
    "--log-level",
    default=None,
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]),
    help="Set the logging level (RADIOLABEL_LOG_LEVEL, default WARNING)",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str | None) -> None:
    """radiolabel - radio labelings, lower bounds and exact radio numbers."""
    try:
        config = Config.from_env()
    except ValidationError as e:
        raise click.UsageError(f"invalid RADIOLABEL_* environment: {e}") from e

    level = log_level or config.app.log_level
    # stdout carries data only
    logging.basicConfig(level=getattr(logging, level), stream=sys.stderr, force=True)

    ctx.ensure_object(dict)
    ctx.obj["config"] = config
    ctx.obj["log_level"] = level


@cli.command("gen")
@family_options()
@click.option(
    "--format", "fmt", type=click.Choice(["json", "dot"]), default="json"
)
@output_option
def gen_command(
    family: str, n: int, m: int | None, fmt: str, output: IO[str]
) -> None:
    """Generate a family graph as JSON or DOT."""
    spec = _spec_from_options(family, n, m)
    g = build(spec)
    if fmt == "dot":
        click.echo(to_dot(g, name=f"{spec.family.value}_{spec.n}"), file=output)
    else:
        click.echo(_dump(g.to_document()), file=output)


@cli.command("label")
@family_options()
@click.option(
    "--show-positions",
    is_flag=True,
    help="Include the gear position index of each vertex",
)
@click.option(
    "--format", "fmt", type=click.Choice(["json", "dot"]), default="json"
)
@output_option
@click.pass_context
def label_command(
    ctx: click.Context,
    family: str,
    n: int,
    m: int | None,
    show_positions: bool,
    fmt: str,
    output: IO[str],
) -> None:
    """Print a span-optimal radio labeling of a family graph.

    The JSON output is a graph document with ``labels`` added, so it can be
    piped straight into ``radiolabel verify --graph -``.
    """
    spec = _spec_from_options(family, n, m)
    g = build(spec)
    try:
        labeling = label_family(spec, _store(ctx))
    except RadioLabelError as e:
        logger.error("Labeling failed", family=spec.family.value, n=n, error=str(e))
        raise click.BadParameter(str(e), param_hint="--n") from e

    positions = labeling.positions if show_positions else None
    if fmt == "dot":
        name = f"{spec.family.value}_{spec.n}"
        click.echo(to_dot(g, labeling.labels, positions, name=name), file=output)
        return

    document = g.to_document()
    labels = labeling.to_document()
    if positions is None:
        labels.pop("positions", None)
    document.update(labels)
    document["span"] = labeling.span
    click.echo(_dump(document), file=output)


@cli.command("verify")
@click.option(
    "--graph",
    "graph_file",
    type=click.File("r"),
    required=True,
    help="Graph document, or a labeled one ('-' for stdin)",
)
@click.option(
    "--labeling",
    "labeling_file",
    type=click.File("r"),
    default=None,
    help="Labeling document; defaults to the labels inside --graph",
)
@click.option("--fail-fast", is_flag=True, help="Stop at the first violation")
def verify_command(
    graph_file: IO[str], labeling_file: IO[str] | None, fail_fast: bool
) -> None:
    """Check a labeling against the radio condition.

    Prints each violating pair and exits 1 when the labeling is not a radio
    labeling.
    """
    graph_doc = _read_json(graph_file, "--graph")
    g = _graph_from(graph_doc)
    if labeling_file is not None:
        labeling_doc = _read_json(labeling_file, "--labeling")
    elif "labels" in graph_doc:
        labeling_doc = graph_doc
    else:
        raise click.UsageError(
            "no labels found: pass --labeling or a labeled graph document"
        )

    try:
        labeling = Labeling.from_document(labeling_doc)
        violations = iter_violations(g, g.distances, labeling)
        if fail_fast:
            first = next(violations, None)
            found = [first] if first is not None else []
        else:
            found = list(violations)
    except InvalidLabelingError as e:
        click.echo(f"❌ Invalid labeling: {e}", err=True)
        sys.exit(EXIT_VERIFY_FAILED)

    if found:
        for violation in found:
            click.echo(str(violation))
        suffix = " (stopped at the first)" if fail_fast else ""
        click.echo(f"❌ {len(found)} violation(s){suffix}", err=True)
        sys.exit(EXIT_VERIFY_FAILED)

    click.echo(f"✅ Valid radio labeling with span {labeling.span}")


@cli.command("bound")
@family_options(required=False)
@click.option(
    "--graph",
    "graph_file",
    type=click.File("r"),
    default=None,
    help="Graph document instead of --family ('-' for stdin)",
)
@click.option(
    "--method",
    type=click.Choice([method.value for method in BoundMethod]),
    default=None,
    help="Bound to compute; the strongest applicable one by default",
)
def bound_command(
    family: str | None,
    n: int | None,
    m: int | None,
    graph_file: IO[str] | None,
    method: str | None,
) -> None:
    """Print a lower bound on the radio number as JSON."""
    g, spec = _graph_source(family, n, m, graph_file)
    report: BoundReport
    try:
        if method is not None:
            report = lower_bound(g, g.distances, BoundMethod(method))
        elif spec is not None:
            report = lower_bound_for_family(spec)
        else:
            report = best_generic_bound(g, g.distances)
    except RadioLabelError as e:
        raise click.BadParameter(str(e), param_hint="--method") from e
    click.echo(report.model_dump_json(indent=2))


@cli.command("solve")
@family_options(required=False)
@click.option(
    "--graph",
    "graph_file",
    type=click.File("r"),
    default=None,
    help="Graph document instead of --family ('-' for stdin)",
)
@click.option(
    "--time-budget",
    type=Duration(),
    default=None,
    help="Wall-clock budget for the whole solve, e.g. 120s or 2m",
)
@click.option(
    "--node-budget",
    type=click.IntRange(min=1),
    default=None,
    help="Maximum search nodes per span attempt, shared by all workers",
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Worker processes for the first branching level",
)
@click.option(
    "--start-span",
    type=click.IntRange(min=1),
    default=None,
    help="First span to try",
)
@click.option(
    "--no-symmetry-breaking",
    is_flag=True,
    help="Disable the label-reversal symmetry cut",
)
@click.pass_context
def solve_command(
    ctx: click.Context,
    family: str | None,
    n: int | None,
    m: int | None,
    graph_file: IO[str] | None,
    time_budget: float | None,
    node_budget: int | None,
    workers: int | None,
    start_span: int | None,
    no_symmetry_breaking: bool,
) -> None:
    """Compute the exact radio number with a witness labeling.

    Exits 3 when a budget runs out; the JSON then brackets the answer.
    """
    g, _ = _graph_source(family, n, m, graph_file)
    config: Config = ctx.obj["config"]
    overrides: dict[str, Any] = {
        "time_budget": time_budget,
        "node_budget": node_budget,
        "workers": workers,
        "start_span": start_span,
    }
    updates = {key: value for key, value in overrides.items() if value is not None}
    if no_symmetry_breaking:
        updates["symmetry_breaking"] = False
    solver_config = config.solver.model_copy(update=updates)

    result = solve(g, g.distances, solver_config)
    click.echo(_dump(result.model_dump(mode="json")))
    if result.status is SolveStatus.INCONCLUSIVE:
        click.echo("⚠️  Search budget exhausted; radio number not certified", err=True)
        sys.exit(EXIT_INCONCLUSIVE)


def _parse_families(value: str) -> list[Family]:
    if value.strip().lower() == "all":
        return list(Family)
    families: list[Family] = []
    for name in value.split(","):
        try:
            kind = parse_family(name)
        except ValueError as e:
            raise click.BadParameter(str(e), param_hint="--families") from e
        if kind not in families:
            families.append(kind)
    return families


def _table_specs(families: list[Family], max_n: int) -> Iterator[FamilySpec]:
    """Family instances in table order.

    Complete bipartite rows cover ``m <= n`` with ``m + n >= 3``.
    """
    for family in families:
        if family is Family.COMPLETE_BIPARTITE:
            for total in range(3, max_n + 1):
                for m in range(1, total // 2 + 1):
                    yield FamilySpec(family=family, n=total - m, m=m)
            continue
        # gears below 4 have no closed form to compare against
        start = 4 if family is Family.GEAR else MINIMUM_N[family]
        for n in range(start, max_n + 1):
            yield FamilySpec(family=family, n=n)


def _table_row(
    spec: FamilySpec,
    store: FixtureStore,
    solver_config: SolverConfig | None,
) -> list[str]:
    g = build(spec)
    expected = family_radio_number(spec)
    lower = lower_bound_for_family(spec).value
    labeling = label_family(spec, store)
    constructive = labeling.span
    valid = not check(g, g.distances, labeling)

    solver_rn: int | None = None
    if solver_config is not None:
        result = solve(g, g.distances, solver_config)
        if result.status is SolveStatus.SOLVED:
            solver_rn = result.rn

    agrees = (
        valid
        and lower <= constructive == expected
        and (solver_rn is None or solver_rn == constructive)
    )
    logger.info(
        "Table row",
        family=spec.family.value,
        n=spec.n,
        m=spec.m,
        lower_bound=lower,
        constructive_span=constructive,
        solver_rn=solver_rn,
        agrees=agrees,
    )
    n_column = f"{spec.m}x{spec.n}" if spec.m is not None else str(spec.n)
    return [
        spec.family.value,
        n_column,
        str(lower),
        str(constructive),
        "" if solver_rn is None else str(solver_rn),
        "true" if agrees else "false",
    ]


@cli.command("table")
@click.option(
    "--families",
    default="all",
    help="Comma separated families, or 'all'",
)
@click.option(
    "--max-n",
    type=click.IntRange(min=1),
    default=9,
    help="Largest family order (vertex total for complete_bipartite)",
)
@click.option(
    "--gear-solver-max-n",
    type=click.IntRange(min=0),
    default=None,
    help="Largest gear handed to the exact solver",
)
@click.option(
    "--solver-max-vertices",
    type=click.IntRange(min=0),
    default=None,
    help="Largest non-gear vertex count handed to the exact solver",
)
@click.option(
    "--time-budget",
    type=Duration(),
    default=None,
    help="Per-row solver budget (RADIOLABEL_TABLE_TIME_BUDGET)",
)
@click.option("--no-solver", is_flag=True, help="Skip the exact solver column")
@output_option
@click.pass_context
def table_command(
    ctx: click.Context,
    families: str,
    max_n: int,
    gear_solver_max_n: int | None,
    solver_max_vertices: int | None,
    time_budget: float | None,
    no_solver: bool,
    output: IO[str],
) -> None:
    """Emit the lower bound, construction and solver result per family as CSV.

    Exits 1 if any row disagrees.
    """
    config: Config = ctx.obj["config"]
    kinds = _parse_families(families)
    gear_cap = (
        gear_solver_max_n
        if gear_solver_max_n is not None
        else config.app.table_gear_solver_max_n
    )
    vertex_cap = (
        solver_max_vertices
        if solver_max_vertices is not None
        else config.app.table_solver_max_vertices
    )
    row_config = config.solver.model_copy(
        update={"time_budget": time_budget or config.app.table_time_budget}
    )
    store = _store(ctx)

    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    disagreements = 0
    for spec in _table_specs(kinds, max_n):
        if no_solver:
            eligible = False
        elif spec.family is Family.GEAR:
            eligible = spec.n <= gear_cap
        else:
            eligible = build(spec).n_vertices <= vertex_cap
        row = _table_row(spec, store, row_config if eligible else None)
        writer.writerow(row)
        disagreements += row[-1] == "false"

    if disagreements:
        click.echo(f"❌ {disagreements} row(s) disagree", err=True)
        sys.exit(EXIT_VERIFY_FAILED)


@cli.command("validate-fixtures")
@click.option(
    "--fixtures",
    "fixture_path",
    default=None,
    help="Path to the fixture YAML file (the packaged file by default)",
)
@click.pass_context
def validate_fixtures(ctx: click.Context, fixture_path: str | None) -> None:
    """Validate the stored small-gear labelings."""
    config: Config = ctx.obj["config"]
    try:
        store = FixtureStore(fixture_path or config.app.fixture_path)
        click.echo(f"Validating fixtures: {store.file_path}")

        fixtures = store.list_fixtures()
        if not fixtures:
            click.echo("⚠️  Fixture store is empty or file not found")
            return

        failures = 0
        for fixture in fixtures:
            g = gear_graph(fixture.n)
            labeling = fixture.to_labeling(g)
            violations = check(g, g.distances, labeling)
            expected = 4 * fixture.n + 2 if fixture.n >= 4 else fixture.span
            ok = not violations and labeling.span == fixture.span == expected
            mark = "✅" if ok else "❌"
            click.echo(
                f"{mark} G_{fixture.n}: span {labeling.span} "
                f"(recorded {fixture.span}, source {fixture.source})"
            )
            for violation in violations:
                click.echo(f"   {violation}")
            failures += not ok

        if failures:
            click.echo(f"❌ {failures} fixture(s) failed validation")
            sys.exit(1)
        click.echo(f"✅ All {len(fixtures)} fixtures are valid radio labelings")

    except (RadioLabelError, ValidationError) as e:
        logger.error("Fixture validation failed", error=str(e))
        click.echo(f"❌ Error validating fixtures: {str(e)}")
        sys.exit(1)


def main() -> None:
    """Main entry point for the CLI."""
    cli()
