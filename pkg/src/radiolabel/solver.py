"""Exact radio numbers by exhaustive search.

The search hands out labels in increasing order. At each node it picks the
vertex that receives the next label and gives it the smallest value the
radio condition allows. For a fixed order of vertices that choice is optimal,
so branching over orders is complete.

Each labeled vertex ``v`` forbids ``[c(v) - r + 1, c(v) + r - 1]`` for every
unlabeled ``u``, with ``r = diam + 1 - d(u, v)``. Every such interval starts at
or below the current label, so above it the forbidden set of ``u`` is a single
run ending at a threshold; the search keeps one threshold per vertex.

Pruning:

* a threshold beyond the span kills the node (forward checking);
* every unlabeled ``u`` adds at least ``1 + diam - ecc(u)`` to the span;
* label reversal ``c -> s + 1 - c`` preserves the radio condition, so the
  highest-priority vertex may be restricted to the lower half of the span;
* failed states are cached by (labeled set, thresholds relative to the
  current label); a state that fails at label ``L`` fails at any larger ``L``.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from enum import Enum

import structlog
from pydantic import BaseModel, ConfigDict

from .bounds import best_generic_bound
from .config import SolverConfig
from .exceptions import SearchBudgetExceeded
from .graph_core import DistanceMatrix, Graph
from .radio import Labeling

logger = structlog.get_logger(__name__)

_CLOCK_CHECK_INTERVAL = 4096


class SolveStatus(str, Enum):
    SOLVED = "solved"
    INCONCLUSIVE = "inconclusive"


class SolveStats(BaseModel):
    nodes_explored: int = 0
    spans_tried: int = 0
    wall_time: float = 0.0


class SolveResult(BaseModel):
    """Outcome of :func:`solve`.

    ``rn`` and ``witness`` are set only when solved. An inconclusive result
    still brackets the radio number between ``lower_bound`` and
    ``upper_bound``.
    """

    model_config = ConfigDict(frozen=True)

    status: SolveStatus
    rn: int | None = None
    witness: Labeling | None = None
    lower_bound: int
    upper_bound: int | None = None
    stats: SolveStats


def _priority_order(dm: DistanceMatrix) -> list[int]:
    """Vertices by decreasing ``diam - ecc``, ties by index."""
    return sorted(range(len(dm.ecc)), key=lambda u: (dm.ecc[u], u))


class _SpanSearch:
    """Depth-first search for a labeling with span at most ``span``."""

    def __init__(
        self,
        dm: DistanceMatrix,
        span: int,
        node_budget: int | None,
        deadline: float | None,
        symmetry_breaking: bool,
    ) -> None:
        n = len(dm.dist)
        reach = dm.diameter + 1
        self._n = n
        self._span = span
        self._full = (1 << n) - 1
        self._gap = [[reach - dm.dist[u][v] for v in range(n)] for u in range(n)]
        self._step = [1 + dm.diameter - e for e in dm.ecc]
        order = _priority_order(dm)
        self._rank = [0] * n
        for rank, u in enumerate(order):
            self._rank[u] = rank
        self._anchor = order[0] if symmetry_breaking else None
        self._anchor_cap = (span + 2) // 2
        self._node_budget = node_budget
        self._deadline = deadline
        self._started = time.monotonic()
        self._dead: dict[tuple[int, tuple[int, ...]], int] = {}
        self._labels = [0] * n
        self.nodes = 0

    def run(self, first: int | None = None) -> list[int] | None:
        """Return labels indexed by vertex, or ``None`` if none fit the span."""
        if self._n > self._span:
            return None
        found = self._extend(0, 0, [1] * self._n, sum(self._step), first)
        return list(self._labels) if found else None

    def _tick(self) -> None:
        self.nodes += 1
        if self._node_budget is not None and self.nodes > self._node_budget:
            raise SearchBudgetExceeded(
                self._span, self.nodes, time.monotonic() - self._started
            )
        if (
            self._deadline is not None
            and self.nodes % _CLOCK_CHECK_INTERVAL == 0
            and time.monotonic() > self._deadline
        ):
            raise SearchBudgetExceeded(
                self._span, self.nodes, time.monotonic() - self._started
            )

    def _extend(
        self,
        mask: int,
        last: int,
        earliest: list[int],
        need: int,
        forced: int | None = None,
    ) -> bool:
        self._tick()
        if mask == self._full:
            return True
        span = self._span
        if mask and last + need > span:
            return False
        anchor = self._anchor
        anchor_free = anchor is not None and not mask >> anchor & 1
        if anchor_free and last + 1 > self._anchor_cap:
            return False

        free = [u for u in range(self._n) if not mask >> u & 1]
        key = (mask, tuple(max(earliest[u] - last, 1) for u in free))
        if self._dead.get(key, span + 1) <= last:
            return False

        candidates = sorted(
            (max(earliest[u], last + 1), self._rank[u], u)
            for u in free
            if forced is None or u == forced
        )
        for label, _, u in candidates:
            if label > span:
                break
            if anchor_free and u == anchor and label > self._anchor_cap:
                continue
            row = self._gap[u]
            nxt = earliest[:]
            for w in free:
                if w != u and label + row[w] > nxt[w]:
                    nxt[w] = label + row[w]
            if any(nxt[w] > span for w in free if w != u):
                continue
            self._labels[u] = label
            if self._extend(mask | 1 << u, label, nxt, need - self._step[u]):
                return True

        if forced is None:
            self._dead[key] = min(self._dead.get(key, span + 1), last)
        return False


def _search_branch(
    dm: DistanceMatrix,
    span: int,
    node_budget: int | None,
    deadline: float | None,
    symmetry_breaking: bool,
    first: int | None,
) -> tuple[str, list[int] | None, int]:
    if node_budget == 0:
        return "budget", None, 0
    search = _SpanSearch(dm, span, node_budget, deadline, symmetry_breaking)
    try:
        labels = search.run(first)
    except SearchBudgetExceeded:
        spent = search.nodes if node_budget is None else min(search.nodes, node_budget)
        return "budget", None, spent
    return ("found" if labels is not None else "none"), labels, search.nodes


def _branch_budgets(node_budget: int | None, branches: int) -> list[int | None]:
    """Split one attempt's node budget over the first-level branches."""
    if node_budget is None:
        return [None] * branches
    share, extra = divmod(node_budget, branches)
    return [share + (1 if i < extra else 0) for i in range(branches)]


def _feasible(
    dm: DistanceMatrix,
    span: int,
    config: SolverConfig,
    deadline: float | None,
) -> tuple[Labeling | None, int]:
    """Run one span attempt; returns the witness (or ``None``) and node count.

    ``node_budget`` bounds the whole attempt, whatever the worker count.
    """
    started = time.monotonic()
    if config.workers == 1:
        outcomes = [
            _search_branch(
                dm, span, config.node_budget, deadline, config.symmetry_breaking, None
            )
        ]
    else:
        roots = _priority_order(dm)
        budgets = _branch_budgets(config.node_budget, len(roots))
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            futures = [
                executor.submit(
                    _search_branch,
                    dm,
                    span,
                    budget,
                    deadline,
                    config.symmetry_breaking,
                    u,
                )
                for u, budget in zip(roots, budgets)
            ]
            outcomes = [future.result() for future in futures]

    # Branches are read in priority order, as the sequential search visits them.
    nodes = sum(outcome[2] for outcome in outcomes)
    for status, labels, _ in outcomes:
        if status == "budget":
            raise SearchBudgetExceeded(span, nodes, time.monotonic() - started)
        if status == "found" and labels is not None:
            return Labeling(labels=dict(enumerate(labels))), nodes
    return None, nodes


def feasible_at_span(
    g: Graph, dm: DistanceMatrix, s: int, config: SolverConfig | None = None
) -> Labeling | None:
    """A radio labeling with span at most ``s``, or ``None`` if none exists.

    Raises:
        SearchBudgetExceeded: if the budgets in ``config`` run out first
    """
    config = config or SolverConfig()
    deadline = (
        time.monotonic() + config.time_budget if config.time_budget else None
    )
    witness, nodes = _feasible(dm, s, config, deadline)
    logger.info("Span attempt", span=s, feasible=witness is not None, nodes=nodes)
    return witness


def greedy_labeling(g: Graph, dm: DistanceMatrix) -> Labeling:
    """Label vertices in increasing order, always taking the smallest admissible
    label and breaking ties by priority. Valid, not necessarily optimal."""
    n = g.n_vertices
    reach = dm.diameter + 1
    rank = {u: r for r, u in enumerate(_priority_order(dm))}
    earliest = [1] * n
    labels: dict[int, int] = {}
    last = 0
    while len(labels) < n:
        label, _, u = min(
            (max(earliest[w], last + 1), rank[w], w)
            for w in range(n)
            if w not in labels
        )
        labels[u] = last = label
        for w in range(n):
            if w not in labels:
                earliest[w] = max(earliest[w], label + reach - dm.dist[u][w])
    return Labeling(labels=labels)


def solve(
    g: Graph, dm: DistanceMatrix, config: SolverConfig | None = None
) -> SolveResult:
    """Compute ``rn(g)`` with a witness, or an inconclusive bracket.

    Spans are tried upward from one below the best generic lower bound, so
    the span just under the answer is always exhausted by search. A feasible
    caller-supplied ``start_span`` is walked downward until a span fails.
    """
    config = config or SolverConfig()
    started = time.monotonic()
    deadline = started + config.time_budget if config.time_budget else None
    n = g.n_vertices
    bound = best_generic_bound(g, dm).value
    span = max(n, config.start_span if config.start_span else bound - 1)

    infeasible_below = n - 1
    witness: Labeling | None = None
    nodes = 0
    tried = 0

    def attempt(s: int) -> Labeling | None:
        nonlocal nodes, tried
        found, count = _feasible(dm, s, config, deadline)
        nodes += count
        tried += 1
        logger.info("Span attempt", span=s, feasible=found is not None, nodes=count)
        return found

    try:
        while witness is None:
            witness = attempt(span)
            if witness is None:
                infeasible_below = span
                span += 1
        while witness.span - 1 > infeasible_below:
            lower = attempt(witness.span - 1)
            if lower is None:
                infeasible_below = witness.span - 1
            else:
                witness = lower
    except SearchBudgetExceeded as e:
        logger.warning(
            "Solver budget exhausted", span=e.span, nodes=nodes + e.nodes_explored
        )
        upper = greedy_labeling(g, dm).span
        if witness is not None:
            upper = min(upper, witness.span)
        return SolveResult(
            status=SolveStatus.INCONCLUSIVE,
            lower_bound=max(bound, infeasible_below + 1),
            upper_bound=upper,
            stats=SolveStats(
                nodes_explored=nodes + e.nodes_explored,
                spans_tried=tried,
                wall_time=time.monotonic() - started,
            ),
        )

    rn = witness.span
    logger.info("Solved", rn=rn, nodes=nodes, spans_tried=tried)
    return SolveResult(
        status=SolveStatus.SOLVED,
        rn=rn,
        witness=witness,
        lower_bound=rn,
        upper_bound=rn,
        stats=SolveStats(
            nodes_explored=nodes,
            spans_tried=tried,
            wall_time=time.monotonic() - started,
        ),
    )
