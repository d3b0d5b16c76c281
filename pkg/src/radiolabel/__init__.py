"""radiolabel.

Radio labelings of graphs: generators for the complete, star, complete
bipartite, wheel and gear families, a verifier for the radio condition, lower
bounds, explicit span-optimal constructions and an exact solver.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundMethod,
    BoundReport,
    best_generic_bound,
    lower_bound,
    lower_bound_ecc_gap,
    lower_bound_for_family,
    lower_bound_gear,
    lower_bound_trivial,
)
from .config import AppSettings, Config, SolverConfig
from .constructive import label_family, label_gear
from .exceptions import RadioLabelError
from .families import Family, FamilySpec, build, family_radio_number, gear_graph
from .fixtures import FixtureStore, GearFixture
from .graph_core import DistanceMatrix, Graph, all_pairs_distances, to_dot
from .intervals import IntervalSet
from .radio import Labeling, Violation, check, forbidden_values, is_radio_labeling
from .solver import SolveResult, SolveStatus, feasible_at_span, solve

__all__ = [
    "AppSettings",
    "BoundMethod",
    "BoundReport",
    "Config",
    "DistanceMatrix",
    "Family",
    "FamilySpec",
    "FixtureStore",
    "GearFixture",
    "Graph",
    "IntervalSet",
    "Labeling",
    "RadioLabelError",
    "SolveResult",
    "SolveStatus",
    "SolverConfig",
    "Violation",
    "all_pairs_distances",
    "best_generic_bound",
    "build",
    "check",
    "family_radio_number",
    "feasible_at_span",
    "forbidden_values",
    "gear_graph",
    "is_radio_labeling",
    "label_family",
    "label_gear",
    "lower_bound",
    "lower_bound_ecc_gap",
    "lower_bound_for_family",
    "lower_bound_gear",
    "lower_bound_trivial",
    "solve",
    "to_dot",
]
