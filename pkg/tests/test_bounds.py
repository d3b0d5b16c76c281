"""Tests for the lower bounds."""

import json

import pytest

from radiolabel.bounds import (
    BoundMethod,
    best_generic_bound,
    lower_bound,
    lower_bound_ecc_gap,
    lower_bound_for_family,
    lower_bound_gear,
    lower_bound_trivial,
)
from radiolabel.exceptions import BoundHypothesisError, NotAGearError
from radiolabel.families import (
    Family,
    FamilySpec,
    complete_graph,
    gear_graph,
    star_graph,
    wheel_graph,
)


class TestTrivialBound:
    """Test suite for the vertex-count bound."""

    def test_values(self) -> None:
        """Test |V| on a few graphs."""
        assert lower_bound_trivial(complete_graph(4)).value == 4
        assert lower_bound_trivial(gear_graph(8)).value == 17
        report = lower_bound_trivial(star_graph(5))
        assert report.value == 6
        assert report.method is BoundMethod.TRIVIAL_VERTEX_COUNT
        assert report.per_vertex_forbidden is None


class TestEccentricityGapBound:
    """Test suite for the eccentricity-gap bound."""

    def test_gear_eight(self) -> None:
        """Test 17 + (2 + 8) - 2 = 25 on G_8."""
        g = gear_graph(8)
        report = lower_bound_ecc_gap(g, g.distances)
        assert report.value == 25
        assert report.method is BoundMethod.ECCENTRICITY_GAP

    def test_complete(self) -> None:
        """Test that every slack is zero on K_n."""
        g = complete_graph(6)
        assert lower_bound_ecc_gap(g, g.distances).value == 6

    def test_star(self) -> None:
        """Test that only the center has slack on S_5."""
        g = star_graph(5)
        assert lower_bound_ecc_gap(g, g.distances).value == 6

    @pytest.mark.parametrize(
        "g",
        [complete_graph(5), star_graph(7), wheel_graph(6), gear_graph(3)]
        + [gear_graph(n) for n in range(4, 12)],
    )
    def test_at_least_trivial(self, g) -> None:
        """Test that the eccentricity-gap bound never drops below |V|."""
        assert lower_bound_ecc_gap(g, g.distances).value >= g.n_vertices


class TestGearBound:
    """Test suite for the gear forbidden-value bound."""

    def test_gear_eight(self) -> None:
        """Test 17 labels plus 17 forbidden values on G_8."""
        report = lower_bound_gear(8)
        assert report.value == 34
        assert report.method is BoundMethod.GEAR_FORBIDDEN
        forbidden = report.per_vertex_forbidden
        assert forbidden is not None
        assert forbidden[0] == 2
        assert [forbidden[i] for i in range(1, 9)] == [2] * 7 + [1]
        assert all(forbidden[i] == 0 for i in range(9, 17))
        assert sum(forbidden.values()) == 17

    @pytest.mark.parametrize("n,expected", [(4, 18), (5, 22), (100, 402)])
    def test_values(self, n: int, expected: int) -> None:
        """Test 4n + 2."""
        assert lower_bound_gear(n).value == expected

    @pytest.mark.parametrize("n", [2, 3])
    def test_diameter_hypothesis(self, n: int) -> None:
        """Test that gears below n = 4 are refused."""
        with pytest.raises(BoundHypothesisError) as exc_info:
            lower_bound_gear(n)
        assert exc_info.value.n == n

    @pytest.mark.parametrize("n", range(4, 65))
    def test_dominates_generic_bounds(self, n: int) -> None:
        """Test gear >= eccentricity gap >= trivial on every large gear."""
        g = gear_graph(n)
        gear = lower_bound_gear(n).value
        ecc = lower_bound_ecc_gap(g, g.distances).value
        assert gear >= ecc >= lower_bound_trivial(g).value
        assert gear > ecc


class TestDispatch:
    """Test suite for method and family dispatch."""

    def test_lower_bound_by_method(self) -> None:
        """Test that lower_bound routes each method."""
        g = gear_graph(8)
        dm = g.distances
        assert lower_bound(g, dm, BoundMethod.TRIVIAL_VERTEX_COUNT).value == 17
        assert lower_bound(g, dm, BoundMethod.ECCENTRICITY_GAP).value == 25
        assert lower_bound(g, dm, BoundMethod.GEAR_FORBIDDEN).value == 34

    def test_gear_method_needs_gear(self) -> None:
        """Test the gear method on a wheel."""
        g = wheel_graph(5)
        with pytest.raises(NotAGearError):
            lower_bound(g, g.distances, BoundMethod.GEAR_FORBIDDEN)

    def test_best_generic(self) -> None:
        """Test that the stronger generic bound wins."""
        g = gear_graph(8)
        assert best_generic_bound(g, g.distances).method is BoundMethod.ECCENTRICITY_GAP
        k = complete_graph(3)
        assert best_generic_bound(k, k.distances).value == 3

    def test_for_family(self) -> None:
        """Test the family default: gear count for gears, generic otherwise."""
        gear = lower_bound_for_family(FamilySpec(family=Family.GEAR, n=8))
        assert gear.method is BoundMethod.GEAR_FORBIDDEN
        small = lower_bound_for_family(FamilySpec(family=Family.GEAR, n=3))
        assert small.method is not BoundMethod.GEAR_FORBIDDEN
        wheel = lower_bound_for_family(FamilySpec(family=Family.WHEEL, n=5))
        assert wheel.value == 6

    def test_report_json(self) -> None:
        """Test the JSON form of a report."""
        data = json.loads(lower_bound_gear(4).model_dump_json())
        assert data["method"] == "gear"
        assert data["per_vertex_forbidden"]["4"] == 1
