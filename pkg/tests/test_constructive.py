"""Tests for the explicit labelings."""

import itertools
import tempfile
from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from radiolabel.bounds import lower_bound_gear
from radiolabel.constructive import (
    PositionAssignment,
    gear_label_at,
    gear_positions,
    label_complete,
    label_complete_bipartite,
    label_family,
    label_gear,
    label_star,
    label_wheel,
)
from radiolabel.exceptions import (
    FamilyParameterError,
    NoConstructionError,
    NotAGearError,
)
from radiolabel.families import (
    Family,
    FamilySpec,
    build,
    complete_bipartite_graph,
    complete_graph,
    family_radio_number,
    gear_graph,
    star_graph,
    wheel_graph,
)
from radiolabel.fixtures import FixtureStore
from radiolabel.graph_core import Role, RoleKind
from radiolabel.radio import check, is_radio_labeling

LARGE_GEARS = range(7, 65)


class TestSmallFamilies:
    """Test suite for the complete, star, bipartite and wheel labelers."""

    @pytest.mark.parametrize("n", [1, 4, 8])
    def test_complete(self, n: int) -> None:
        """Test consecutive labels on K_n."""
        c = label_complete(n)
        assert sorted(c.labels.values()) == list(range(1, n + 1))
        assert is_radio_labeling(complete_graph(n), c)

    def test_star(self) -> None:
        """Test center 1 and leaves from 3."""
        assert label_star(2).labels == {0: 1, 1: 3, 2: 4}
        assert label_star(5).span == 7
        assert is_radio_labeling(star_graph(10), label_star(10))
        assert label_star(10).span == 12

    def test_star_too_small(self) -> None:
        """Test that S_1 is rejected."""
        with pytest.raises(FamilyParameterError):
            label_star(1)

    def test_complete_bipartite(self) -> None:
        """Test the partition scheme, including K_{1,1}."""
        assert label_complete_bipartite(1, 1).labels == {0: 1, 1: 3}
        assert label_complete_bipartite(2, 3).span == 6
        c = label_complete_bipartite(3, 3)
        assert c.span == 7
        assert is_radio_labeling(complete_bipartite_graph(3, 3), c)

    def test_wheel_five(self) -> None:
        """Test the odd/even spoke split on W_5."""
        assert label_wheel(5).labels == {0: 1, 1: 3, 2: 5, 3: 7, 4: 4, 5: 6}

    def test_wheel_four(self) -> None:
        """Test W_4: center 1 and the cycle 3, 6, 4, 7."""
        c = label_wheel(4)
        assert [c[i] for i in range(1, 5)] == [3, 6, 4, 7]
        assert is_radio_labeling(wheel_graph(4), c)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_wheel_valid(self, n: int) -> None:
        """Test that every wheel labeling is valid with the closed-form span."""
        c = label_wheel(n)
        assert is_radio_labeling(wheel_graph(n), c)
        assert c.span == family_radio_number(FamilySpec(family=Family.WHEEL, n=n))

    def test_wheel_too_small(self) -> None:
        """Test that W_2 is rejected."""
        with pytest.raises(FamilyParameterError):
            label_wheel(2)

    @pytest.mark.parametrize(
        "spec",
        [
            FamilySpec(family=Family.COMPLETE, n=n)
            for n in range(1, 9)
        ]
        + [FamilySpec(family=Family.STAR, n=n) for n in range(2, 9)]
        + [
            FamilySpec(family=Family.COMPLETE_BIPARTITE, n=n, m=m)
            for m, n in itertools.product(range(1, 6), repeat=2)
            if m + n >= 3
        ]
        + [FamilySpec(family=Family.GEAR, n=n) for n in range(4, 12)],
        ids=lambda spec: spec.label,
    )
    def test_span_matches_closed_form(self, spec: FamilySpec) -> None:
        """Test that each labeler achieves the family's radio number."""
        c = label_family(spec)
        assert is_radio_labeling(build(spec), c)
        assert c.span == family_radio_number(spec)


class TestGearPositions:
    """Test suite for the gear position function."""

    def test_nine(self) -> None:
        """Test positions on G_9 (odd branch)."""
        g = gear_graph(9)
        pos = gear_positions(g).pos
        assert pos[0] == 0
        assert pos[g.vertex_of(Role.rim(9))] == 5
        assert pos[g.vertex_of(Role.rim(8))] == 9
        assert pos[g.vertex_of(Role.spoke(1))] == 10

    def test_eight(self) -> None:
        """Test positions on G_8 (even branch)."""
        g = gear_graph(8)
        pos = gear_positions(g).pos
        assert pos[g.vertex_of(Role.rim(7))] == 4
        assert pos[g.vertex_of(Role.rim(8))] == 8
        assert pos[g.vertex_of(Role.spoke(8))] == 16

    @pytest.mark.parametrize("n", [2, 3, 7, 10, 15])
    def test_rim_rule(self, n: int) -> None:
        """Test w_{2i-1} -> i and w_{2i} -> ceil(n/2) + i, spokes from n + 1."""
        g = gear_graph(n)
        pos = gear_positions(g).pos
        half = -(-n // 2)
        for i in range(1, n + 1):
            rim = pos[g.vertex_of(Role.rim(i))]
            expected = (i + 1) // 2 if i % 2 else half + i // 2
            assert rim == expected
            assert pos[g.vertex_of(Role.spoke(i))] == n + i

    def test_inverse_round_trip(self) -> None:
        """Test that the inverse maps positions back to vertices."""
        assignment = gear_positions(gear_graph(11))
        inverse = assignment.inverse()
        assert sorted(inverse) == list(range(23))
        assert all(assignment.pos[u] == i for i, u in inverse.items())

    def test_not_a_bijection(self) -> None:
        """Test that repeated positions are rejected."""
        with pytest.raises(ValidationError):
            PositionAssignment(pos={0: 0, 1: 0})

    def test_not_a_gear(self) -> None:
        """Test that a wheel has no gear positions."""
        with pytest.raises(NotAGearError):
            gear_positions(wheel_graph(6))


class TestGearLabeling:
    """Test suite for the explicit gear labeling."""

    def test_label_values_nine(self) -> None:
        """Test the label formula along the positions of G_9."""
        assert gear_label_at(0, 9) == 1
        assert [gear_label_at(i, 9) for i in range(1, 10)] == list(range(4, 13))
        assert gear_label_at(10, 9) == 14
        assert gear_label_at(11, 9) == 17
        assert gear_label_at(18, 9) == 38

    def test_positions_recorded(self) -> None:
        """Test that labels increase along the recorded positions."""
        c = label_gear(gear_graph(9))
        assert c.positions is not None
        by_position = sorted(c.labels, key=lambda u: c.positions[u])
        values = [c[u] for u in by_position]
        assert values == sorted(values)

    @pytest.mark.parametrize("n", LARGE_GEARS)
    def test_gear_sandwich(self, n: int) -> None:
        """Test construction span and lower bound meet at 4n + 2."""
        g = gear_graph(n)
        c = label_gear(g)
        assert check(g, g.distances, c) == []
        assert c.span == 4 * n + 2
        assert lower_bound_gear(n).value == 4 * n + 2

    @pytest.mark.parametrize("n", LARGE_GEARS)
    def test_case_properties(self, n: int) -> None:
        """Test the gap and range properties the construction relies on."""
        g = gear_graph(n)
        dm = g.distances
        c = label_gear(g)
        rims = g.vertices_with(RoleKind.RIM)
        spokes = g.vertices_with(RoleKind.SPOKE)

        for u, v in itertools.combinations(rims, 2):
            if dm.d(u, v) == 2:
                assert abs(c[u] - c[v]) >= 3
        for u, v in itertools.combinations(spokes, 2):
            assert abs(c[u] - c[v]) >= 3

        assert {c[v] for v in spokes} <= set(range(n + 5, 4 * n + 3, 3))
        assert {c[w] for w in rims} <= set(range(4, n + 4))

        z = 0
        w1 = g.vertex_of(Role.rim(1))
        v1 = g.vertex_of(Role.spoke(1))
        assert dm.d(z, w1) + abs(c[z] - c[w1]) == 5
        assert dm.d(v1, w1) + abs(c[v1] - c[w1]) == n + 2

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_small_gears_from_fixtures(self, n: int) -> None:
        """Test that G_4 .. G_6 come from the fixture store."""
        g = gear_graph(n)
        c = label_gear(g)
        assert is_radio_labeling(g, c)
        assert c.span == 4 * n + 2

    @pytest.mark.parametrize("n", [2, 3])
    def test_no_construction_below_four(self, n: int) -> None:
        """Test that G_2 and G_3 have no construction."""
        with pytest.raises(NoConstructionError):
            label_gear(gear_graph(n))

    def test_missing_fixture(self) -> None:
        """Test a store without the requested gear."""
        with tempfile.NamedTemporaryFile(mode="w", suffix=".yaml", delete=False) as f:
            yaml.dump({"gears": []}, f)
            temp_path = f.name

        try:
            with pytest.raises(NoConstructionError):
                label_gear(gear_graph(5), FixtureStore(temp_path))
        finally:
            Path(temp_path).unlink()

    def test_not_a_gear(self) -> None:
        """Test that label_gear needs a standard gear."""
        with pytest.raises(NotAGearError):
            label_gear(star_graph(4))
