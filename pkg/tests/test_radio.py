"""Tests for labelings and the radio-condition verifier."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from radiolabel.constructive import label_gear, label_wheel
from radiolabel.exceptions import EmptyLabelingError, InvalidLabelingError
from radiolabel.families import complete_graph, gear_graph, star_graph, wheel_graph
from radiolabel.graph_core import Graph, Role
from radiolabel.radio import (
    Labeling,
    Violation,
    check,
    forbidden_values,
    is_radio_labeling,
    iter_violations,
    span,
)


def shifted(c: Labeling, k: int) -> Labeling:
    return Labeling(labels={u: value + k for u, value in c.labels.items()})


class TestLabeling:
    """Test suite for the Labeling model."""

    def test_non_positive_label(self) -> None:
        """Test that labels start at 1."""
        g = complete_graph(2)
        with pytest.raises(InvalidLabelingError, match="labels start at 1"):
            check(g, g.distances, Labeling(labels={0: 0, 1: 2}))

    def test_non_positive_label_in_document(self) -> None:
        """Test that a zero label in a document is an invalid labeling."""
        with pytest.raises(InvalidLabelingError):
            Labeling.from_document({"labels": {"0": 0, "1": 2}})

    def test_malformed_document(self) -> None:
        """Test that a non-integer label is an invalid labeling."""
        with pytest.raises(InvalidLabelingError, match="malformed"):
            Labeling.from_document({"labels": {"0": "one"}})

    def test_span(self) -> None:
        """Test span of simple labelings."""
        assert span(Labeling(labels={0: 1})) == 1
        assert Labeling(labels={0: 3, 1: 9, 2: 5}).span == 9

    def test_empty_span(self) -> None:
        """Test that an empty labeling has no span."""
        with pytest.raises(EmptyLabelingError):
            span(Labeling(labels={}))

    def test_document_round_trip(self) -> None:
        """Test the JSON document form with string keys."""
        c = Labeling(labels={1: 4, 0: 1}, positions={0: 0, 1: 1})
        doc = c.to_document()
        assert doc == {"labels": {"0": 1, "1": 4}, "positions": {"0": 0, "1": 1}}
        assert Labeling.from_document(doc) == c

    def test_from_labeled_graph_document(self) -> None:
        """Test that graph keys next to the labels are ignored."""
        doc = {"n_vertices": 2, "edges": [[0, 1]], "labels": {"0": 1, "1": 3}}
        assert Labeling.from_document(doc).labels == {0: 1, 1: 3}


class TestCheck:
    """Test suite for check and iter_violations."""

    def test_complete_graph_consecutive(self) -> None:
        """Test that consecutive labels suffice when the diameter is 1."""
        g = complete_graph(4)
        c = Labeling(labels={0: 1, 1: 2, 2: 3, 3: 4})
        assert check(g, g.distances, c) == []

    def test_star_consecutive_center(self) -> None:
        """Test that the center may not sit next to a leaf label."""
        g = star_graph(3)
        c = Labeling(labels={0: 1, 1: 2, 2: 3, 3: 4})
        violations = check(g, g.distances, c)
        assert violations == [
            Violation(u=0, v=1, distance=1, label_gap=1, required=3)
        ]
        assert str(violations[0]) == "(0,1) d=1 gap=1 need=3"

    def test_gear_nine_construction_valid(self) -> None:
        """Test the explicit gear labeling on G_9."""
        g = gear_graph(9)
        assert is_radio_labeling(g, label_gear(g))

    def test_spans(self) -> None:
        """Test spans of the gear and wheel constructions."""
        assert label_gear(gear_graph(8)).span == 34
        assert label_wheel(5).span == 7

    def test_partial_labeling(self) -> None:
        """Test that a partial labeling is an error, not a violation."""
        g = star_graph(2)
        with pytest.raises(InvalidLabelingError, match="missing"):
            check(g, g.distances, Labeling(labels={0: 1, 1: 3}))

    def test_unknown_vertex(self) -> None:
        """Test labels on vertices outside the graph."""
        g = complete_graph(2)
        with pytest.raises(InvalidLabelingError, match="unknown"):
            check(g, g.distances, Labeling(labels={0: 1, 1: 2, 5: 3}))

    def test_non_injective(self) -> None:
        """Test that repeated labels are an error."""
        g = star_graph(2)
        with pytest.raises(InvalidLabelingError, match="used by both"):
            check(g, g.distances, Labeling(labels={0: 1, 1: 4, 2: 4}))

    def test_iter_violations_is_lazy(self) -> None:
        """Test that the first violation is available without the rest."""
        g = complete_graph(3)
        c = Labeling(labels={0: 1, 1: 2, 2: 3})
        star = star_graph(3)
        bad = Labeling(labels={0: 2, 1: 1, 2: 3, 3: 4})
        assert next(iter_violations(g, g.distances, c), None) is None
        first = next(iter_violations(star, star.distances, bad))
        assert (first.u, first.v) == (0, 1)

    def test_violations_are_unordered_pairs(self) -> None:
        """Test that each violating pair is reported once with u < v."""
        g = gear_graph(5)
        c = Labeling(labels={u: u + 1 for u in g.vertices()})
        violations = check(g, g.distances, c)
        pairs = [(v.u, v.v) for v in violations]
        assert len(pairs) == len(set(pairs))
        assert all(u < v for u, v in pairs)
        assert all(v.distance + v.label_gap < v.required for v in violations)

    def test_center_moved_next_to_first_rim(self) -> None:
        """Test that moving the center from 1 to 3 clashes with w_1 at 4."""
        g = gear_graph(9)
        c = label_gear(g)
        labels = dict(c.labels)
        labels[0] = 3
        violations = check(g, g.distances, Labeling(labels=labels))
        w1 = g.vertex_of(Role.rim(1))
        assert Violation(u=0, v=w1, distance=2, label_gap=1, required=5) in violations

    @pytest.mark.parametrize("n", [4, 7, 8, 12])
    @pytest.mark.parametrize("k", [1, 5])
    def test_translation_preserves_validity(self, n: int, k: int) -> None:
        """Test that adding a constant to every label keeps it valid."""
        g = gear_graph(n)
        assert is_radio_labeling(g, shifted(label_gear(g), k))

    @given(st.integers(7, 20), st.integers(0, 50))
    def test_translation_property(self, n: int, k: int) -> None:
        """Test translation invariance across gear sizes."""
        g = gear_graph(n)
        c = label_gear(g)
        assert check(g, g.distances, shifted(c, k)) == []


class TestMutationKill:
    """Perturbations that break the radio condition must be caught."""

    @pytest.mark.parametrize("seed", range(100))
    def test_move_into_forbidden_window(self, seed: int) -> None:
        """Move one label into a near neighbour's forbidden window."""
        rng = random.Random(seed)
        g = gear_graph(8)
        dm = g.distances
        c = label_gear(g)
        used = set(c.labels.values())
        reach = dm.diameter + 1
        pairs = [
            (u, v)
            for u in g.vertices()
            for v in g.vertices()
            if u != v and dm.d(u, v) <= 2
        ]
        while True:
            u, v = rng.choice(pairs)
            radius = reach - dm.d(u, v)
            window = range(
                max(1, c[v] - radius + 1), c[v] + radius
            )
            choices = [x for x in window if x not in used]
            if choices:
                break
        labels = dict(c.labels)
        labels[u] = rng.choice(choices)
        mutated = Labeling(labels=labels)

        violations = check(g, dm, mutated)
        assert violations
        assert any({x.u, x.v} == {u, v} for x in violations)


class TestForbiddenValues:
    """Test suite for forbidden_values."""

    def test_star_center(self) -> None:
        """Test the values a labeled center forbids for a leaf."""
        g = star_graph(3)
        c = Labeling(labels={0: 1})
        assert forbidden_values(g, g.distances, c, 1).intervals() == [(1, 2)]

    def test_gear_rim_against_center(self) -> None:
        """Test a rim at distance 2 from a center labeled 1."""
        g = gear_graph(7)
        c = Labeling(labels={0: 1, 1: 20})
        rim = g.vertex_of(Role.rim(3))
        forbidden = forbidden_values(g, g.distances, c, rim)
        # center at distance 2, v1 at distance 3
        assert forbidden.intervals() == [(1, 3), (19, 21)]

    def test_own_label_ignored(self) -> None:
        """Test that a vertex's own label does not forbid anything."""
        g = complete_graph(2)
        c = Labeling(labels={0: 5})
        assert len(forbidden_values(g, g.distances, c, 0)) == 0

    def test_consistent_with_check(self) -> None:
        """Test that every allowed value keeps the labeling valid."""
        g = wheel_graph(6)
        c = label_wheel(6)
        spoke = 3
        others = Labeling(
            labels={u: value for u, value in c.labels.items() if u != spoke}
        )
        forbidden = forbidden_values(g, g.distances, others, spoke)
        used = set(others.labels.values())
        for value in range(1, 12):
            if value in used:
                continue
            labels = {**others.labels, spoke: value}
            valid = is_radio_labeling(g, Labeling(labels=labels))
            assert valid == (value not in forbidden)

    def test_single_vertex_graph(self) -> None:
        """Test the one-vertex graph labeled 1."""
        g = Graph(1, [])
        assert is_radio_labeling(g, Labeling(labels={0: 1}))
