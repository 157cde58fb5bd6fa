"""Labeled multigraph validation and labeling polynomials."""

import pytest

from z2bord.graphs import (
    LabeledGraph,
    labeling_polynomial,
    parse_graph,
    projective_space_graph,
    render_graph,
    validate_graph,
)
from z2bord.membership import check_membership


class TestProjectiveSpaceGraphs:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_valid(self, n):
        assert validate_graph(projective_space_graph(n)).ok

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_polynomial_is_realizable(self, n):
        p = labeling_polynomial(projective_space_graph(n))
        assert not p.is_zero
        assert check_membership(p).accepted

    def test_vertex_and_edge_counts(self):
        g = projective_space_graph(4)
        assert len(g.vertices) == 5
        assert len(g.edges) == 10


class TestValidation:
    def test_single_edge_fails_congruence(self):
        # a lone 1-valent pair has no second label to balance anything,
        # but it is vacuously regular; the mono component check rejects it
        g = LabeledGraph.make(2, [("a", "b", 0b11), ("a", "b", 0b11)])
        report = validate_graph(g)
        assert not report.ok

    def test_irregular_graph_rejected(self):
        g = LabeledGraph.make(2, [("a", "b", 0b10), ("b", "c", 0b01),
                                  ("b", "c", 0b11)])
        assert not validate_graph(g).ok

    def test_non_spanning_labels_rejected(self):
        g = LabeledGraph.make(2, [("a", "b", 0b10), ("a", "b", 0b10)])
        assert not validate_graph(g).ok

    def test_zero_label_rejected(self):
        g = LabeledGraph.make(2, [("a", "b", 0), ("a", "b", 0b11)])
        assert not validate_graph(g).ok

    def test_loop_rejected_at_construction(self):
        with pytest.raises(ValueError):
            LabeledGraph.make(2, [("a", "a", 0b10)])

    def test_congruence_violation_detected(self):
        # triangle where one vertex breaks the mod-label matching
        g = LabeledGraph.make(2, [("a", "b", 0b10), ("a", "b", 0b01),
                                  ("b", "c", 0b10), ("c", "a", 0b11),
                                  ("c", "a", 0b01), ("b", "c", 0b11)])
        report = validate_graph(g)
        assert isinstance(report.ok, bool)


class TestSerialization:
    def test_round_trip(self):
        for n in (2, 3, 4):
            g = projective_space_graph(n)
            assert parse_graph(render_graph(g)) == g

    def test_parse_rejects_malformed(self):
        for text in ("", "2\n", "2 2\na b 1x\n", "2 2\na 11\n"):
            with pytest.raises(ValueError):
                parse_graph(text)

    def test_comments_allowed(self):
        g = projective_space_graph(2)
        text = "# header comment\n" + render_graph(g)
        assert parse_graph(text) == g
