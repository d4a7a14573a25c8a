"""
Tests for intersection graphs and the per-group classification report.
"""
import pytest

from subgroup_graphs.classify import analyse_group, classify, decide_genus, intersection_graph
from subgroup_graphs.config import RunConfig
from subgroup_graphs.embedding import trace_faces
from subgroup_graphs.graphs import Kmn, complete, eval_expr
from subgroup_graphs.groups import FiniteGroup


class TestIntersectionGraph:
    """Test graph construction from a lattice."""

    def test_quaternion(self, lattice_of):
        """Test that Q8 gives K4."""
        graph = intersection_graph(lattice_of("genq:8"))
        assert (graph.n, graph.m) == (4, 6)

    def test_alternating_four(self, lattice_of):
        """Test that A4 gives a star plus four isolated vertices."""
        graph = intersection_graph(lattice_of("alt:4"))
        assert (graph.n, graph.m) == (8, 3)

    def test_labels(self, lattice_of):
        """Test vertex labels in lattice order."""
        graph = intersection_graph(lattice_of("cyclic:8"))
        assert graph.labels == ("|H|=2 <4>", "|H|=4 <2>")
        assert graph.edges == ((0, 1),)

    def test_prime_cyclic_is_empty(self, lattice_of):
        """Test that Z_p has the null graph."""
        assert intersection_graph(lattice_of("cyclic:5")).n == 0


class TestDecideGenus:
    """Test certificate short-circuits and the exact fallback."""

    def test_certificate(self):
        """Test that K8 is settled by a certificate."""
        result, witness = decide_genus(complete(8), True, budget=1000)
        assert witness.kind == "K8"
        assert result.lower == 2
        assert not result.exact

    def test_exact(self):
        """Test that K5 falls through to the search."""
        result, witness = decide_genus(complete(5), True, budget=100_000)
        assert witness is None
        assert result.exact and result.value == 1

    def test_nonorientable_certificate(self):
        """Test the K4,4 certificate for crosscaps."""
        result, witness = decide_genus(eval_expr(Kmn(4, 4)), False, budget=1000)
        assert witness.kind == "K4,4"
        assert result.lower == 2

    @pytest.mark.parametrize("graph", [complete(8), complete(9), eval_expr(Kmn(5, 5))])
    def test_certified_scheme_traces_to_upper(self, graph):
        """Test that a certified handle bound is the genus of its own scheme."""
        result, witness = decide_genus(graph, True, budget=1000)
        assert witness is not None
        trace = trace_faces(graph, result.scheme)
        assert trace.orientable
        assert trace.euler_genus == 2 * result.upper
        assert result.upper >= result.lower

    @pytest.mark.parametrize("graph", [complete(8), eval_expr(Kmn(4, 4)), eval_expr(Kmn(3, 5))])
    def test_certified_crosscap_scheme_is_twisted(self, graph):
        """Test that a certified crosscap bound comes from a nonorientable scheme."""
        result, witness = decide_genus(graph, False, budget=1000)
        assert witness is not None
        trace = trace_faces(graph, result.scheme)
        assert not trace.orientable
        assert not result.scheme.all_positive
        assert trace.euler_genus == result.upper
        assert result.upper >= result.lower


class TestClassify:
    """Test full reports."""

    def test_quaternion_report(self, build, small_config):
        """Test the Q8 report."""
        report = classify(build("genq:8"), small_config)
        assert report.label == "Q8"
        assert report.planar
        assert report.toroidal is False
        assert report.projective_planar is False
        assert report.girth == 3
        assert (report.alpha, report.theta, report.prime_order_subgroups) == (1, 1, 1)
        assert report.weakly_alpha_perfect
        assert not report.budget_exceeded

    def test_alternating_report(self, build, small_config):
        """Test the A4 report."""
        report = classify(build("alt:4"), small_config)
        assert report.girth is None
        assert report.structural["bipartite"]
        assert report.x_free["C4"]
        assert (report.alpha, report.theta) == (7, 7)
        assert report.prime_order_subgroups == 7

    def test_toroidal_cyclic(self, build, small_config):
        """Test that Z64 gives K5 with both genus searches exact."""
        analysis = analyse_group(build("cyclic:64"), small_config)
        report = analysis.report
        assert not report.planar
        assert report.toroidal and report.projective_planar
        assert report.orientable_genus.exact and report.orientable_genus.lower == 1
        kinds = {w.kind for w in report.witnesses}
        assert {"kuratowski-K5", "K5"} <= kinds
        assert set(analysis.schemes) == {"orientable", "nonorientable"}

    def test_flagged_notes(self, build, small_config):
        """Test that a known discrepancy of the family is reported."""
        report = classify(build("abelian:4x2"), small_config)
        assert any("Z4xZ2" in note for note in report.flagged)

    def test_search_budget(self, build):
        """Test that an exhausted clique search leaves alpha undecided."""
        report = classify(build("alt:4"), RunConfig(search_node_budget=1))
        assert report.alpha is None and report.theta is None
        assert report.budget_exceeded
        assert report.weakly_alpha_perfect is None

    def test_group_without_family(self, build, small_config):
        """Test a bare multiplication table."""
        z5 = build("cyclic:5")
        bare = FiniteGroup(order=z5.order, table=z5.table, family=None, name="table")
        report = classify(bare, small_config)
        assert report.label == "unknown"
        assert report.family == "table"
        assert report.vertices == 0
