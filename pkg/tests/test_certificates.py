"""
Tests for non-toroidality and non-projectivity certificates.
"""
import pytest

from subgroup_graphs.certificates import (
    k5_witness,
    nonprojectivity_certificate,
    nontoroidality_certificate,
    two_disjoint_nonplanar,
)
from subgroup_graphs.graphs import CopiesOf, K, Kmn, complete, eval_expr


class TestNontoroidality:
    """Test witnesses for genus at least 2."""

    @pytest.mark.parametrize("graph,kind", [
        (complete(8), "K8"),
        (eval_expr(Kmn(4, 5)), "K4,5"),
        (eval_expr(Kmn(3, 7)), "K3,7"),
        (eval_expr(CopiesOf(2, K(5))), "2K5"),
    ])
    def test_kinds(self, graph, kind):
        """Test which detector fires first."""
        witness = nontoroidality_certificate(graph)
        assert witness is not None
        assert witness.kind == kind

    def test_clique_vertices(self):
        """Test that the K8 witness lists eight vertices."""
        witness = nontoroidality_certificate(complete(9))
        assert len(witness.vertices) == 8

    @pytest.mark.parametrize("graph", [complete(7), eval_expr(Kmn(4, 4)), complete(4)])
    def test_toroidal_graphs_have_none(self, graph):
        """Test that toroidal graphs get no certificate."""
        assert nontoroidality_certificate(graph) is None


class TestNonprojectivity:
    """Test witnesses for crosscap number at least 2."""

    @pytest.mark.parametrize("graph,kind", [
        (complete(7), "K7"),
        (eval_expr(Kmn(3, 5)), "K3,5"),
        (eval_expr(Kmn(4, 4)), "K4,4"),
        (eval_expr(CopiesOf(2, K(5))), "two-disjoint-nonplanar"),
    ])
    def test_kinds(self, graph, kind):
        """Test which detector fires first."""
        witness = nonprojectivity_certificate(graph)
        assert witness is not None
        assert witness.kind == kind

    @pytest.mark.parametrize("graph", [complete(6), complete(5), eval_expr(Kmn(3, 4))])
    def test_projective_graphs_have_none(self, graph):
        """Test that projective-planar graphs get no certificate."""
        assert nonprojectivity_certificate(graph) is None


class TestDisjointNonplanar:
    """Test the disjoint pair detector."""

    def test_disjoint_k33_pair(self):
        """Test two disjoint copies of K3,3."""
        witness = two_disjoint_nonplanar(eval_expr(CopiesOf(2, Kmn(3, 3))))
        assert witness is not None
        assert len(witness.vertices) == 12

    def test_single_k5(self):
        """Test that one K5 is not enough."""
        assert two_disjoint_nonplanar(complete(5)) is None

    def test_k5_witness(self):
        """Test the K5 subgraph witness."""
        assert k5_witness(complete(6)).kind == "K5"
        assert k5_witness(eval_expr(Kmn(3, 3))) is None
