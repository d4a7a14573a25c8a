"""
Tests for the exact independence and clique cover searches.
"""
import pytest

from subgroup_graphs.cliques import (
    chromatic_coloring,
    clique_cover_number,
    independence_number,
    maximum_clique,
    maximum_independent_set,
    minimum_clique_cover,
)
from subgroup_graphs.errors import SearchBudgetExceeded
from subgroup_graphs.graphs import (
    DisjointUnion,
    Join,
    K,
    Kbar,
    Kmn,
    complete,
    cycle,
    eval_expr,
    make_graph,
)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


class TestMaximumClique:
    """Test the clique search."""

    def test_complete(self):
        """Test that K6 is its own maximum clique."""
        assert maximum_clique(complete(6)) == [0, 1, 2, 3, 4, 5]

    def test_pentagon(self):
        """Test that C5 has clique number 2."""
        assert len(maximum_clique(cycle(5))) == 2

    def test_empty_graph(self):
        """Test the graph without vertices."""
        assert maximum_clique(make_graph(0, [])) == []

    def test_budget(self):
        """Test that a tiny budget raises with the node count."""
        with pytest.raises(SearchBudgetExceeded) as excinfo:
            maximum_clique(cycle(5), budget=1)
        assert excinfo.value.nodes == 2


class TestIndependence:
    """Test alpha on known graphs."""

    @pytest.mark.parametrize("graph,alpha", [
        (cycle(5), 2),
        (petersen(), 4),
        (complete(4), 1),
        (eval_expr(DisjointUnion(Kmn(1, 3), Kbar(4))), 7),
        (eval_expr(Join(K(1), DisjointUnion(K(2), K(1)))), 2),
    ])
    def test_alpha(self, graph, alpha):
        """Test the independence number."""
        assert independence_number(graph) == alpha

    def test_set_is_independent(self):
        """Test that the returned set has no internal edge."""
        g = petersen()
        chosen = set(maximum_independent_set(g))
        assert not any(u in chosen and v in chosen for u, v in g.edges)


class TestCliqueCover:
    """Test colourings and clique covers."""

    def test_coloring_is_proper(self):
        """Test that C5 needs three colours and the colouring is proper."""
        colors = chromatic_coloring(cycle(5))
        assert max(colors) + 1 == 3
        assert all(colors[u] != colors[v] for u, v in cycle(5).edges)

    def test_complete_coloring(self):
        """Test that K4 needs four colours."""
        assert max(chromatic_coloring(complete(4))) + 1 == 4

    @pytest.mark.parametrize("graph,theta", [
        (cycle(5), 3),
        (petersen(), 5),
        (complete(5), 1),
        (eval_expr(DisjointUnion(Kmn(1, 3), Kbar(4))), 7),
        (eval_expr(Kbar(3)), 3),
    ])
    def test_theta(self, graph, theta):
        """Test the clique cover number."""
        assert clique_cover_number(graph) == theta

    def test_cover_is_valid(self):
        """Test that each class is a clique and every vertex is covered once."""
        g = petersen()
        cover = minimum_clique_cover(g)
        edges = set(g.edges)
        assert sorted(v for part in cover for v in part) == list(range(10))
        for part in cover:
            assert all((u, v) in edges for i, u in enumerate(part) for v in part[i + 1:])

    def test_alpha_never_exceeds_theta(self):
        """Test weak duality on a few graphs."""
        for g in (cycle(7), petersen(), eval_expr(Kmn(2, 3))):
            assert independence_number(g) <= clique_cover_number(g)
