"""
Tests for graph constructors, model expressions, isomorphism and structure.
"""
import math
from itertools import permutations

import networkx as nx
import pytest

from subgroup_graphs.errors import MalformedExpression, UnsupportedFormat
from subgroup_graphs.graphs import (
    C,
    Complement,
    CopiesOf,
    DisjointUnion,
    Join,
    K,
    Kbar,
    Kmn,
    P,
    PendantsAt,
    X_FREE_PATTERNS,
    complete,
    cycle,
    eval_expr,
    export_graph,
    find_biclique,
    find_clique,
    format_adjacency,
    format_dot,
    format_expr,
    from_networkx,
    girth,
    has_subgraph,
    induced_subgraph,
    is_isomorphic,
    make_graph,
    parse_expr,
    path,
    read_adjacency,
    structural_predicates,
    to_networkx,
    x_free,
    x_free_record,
)


class TestConstruction:
    """Test normalisation and constructors."""

    def test_edges_normalised(self):
        """Test that edges are oriented, sorted and deduplicated."""
        g = make_graph(3, [(2, 0), (0, 2), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))

    def test_loop_rejected(self):
        """Test that loops are rejected."""
        with pytest.raises(MalformedExpression):
            make_graph(2, [(1, 1)])

    def test_endpoint_out_of_range(self):
        """Test that endpoints must be vertices."""
        with pytest.raises(MalformedExpression):
            make_graph(2, [(0, 2)])

    def test_label_count(self):
        """Test that labels must match the vertex count."""
        with pytest.raises(MalformedExpression):
            make_graph(2, [], labels=["a"])

    def test_sizes(self):
        """Test vertex and edge counts of the basic families."""
        assert complete(6).m == 15
        assert eval_expr(Kmn(3, 5)).m == 15
        assert cycle(5).m == 5
        assert path(3).n == 4


class TestExpressions:
    """Test evaluation, parsing and formatting of model expressions."""

    def test_join_of_union(self):
        """Test K1 + (K4 u Kbar2): seven vertices and twelve edges."""
        g = eval_expr(Join(K(1), DisjointUnion(K(4), Kbar(2))))
        assert (g.n, g.m) == (7, 12)

    def test_copies(self):
        """Test qK2."""
        g = eval_expr(CopiesOf(3, K(2)))
        assert (g.n, g.m) == (6, 3)

    def test_complement(self):
        """Test that the complement of Kbar(4) is K4."""
        assert eval_expr(Complement(Kbar(4))) == complete(4)

    def test_pendants(self):
        """Test pendants appended after the inner vertices."""
        g = eval_expr(PendantsAt(K(3), 0, 2))
        assert g.n == 5
        assert (0, 3) in g.edges and (0, 4) in g.edges

    @pytest.mark.parametrize("expr", [K(0), Kbar(-1), C(2), PendantsAt(K(2), 5, 1)])
    def test_invalid(self, expr):
        """Test that impossible sizes raise MalformedExpression."""
        with pytest.raises(MalformedExpression):
            eval_expr(expr)

    def test_parse(self):
        """Test parsing a nested expression."""
        assert parse_expr("J(K(1), U(K(4), Kbar(2)))") == Join(K(1), DisjointUnion(K(4), Kbar(2)))
        assert parse_expr("Pend(N(2,P(1)),0,3)") == PendantsAt(CopiesOf(2, P(1)), 0, 3)

    def test_format(self):
        """Test the canonical text form."""
        assert format_expr(Join(K(1), DisjointUnion(Kmn(1, 3), Complement(C(5))))) == "J(K(1),U(Kmn(1,3),Co(C(5))))"

    @pytest.mark.parametrize("text", ["K(", "K(1", "Q(3)", "U(K(1))", "K(1) K(2)", "K(a)", "K(1)#"])
    def test_malformed(self, text):
        """Test that malformed text is rejected."""
        with pytest.raises(MalformedExpression):
            parse_expr(text)


class TestIsomorphism:
    """Test isomorphism decisions and witnesses."""

    def test_relabelled_graph(self):
        """Test that a relabelled C5 is isomorphic with a valid witness."""
        a = cycle(5)
        b = make_graph(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
        ok, mapping = is_isomorphic(a, b)
        assert ok
        image = {tuple(sorted((mapping[u], mapping[v]))) for u, v in a.edges}
        assert image == set(b.edges)

    def test_same_degrees_not_isomorphic(self):
        """Test C6 against two disjoint triangles."""
        ok, mapping = is_isomorphic(cycle(6), eval_expr(CopiesOf(2, K(3))))
        assert not ok
        assert mapping is None

    def test_against_brute_force(self):
        """Test VF2++ against trying every permutation on small graphs."""
        graphs = [
            eval_expr(Kmn(1, 3)),
            eval_expr(PendantsAt(K(3), 0, 1)),
            path(3),
            eval_expr(DisjointUnion(K(3), K(1))),
            eval_expr(Join(K(1), DisjointUnion(K(2), K(1)))),
        ]
        for a in graphs:
            for b in graphs:
                brute = a.n == b.n and any(
                    {tuple(sorted((perm[u], perm[v]))) for u, v in a.edges} == set(b.edges)
                    for perm in permutations(range(b.n))
                )
                assert is_isomorphic(a, b)[0] == brute


class TestSubgraphs:
    """Test clique, biclique and general subgraph search."""

    def test_find_clique(self):
        """Test cliques inside K5 plus a pendant."""
        g = eval_expr(PendantsAt(K(5), 0, 1))
        assert find_clique(g, 5) == [0, 1, 2, 3, 4]
        assert find_clique(g, 6) is None

    def test_find_biclique(self):
        """Test K3,3 inside K3,4 and sides in the requested order."""
        g = eval_expr(Kmn(3, 4))
        left, right = find_biclique(g, 3, 3)
        assert len(left) == 3 and len(right) == 3
        assert all((min(u, v), max(u, v)) in g.edges for u in left for v in right)
        assert find_biclique(g, 4, 4) is None

    def test_has_subgraph_witness(self):
        """Test that the monomorphism witness maps edges to edges."""
        host = complete(5)
        ok, mapping = has_subgraph(host, cycle(5))
        assert ok
        assert all((min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) in host.edges for u, v in cycle(5).edges)

    def test_x_free(self):
        """Test X-freeness on small hosts."""
        assert x_free(cycle(5), K(3))
        assert not x_free(cycle(5), P(4))
        assert x_free(eval_expr(Kmn(1, 3)), P(3))
        assert not x_free(complete(5), X_FREE_PATTERNS["K5"])

    def test_x_free_record_keys(self):
        """Test that the record covers every named pattern."""
        record = x_free_record(complete(4))
        assert set(record) == set(X_FREE_PATTERNS)
        assert record["K5"] and not record["K4"] and not record["C4"]

    def test_induced_subgraph(self):
        """Test induced subgraphs renumber vertices."""
        g = induced_subgraph(cycle(5), [0, 1, 2])
        assert g.edges == ((0, 1), (1, 2))


class TestStructure:
    """Test girth and structural predicates."""

    def test_girth(self):
        """Test girth of a few graphs."""
        assert girth(complete(4)) == 3
        assert girth(cycle(6)) == 6
        assert girth(path(3)) == math.inf

    def test_path_flags(self):
        """Test that a path is a tree and a path but not a cycle."""
        flags = structural_predicates(path(2))
        assert flags.tree and flags.path and flags.star and flags.acyclic and flags.bipartite
        assert not flags.cycle and not flags.unicyclic

    def test_triangle_flags(self):
        """Test that K3 is a unicyclic cycle."""
        flags = structural_predicates(complete(3))
        assert flags.cycle and flags.unicyclic
        assert not flags.bipartite and not flags.acyclic

    def test_single_vertex(self):
        """Test the one-vertex graph."""
        flags = structural_predicates(complete(1))
        assert flags.tree and flags.star and flags.totally_disconnected and flags.complete_bipartite
        assert not flags.path

    def test_isolated_extra_breaks_tree(self):
        """Test that an isolated vertex stops a star from being a tree."""
        flags = structural_predicates(eval_expr(DisjointUnion(Kmn(1, 3), Kbar(1))))
        assert flags.acyclic and flags.bipartite
        assert not flags.tree and not flags.star and not flags.complete_bipartite

    def test_complete_bipartite(self):
        """Test K2,3."""
        assert structural_predicates(eval_expr(Kmn(2, 3))).complete_bipartite


class TestFormats:
    """Test adjacency and DOT text."""

    def test_adjacency_k3(self):
        """Test the adjacency text of K3."""
        assert format_adjacency(complete(3)) == "3 3\n0 1\n0 2\n1 2\n"

    def test_adjacency_empty(self):
        """Test the adjacency text of Kbar(2)."""
        assert export_graph(eval_expr(Kbar(2)), "adjacency") == b"2 0\n"

    def test_read_adjacency(self):
        """Test reading with comments and blank lines."""
        g = read_adjacency("# K3\n3 3\n0 1\n\n0 2\n1 2\n")
        assert g == complete(3)

    @pytest.mark.parametrize("text", ["", "3\n", "2 1\n0 1\n1 0\n0 1\n", "2 1\n0 x\n", "2 2\n0 1\n1 0\n"])
    def test_read_adjacency_errors(self, text):
        """Test malformed adjacency text."""
        with pytest.raises(MalformedExpression):
            read_adjacency(text)

    def test_dot(self):
        """Test DOT output with labels and a quoted graph name."""
        g = make_graph(2, [(0, 1)], labels=["a", "b"])
        text = format_dot(g, name="cyclic:4")
        assert text.startswith('graph "cyclic:4" {')
        assert '  0 [label="a"];' in text
        assert "  0 -- 1;" in text

    def test_unsupported_format(self):
        """Test an unknown export format."""
        with pytest.raises(UnsupportedFormat):
            export_graph(complete(2), "svg")


class TestNetworkxBridge:
    """Test conversion to and from networkx."""

    def test_isolated_vertices_kept(self):
        """Test that isolated vertices survive conversion."""
        h = to_networkx(eval_expr(Kbar(3)))
        assert h.number_of_nodes() == 3

    def test_from_networkx_labels(self):
        """Test that non-integer nodes become labels."""
        h = nx.Graph([("a", "b"), ("b", "c")])
        g = from_networkx(h)
        assert g.labels == ("a", "b", "c")
        assert g.edges == ((0, 1), (1, 2))
