import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indomatic import (
    NO_DOMINATING_CLIQUE,
    clique_domination_number,
    complete_digraph,
    connected_domatic_number,
    directed_cycle,
    is_clique,
    is_connected_subset,
    is_dominating_set,
    is_planar,
    make_ugraph,
    underlying_graph,
    vertex_connectivity,
)
from indomatic.undirected import is_connected

from .conftest import complete_graph, cycle_graph, path_graph


@st.composite
def connected_graphs(draw, min_n=2, max_n=6):
    """Random connected graphs: a drawn spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
    spare = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    extra = draw(st.lists(st.sampled_from(spare), unique=True)) if spare else []
    return make_ugraph(n, sorted(edges | set(extra)))


class TestUnderlyingGraph:
    def test_cycle(self, c3):
        assert underlying_graph(c3).edges == frozenset([(0, 1), (1, 2), (0, 2)])

    def test_complete(self, k4):
        assert underlying_graph(k4) == complete_graph(4)

    def test_single_arc(self):
        from indomatic import make_digraph

        D = make_digraph(2, [(0, 1)])
        assert underlying_graph(D).edges == frozenset([(0, 1)])

    def test_antiparallel_merge(self, k2):
        assert len(underlying_graph(k2).edges) == 1


class TestVertexConnectivity:
    def test_cycle(self):
        assert vertex_connectivity(cycle_graph(4)) == 2

    def test_path(self):
        assert vertex_connectivity(path_graph(3)) == 1

    def test_complete_convention(self):
        assert vertex_connectivity(complete_graph(4)) == 3

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            vertex_connectivity(make_ugraph(3, [(0, 1)]))

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs())
    def test_matches_optimized_method(self, G):
        # Exhaustive cut search versus networkx's flow-based computation.
        H = nx.Graph()
        H.add_nodes_from(range(G.vertex_count))
        H.add_edges_from(G.edges)
        assert vertex_connectivity(G) == nx.node_connectivity(H)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_optimized_method_exhaustively(self, n):
        from itertools import combinations

        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            G = make_ugraph(n, edges)
            if not is_connected(G):
                continue
            H = nx.Graph()
            H.add_nodes_from(range(n))
            H.add_edges_from(edges)
            assert vertex_connectivity(G) == nx.node_connectivity(H)


class TestConnectedDomatic:
    def test_complete4(self):
        value, _ = connected_domatic_number(complete_graph(4))
        assert value == 4

    def test_single_vertex(self):
        value, blocks = connected_domatic_number(make_ugraph(1, []))
        assert value == 1 and blocks == (frozenset([0]),)

    def test_cycle4(self):
        # Brute force over all partitions of 4 vertices gives 2.
        value, _ = connected_domatic_number(cycle_graph(4))
        assert value == 2

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            connected_domatic_number(make_ugraph(2, []))

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_witness_and_connectivity_bound(self, G):
        value, blocks = connected_domatic_number(G)
        assert len(blocks) == value
        for block in blocks:
            assert is_dominating_set(G, block)
            assert is_connected_subset(G, block)
        if len(G.edges) < G.vertex_count * (G.vertex_count - 1) // 2:
            assert value <= vertex_connectivity(G)


class TestCliqueDomination:
    def test_complete(self):
        assert clique_domination_number(complete_graph(4)) == 1

    def test_five_cycle_has_none(self):
        # Exhausting every clique of the 5-cycle (vertices and edges only)
        # finds no dominating one.
        assert clique_domination_number(cycle_graph(5)) is NO_DOMINATING_CLIQUE

    def test_star_center(self):
        star = make_ugraph(4, [(0, 1), (0, 2), (0, 3)])
        assert clique_domination_number(star) == 1


class TestPlanarity:
    def test_k4(self):
        assert is_planar(complete_graph(4))

    def test_k5(self):
        assert not is_planar(complete_graph(5))

    def test_k33(self):
        k33 = make_ugraph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        assert not is_planar(k33)


class TestSetPredicates:
    def test_triangle(self):
        tri = complete_graph(3)
        assert is_dominating_set(tri, {0}) and is_clique(tri, {0})

    def test_path_endpoints(self):
        p3 = path_graph(3)
        assert not is_dominating_set(p3, {0})
        assert is_dominating_set(p3, {1})

    def test_connected_subset(self):
        p3 = path_graph(3)
        assert is_connected_subset(p3, {0, 1})
        assert not is_connected_subset(p3, {0, 2})

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_dominating_set(path_graph(2), set())


def test_planar_digraph_examples():
    assert is_planar(underlying_graph(complete_digraph(4)))
    assert not is_planar(underlying_graph(complete_digraph(5)))
    assert is_planar(underlying_graph(directed_cycle(6)))
