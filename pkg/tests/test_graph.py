import pytest
from src.graph.graph import (
    Bipartition,
    Graph,
    complete_bipartite_parts,
    degree_sequence,
    find_bipartition,
    is_bipartite,
    is_hamiltonian,
    is_path,
    is_star,
    iter_non_edges,
    longest_path,
)
from src.utils.errors import GraphError, OutOfRangeVertex, SelfLoop, TooLarge, TooSmall


def cycle(n):
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestConstruction:

    def test_duplicates_and_orientation_collapse(self):
        g = Graph.from_edge_list(3, [(1, 0), (0, 1), (2, 1)])
        assert g.sorted_edges() == [(0, 1), (1, 2)]
        assert g.m == 2
        assert g.degrees == (1, 2, 1)

    def test_out_of_range_vertex(self):
        with pytest.raises(OutOfRangeVertex):
            Graph.from_edge_list(3, [(0, 3)])

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            Graph.from_edge_list(3, [(1, 1)])

    def test_graph_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            Graph.from_edge_list(2, [(0, 5)])
        assert issubclass(SelfLoop, GraphError)

    def test_empty_vertex_set_rejected(self):
        with pytest.raises(TooSmall):
            Graph.from_edge_list(0, [])

    def test_single_vertex(self):
        g = Graph.from_edge_list(1, [])
        assert g.m == 0
        assert g.is_connected()
        assert g.is_tree()

    def test_equality_is_labelled(self, path4):
        assert path4 == Graph.from_edge_list(4, [(2, 3), (0, 1), (1, 2)])
        assert path4 != Graph.from_edge_list(4, [(0, 1), (0, 2), (2, 3)])
        assert hash(path4) == hash(Graph.from_edge_list(4, [(2, 3), (1, 2), (0, 1)]))

    def test_networkx_round_trip_keeps_isolated_vertices(self):
        g = Graph.from_edge_list(5, [(0, 3)])
        assert Graph.from_networkx(g.to_networkx()) == g
        assert g.to_networkx().number_of_nodes() == 5


class TestPredicates:

    def test_degree_sequence(self, star5):
        seq = degree_sequence(star5)
        assert seq.values == (4, 1, 1, 1, 1)
        assert seq.total == 2 * star5.m
        assert (seq.max_degree, seq.min_degree) == (4, 1)

    def test_connectivity_and_trees(self, path4):
        assert path4.is_tree()
        assert not Graph.from_edge_list(4, [(0, 1), (2, 3)]).is_connected()
        assert not cycle(4).is_tree()

    def test_complete(self):
        assert complete(4).is_complete()
        assert not cycle(4).is_complete()

    def test_star_and_path(self, star5, path4):
        assert is_star(star5)
        assert not is_star(path4)
        assert is_path(path4)
        assert not is_path(star5)
        assert is_star(Graph.from_edge_list(2, [(0, 1)]))

    def test_bipartition_puts_lowest_vertex_first(self, path4):
        parts = find_bipartition(path4)
        assert parts == Bipartition(frozenset({0, 2}), frozenset({1, 3}))
        assert (parts.n1, parts.n2) == (2, 2)

    def test_odd_cycle_not_bipartite(self):
        assert find_bipartition(cycle(5)) is None
        assert not is_bipartite(cycle(3))
        assert is_bipartite(cycle(6))

    def test_bipartition_of_disconnected_graph(self):
        g = Graph.from_edge_list(5, [(0, 1), (3, 4)])
        parts = find_bipartition(g)
        assert {0, 2, 3} <= parts.part1
        assert parts.part2 == frozenset({1, 4})

    def test_complete_bipartite_parts(self):
        k24 = Graph.from_edge_list(6, [(i, j) for i in range(2) for j in range(2, 6)])
        assert complete_bipartite_parts(k24) == (2, 4)
        assert complete_bipartite_parts(cycle(4)) == (2, 2)
        assert complete_bipartite_parts(cycle(6)) is None
        assert complete_bipartite_parts(Graph.from_edge_list(1, [])) is None

    def test_hamiltonian(self, path4):
        assert is_hamiltonian(cycle(5))
        assert is_hamiltonian(complete(4))
        assert not is_hamiltonian(path4)
        k23 = Graph.from_edge_list(5, [(i, j) for i in range(2) for j in range(2, 5)])
        assert not is_hamiltonian(k23)

    def test_hamiltonian_budget(self):
        with pytest.raises(TooLarge):
            is_hamiltonian(cycle(13), max_order=12)

    def test_longest_path_is_a_diameter(self):
        spider = Graph.from_edge_list(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        path = longest_path(spider)
        assert len(path) == 5
        assert all(spider.has_edge(a, b) for a, b in zip(path, path[1:]))

    def test_non_edges(self, path4):
        assert list(iter_non_edges(path4)) == [(0, 2), (0, 3), (1, 3)]
        assert list(iter_non_edges(complete(4))) == []


class TestEditing:

    def test_relabel(self, path4):
        g = path4.relabel([3, 2, 1, 0])
        assert g == path4
        with pytest.raises(ValueError):
            path4.relabel([0, 0, 1, 2])

    def test_delete_edge(self, path4):
        g = path4.delete_edge((2, 1))
        assert g.sorted_edges() == [(0, 1), (2, 3)]
        assert g.n == 4

    def test_delete_vertex_shifts_labels(self, path4):
        g = path4.delete_vertex(1)
        assert g.n == 3
        assert g.sorted_edges() == [(1, 2)]

    def test_delete_only_vertex(self):
        with pytest.raises(TooSmall):
            Graph.from_edge_list(1, []).delete_vertex(0)
