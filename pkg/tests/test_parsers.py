import pytest
from src.enumeration.bipartite import enumerate_bipartite
from src.enumeration.connected import enumerate_connected
from src.enumeration.trees import enumerate_free_trees
from src.graph.graph import Graph
from src.parsers.edgelist_parser import EdgeListParser, parse_edge_list, write_edge_list
from src.parsers.graph6_parser import Graph6Parser, parse_graph6, write_graph6
from src.utils.errors import MalformedEdgeList, MalformedGraph6, OutOfRangeVertex, SelfLoop


class TestGraph6:

    def test_known_encodings(self, path4, star5):
        assert write_graph6(path4) == "Ch"
        assert write_graph6(star5) == "Ds_"
        assert write_graph6(Graph.from_edge_list(1, [])) == "@"

    def test_decode(self, path4):
        assert parse_graph6("Ch") == path4
        assert parse_graph6(">>graph6<<Ch\n") == path4

    def test_isolated_vertices_survive(self):
        g = Graph.from_edge_list(6, [(0, 5)])
        assert parse_graph6(write_graph6(g)) == g

    @pytest.mark.parametrize("text", ["", "   ", "C", "C~~", "Cé"])
    def test_malformed(self, text):
        with pytest.raises(MalformedGraph6):
            parse_graph6(text)

    @pytest.mark.parametrize("text", ["A!", "C h", "Ch\x7f", "B0", "@!"])
    def test_characters_outside_graph6_range(self, text):
        with pytest.raises(MalformedGraph6, match="outside"):
            parse_graph6(text)

    def test_file_one_graph_per_line(self, tmp_path, path4, star5):
        path = tmp_path / "graphs.g6"
        path.write_text("# corpus\nCh\n\nDs_\n")
        parser = Graph6Parser()
        assert parser.can_handle(path)
        assert parser.parse(path) == [path4, star5]

    def test_file_error_reports_line(self):
        with pytest.raises(MalformedGraph6, match="line 2"):
            Graph6Parser().parse_text("Ch\nC\n")

    def test_format_graphs(self, path4, star5):
        assert Graph6Parser().format_graphs([path4, star5]) == "Ch\nDs_\n"


class TestEdgeList:

    def test_single_block(self, path4):
        assert parse_edge_list("4 3\n0 1\n1 2\n2 3\n") == [path4]

    def test_comments_and_several_blocks(self, path4):
        text = "# two graphs\n4 3\n0 1  # first\n1 2\n2 3\n\n2 0\n"
        graphs = parse_edge_list(text)
        assert graphs == [path4, Graph.from_edge_list(2, [])]

    def test_write_matches_parse(self, star5):
        text = write_edge_list(star5)
        assert text.splitlines()[0] == "5 4"
        assert parse_edge_list(text) == [star5]

    def test_truncated_block(self):
        with pytest.raises(MalformedEdgeList, match="expected 3 edges"):
            parse_edge_list("4 3\n0 1\n")

    def test_bad_line(self):
        with pytest.raises(MalformedEdgeList):
            parse_edge_list("3 1\n0 x\n")
        with pytest.raises(MalformedEdgeList):
            parse_edge_list("3 1\n0 1 2\n")

    def test_invalid_header(self):
        with pytest.raises(MalformedEdgeList):
            parse_edge_list("0 0\n")

    def test_vertex_errors_propagate(self):
        with pytest.raises(OutOfRangeVertex):
            parse_edge_list("3 1\n0 3\n")
        with pytest.raises(SelfLoop):
            parse_edge_list("3 1\n2 2\n")

    def test_parser_class(self, tmp_path, path4):
        path = tmp_path / "p4.edges"
        path.write_text(EdgeListParser().format_graphs([path4]))
        parser = EdgeListParser()
        assert parser.can_handle(path)
        assert not parser.can_handle("p4.g6")
        assert parser.parse(path) == [path4]


class TestGraph6Corpus:

    @pytest.mark.parametrize("n", range(1, 9))
    def test_trees_round_trip(self, n):
        for tree in enumerate_free_trees(n):
            assert parse_graph6(write_graph6(tree)) == tree

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [9, 10])
    def test_larger_trees_round_trip(self, n):
        for tree in enumerate_free_trees(n):
            assert parse_graph6(write_graph6(tree)) == tree

    @pytest.mark.parametrize("n", range(1, 7))
    def test_connected_round_trip(self, n):
        for g in enumerate_connected(n):
            assert parse_graph6(write_graph6(g)) == g

    @pytest.mark.slow
    @pytest.mark.parametrize("n1, n2", [
        (n1, n2) for n1 in range(1, 13) for n2 in range(1, 13) if n1 * n2 <= 12
    ])
    def test_bipartite_round_trip(self, n1, n2):
        for g in enumerate_bipartite(n1, n2):
            assert parse_graph6(write_graph6(g)) == g
