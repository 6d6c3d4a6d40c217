"""Test parser interface module."""
import pytest
from src.graph.graph import Graph
from src.interfaces.parser_interface import GraphFileParser, GraphWriter


class TestGraphFileParser:
    """Test GraphFileParser abstract base class implementations."""

    class PairParser(GraphFileParser):
        """Reads one edge per line on a fixed vertex count of 3."""

        def can_handle(self, file_path):
            return str(file_path).endswith('.pairs')

        def parse_text(self, text):
            pairs = [tuple(int(x) for x in line.split()) for line in text.splitlines() if line.strip()]
            return [Graph.from_edge_list(3, pairs)]

    def test_can_handle(self):
        parser = self.PairParser()
        assert parser.can_handle("a.pairs") is True
        assert parser.can_handle("a.g6") is False

    def test_parse_reads_file(self, tmp_path):
        path = tmp_path / "g.pairs"
        path.write_text("0 1\n1 2\n")
        graphs = self.PairParser().parse(path)
        assert len(graphs) == 1
        assert graphs[0].sorted_edges() == [(0, 1), (1, 2)]

    def test_parse_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            self.PairParser().parse(tmp_path / "missing.pairs")


class TestGraphWriter:

    class CountWriter(GraphWriter):
        def format_graph(self, graph):
            return f"{graph.n} {graph.m}"

    def test_format_graphs_one_line_each(self):
        graphs = [Graph.from_edge_list(2, [(0, 1)]), Graph.from_edge_list(3, [])]
        assert self.CountWriter().format_graphs(graphs) == "2 1\n3 0\n"
        assert self.CountWriter().format_graphs([]) == ""


def test_interfaces_are_abstract():
    with pytest.raises(TypeError):
        GraphFileParser()
    with pytest.raises(TypeError):
        GraphWriter()
