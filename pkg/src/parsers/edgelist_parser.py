"""Plain-text edge lists.

A block is a header line ``n m`` followed by ``m`` lines ``u v``. A file may
hold several blocks; blank lines and ``#`` comments are ignored.
"""
from pathlib import Path
from typing import List, Tuple, Union

from loguru import logger

from src.graph.graph import Graph
from src.interfaces.parser_interface import GraphFileParser, GraphWriter
from src.utils.errors import MalformedEdgeList

EDGELIST_EXTENSIONS = ('.txt', '.edges', '.el', '.edgelist')


def _int_pair(line: str, lineno: int) -> Tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise MalformedEdgeList(f"line {lineno}: expected two integers, got {line!r}")
    try:
        return int(fields[0]), int(fields[1])
    except ValueError as e:
        raise MalformedEdgeList(f"line {lineno}: expected two integers, got {line!r}") from e


def parse_edge_list(text: str) -> List[Graph]:
    """Decode every edge-list block in ``text``.

    Raises:
        MalformedEdgeList: On syntax errors or truncated blocks
        OutOfRangeVertex: If an edge endpoint is outside ``0..n-1``
        SelfLoop: If an edge joins a vertex to itself
    """
    lines = [
        (lineno, line.split('#', 1)[0].strip())
        for lineno, line in enumerate(text.splitlines(), start=1)
    ]
    lines = [(lineno, line) for lineno, line in lines if line]
    graphs = []
    i = 0
    while i < len(lines):
        lineno, header = lines[i]
        n, m = _int_pair(header, lineno)
        if n < 1 or m < 0:
            raise MalformedEdgeList(f"line {lineno}: invalid header n={n} m={m}")
        body = lines[i + 1:i + 1 + m]
        if len(body) < m:
            raise MalformedEdgeList(f"line {lineno}: expected {m} edges, found {len(body)}")
        pairs = [_int_pair(line, ln) for ln, line in body]
        graphs.append(Graph.from_edge_list(n, pairs))
        i += 1 + m
    return graphs


def write_edge_list(g: Graph) -> str:
    """Encode ``g`` as an edge-list block without the trailing newline."""
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(rows)


class EdgeListParser(GraphFileParser, GraphWriter):
    """Reads and writes edge-list files."""

    def __init__(self):
        logger.debug("Initializing EdgeListParser")

    def can_handle(self, file_path: Union[str, Path]) -> bool:
        return str(file_path).lower().endswith(EDGELIST_EXTENSIONS)

    def parse_text(self, text: str) -> List[Graph]:
        graphs = parse_edge_list(text)
        logger.debug(f"Parsed {len(graphs)} edge-list graphs")
        return graphs

    def format_graph(self, graph: Graph) -> str:
        return write_edge_list(graph)
