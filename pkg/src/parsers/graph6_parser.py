"""graph6 codec backed by networkx."""
from pathlib import Path
from typing import List, Union

import networkx as nx
from loguru import logger

from src.graph.graph import Graph
from src.interfaces.parser_interface import GraphFileParser, GraphWriter
from src.utils.errors import MalformedGraph6

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_EXTENSIONS = ('.g6', '.graph6')


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string.

    Args:
        text: graph6 string, optionally with the ``>>graph6<<`` header

    Returns:
        Decoded graph

    Raises:
        MalformedGraph6: If the string is not valid graph6
    """
    token = text.strip()
    if token.startswith(GRAPH6_HEADER):
        token = token[len(GRAPH6_HEADER):]
    if not token:
        raise MalformedGraph6("Empty graph6 string")
    bad = [c for c in token if not 63 <= ord(c) <= 126]
    if bad:
        raise MalformedGraph6(f"Invalid graph6 string {token!r}: character {bad[0]!r} outside '?'..'~'")
    try:
        nx_graph = nx.from_graph6_bytes(token.encode('ascii'))
    except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as e:
        raise MalformedGraph6(f"Invalid graph6 string {token!r}: {e}") from e
    if nx_graph.number_of_nodes() == 0:
        raise MalformedGraph6("graph6 string encodes the empty graph")
    return Graph.from_networkx(nx_graph)


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string without header or newline."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()


class Graph6Parser(GraphFileParser, GraphWriter):
    """Reads and writes files with one graph6 string per line."""

    def __init__(self):
        logger.debug("Initializing Graph6Parser")

    def can_handle(self, file_path: Union[str, Path]) -> bool:
        return str(file_path).lower().endswith(GRAPH6_EXTENSIONS)

    def parse_text(self, text: str) -> List[Graph]:
        graphs = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            try:
                graphs.append(parse_graph6(line))
            except MalformedGraph6 as e:
                raise MalformedGraph6(f"line {lineno}: {e}") from e
        logger.debug(f"Parsed {len(graphs)} graph6 graphs")
        return graphs

    def format_graph(self, graph: Graph) -> str:
        return write_graph6(graph)
