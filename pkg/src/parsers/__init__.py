"""Parsers for graph file formats."""

from src.parsers.graph6_parser import Graph6Parser, parse_graph6, write_graph6
from src.parsers.edgelist_parser import EdgeListParser, parse_edge_list, write_edge_list

__all__ = [
    'EdgeListParser', 'Graph6Parser', 'parse_edge_list', 'parse_graph6',
    'write_edge_list', 'write_graph6',
]
