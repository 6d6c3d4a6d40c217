"""Exhaustive and seeded corpora of small graphs."""
from src.enumeration.graph_class import (
    GraphClass,
    GraphClassKind,
    class_members,
    derived_maxdeg_classes,
    iter_members,
    parse_class_label,
)
from src.enumeration.trees import enumerate_free_trees, enumerate_trees_with_max_degree
from src.enumeration.bipartite import enumerate_bipartite
from src.enumeration.connected import enumerate_connected

__all__ = [
    'GraphClass', 'GraphClassKind', 'class_members', 'derived_maxdeg_classes',
    'enumerate_bipartite', 'enumerate_connected', 'enumerate_free_trees',
    'enumerate_trees_with_max_degree', 'iter_members', 'parse_class_label',
]
