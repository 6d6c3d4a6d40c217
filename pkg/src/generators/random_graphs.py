"""Seeded random corpora.

Each generator owns a ``numpy`` ``Generator`` built from the given seed, so
equal seeds give equal graphs within one installation.
"""
from typing import Optional

import networkx as nx
import numpy as np

from src.graph.graph import Graph
from src.utils.errors import BadProbability, TooSmall


def _check_probability(edge_prob: float) -> None:
    if not 0.0 <= edge_prob <= 1.0:
        raise BadProbability(f"Edge probability must lie in [0, 1], got {edge_prob}")


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    """Uniform random labelled tree decoded from a random Prüfer sequence."""
    if n < 2:
        raise TooSmall(f"Random tree needs n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def random_bipartite(n1: int, n2: int, edge_prob: float, seed: Optional[int] = None) -> Graph:
    """Random bipartite graph with parts ``0..n1-1`` and ``n1..n1+n2-1``."""
    if n1 < 1 or n2 < 1:
        raise TooSmall(f"Bipartite parts must be >= 1, got ({n1}, {n2})")
    _check_probability(edge_prob)
    rng = np.random.default_rng(seed)
    mask = rng.random((n1, n2)) < edge_prob
    rows, cols = np.nonzero(mask)
    return Graph.from_edge_list(n1 + n2, ((int(i), n1 + int(j)) for i, j in zip(rows, cols)))


def random_graph(n: int, edge_prob: float, seed: Optional[int] = None) -> Graph:
    """Erdős–Rényi ``G(n, p)``."""
    if n < 1:
        raise TooSmall(f"Random graph needs n >= 1, got {n}")
    _check_probability(edge_prob)
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < edge_prob, k=1)
    rows, cols = np.nonzero(upper)
    return Graph.from_edge_list(n, ((int(i), int(j)) for i, j in zip(rows, cols)))


def random_spine(length: int, max_degree: int, seed: Optional[int] = None) -> list:
    """Random valid caterpillar spine: ends in ``1..max_degree``, interior in ``2..max_degree``."""
    if length < 2:
        raise TooSmall(f"Spine needs length >= 2, got {length}")
    if max_degree < 2:
        raise TooSmall(f"Spine degrees need max_degree >= 2, got {max_degree}")
    rng = np.random.default_rng(seed)
    ends = rng.integers(1, max_degree + 1, size=2)
    interior = rng.integers(2, max_degree + 1, size=length - 2)
    return [int(ends[0])] + [int(d) for d in interior] + [int(ends[1])]
