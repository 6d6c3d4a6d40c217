"""Free trees of a given order, one per isomorphism class."""
from typing import Iterator

import networkx as nx
from loguru import logger

from src.graph.graph import Graph
from src.utils.errors import TooLarge, TooSmall


def enumerate_free_trees(n: int, max_order: int = 14) -> Iterator[Graph]:
    """Yield one tree per isomorphism class of order ``n``.

    The order follows ``networkx.nonisomorphic_trees``, which is fixed for a
    given ``n``.

    Raises:
        TooSmall: If ``n < 1``
        TooLarge: If ``n > max_order``
    """
    if n < 1:
        raise TooSmall(f"Trees need n >= 1, got {n}")
    if n > max_order:
        raise TooLarge(f"Tree enumeration limited to n <= {max_order}, got {n}")
    logger.debug(f"Enumerating free trees of order {n}")
    if n == 1:
        yield Graph(1, frozenset())
        return
    emitted = 0
    for tree in nx.nonisomorphic_trees(n):
        emitted += 1
        yield Graph.from_networkx(tree)
    logger.debug(f"Emitted {emitted} free trees of order {n}")


def enumerate_trees_with_max_degree(n: int, max_degree: int, max_order: int = 14) -> Iterator[Graph]:
    """Trees of order ``n`` whose maximum degree is exactly ``max_degree``.

    An empty class yields nothing.
    """
    for tree in enumerate_free_trees(n, max_order):
        if n > 1 and tree.max_degree() == max_degree:
            yield tree
