"""Connected graphs of small order from the networkx graph atlas."""
from functools import lru_cache
from typing import Iterator, Tuple

import networkx as nx
from loguru import logger

from src.graph.graph import Graph
from src.utils.errors import TooLarge, TooSmall

ATLAS_MAX_ORDER = 7


@lru_cache(maxsize=1)
def _atlas() -> Tuple[nx.Graph, ...]:
    logger.debug("Loading graph atlas")
    return tuple(nx.graph_atlas_g())


def enumerate_connected(n: int, max_order: int = ATLAS_MAX_ORDER) -> Iterator[Graph]:
    """Yield every connected graph of order ``n`` up to isomorphism.

    The atlas lists graphs by order, then edge count, then degree sequence,
    which fixes the output order.

    Raises:
        TooLarge: If ``n`` exceeds ``max_order`` or the atlas range
    """
    if n < 1:
        raise TooSmall(f"Connected graphs need n >= 1, got {n}")
    if n > min(max_order, ATLAS_MAX_ORDER):
        raise TooLarge(f"Connected enumeration limited to n <= {min(max_order, ATLAS_MAX_ORDER)}, got {n}")
    for nx_graph in _atlas():
        if nx_graph.number_of_nodes() == n and nx.is_connected(nx_graph):
            yield Graph.from_networkx(nx_graph)
