"""Deterministic constructors for named graph families."""
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from src.graph.graph import Bipartition, Graph
from src.invariants.indices import validate_spine
from src.utils.errors import InvalidParams, TooSmall

# Values printed alongside the staircase construction, keyed by (n, m).
REFERENCE_VALUES: Dict[Tuple[int, int], Dict[str, int]] = {
    (15, 15): {"irr": 326, "sigma": 2394},
    (15, 17): {"irr": 556, "sigma": 3640},
}


def generate_path(n: int) -> Graph:
    if n < 2:
        raise TooSmall(f"Path needs n >= 2, got {n}")
    return Graph.from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


def generate_star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    if n < 2:
        raise TooSmall(f"Star needs n >= 2, got {n}")
    return Graph.from_edge_list(n, ((0, i) for i in range(1, n)))


def generate_cycle(n: int) -> Graph:
    if n < 3:
        raise TooSmall(f"Cycle needs n >= 3, got {n}")
    return Graph.from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def generate_complete_bipartite(s: int, t: int) -> Graph:
    """``K_{s,t}`` with parts ``0..s-1`` and ``s..s+t-1``."""
    if s < 1 or t < 1:
        raise TooSmall(f"Complete bipartite parts must be >= 1, got ({s}, {t})")
    return Graph.from_edge_list(s + t, ((i, s + j) for i in range(s) for j in range(t)))


def generate_caterpillar(spine: Sequence[int]) -> Graph:
    """Caterpillar whose spine vertices ``0..k-1`` have the given degrees.

    Spine ends receive ``d - 1`` pendant leaves and interior vertices
    ``d - 2``; leaves are numbered after the spine, in spine order.
    """
    spine = list(spine)
    validate_spine(spine)
    k = len(spine)
    edges: List[Tuple[int, int]] = [(i, i + 1) for i in range(k - 1)]
    next_vertex = k
    for i, d in enumerate(spine):
        leaves = d - 1 if i in (0, k - 1) else d - 2
        for _ in range(leaves):
            edges.append((i, next_vertex))
            next_vertex += 1
    return Graph.from_edge_list(next_vertex, edges)


@dataclass(frozen=True)
class StaircaseParams:
    """Part sizes of the staircase bipartite construction.

    ``n`` counts the U-side and ``m`` the V-side; both must be at least 11.
    """
    n: int
    m: int

    def __post_init__(self):
        if self.n < 11 or self.m < 11:
            raise InvalidParams(f"Staircase construction needs n >= 11 and m >= 11, got ({self.n}, {self.m})")

    def u(self, i: int) -> int:
        """Vertex index of ``u_i`` (1-based)."""
        return i - 1

    def v(self, j: int) -> int:
        """Vertex index of ``v_j`` (1-based)."""
        return self.n + j - 1


# (row i, first column, offset of the last column from m)
_FIXED_ROWS = (
    (1, 2, 1), (2, 3, 1), (3, 3, 1), (4, 4, 2), (5, 3, 3),
    (6, 4, 2), (7, 5, 4), (8, 6, 4), (9, 7, 4),
)


def staircase_rows(params: StaircaseParams) -> List[Tuple[int, List[int]]]:
    """The ``(i, [j, ...])`` adjacency rows of the construction, 1-based."""
    m = params.m
    rows = [(i, list(range(first, m - offset + 1))) for i, first, offset in _FIXED_ROWS]
    for i in range(10, params.n):
        rows.append((i, list(range(i - 2, m - 4 + 1))))
    rows.append((params.n, [1, 2, m]))
    return rows


def generate_staircase_bipartite(params: StaircaseParams) -> Graph:
    """Build the staircase bipartite graph on ``n + m`` vertices.

    ``u_i`` maps to vertex ``i - 1`` and ``v_j`` to ``n + j - 1``. Rows with
    an empty column range contribute no edges, so their vertices stay
    isolated.
    """
    edges = [
        (params.u(i), params.v(j))
        for i, columns in staircase_rows(params)
        for j in columns
    ]
    g = Graph.from_edge_list(params.n + params.m, edges)
    logger.debug(f"Staircase graph ({params.n}, {params.m}): {g.m} edges")
    return g


def staircase_parts(params: StaircaseParams) -> Bipartition:
    """Declared parts ``(U, V)`` of the staircase graph."""
    return Bipartition(
        frozenset(range(params.n)),
        frozenset(range(params.n, params.n + params.m)),
    )
