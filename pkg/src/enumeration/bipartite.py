"""Bipartite graphs with declared part sizes, one per part-preserving class.

Graphs are non-decreasing tuples of row masks over the smaller part. Rows
are added depth first, and a prefix is cut as soon as some column
permutation maps it to a lexicographically smaller sorted tuple: adding
rows can only lower that image further, so no extension of the prefix is
a least image. Transposition is checked on complete tuples when both parts
have the same size.
"""
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Tuple

from loguru import logger

from src.graph.graph import Graph
from src.utils.errors import TooLarge, TooSmall

Rows = Tuple[int, ...]


@lru_cache(maxsize=None)
def _mask_permutations(width: int) -> Tuple[Tuple[int, ...], ...]:
    """For every column permutation, the image of each mask of ``width`` bits."""
    tables = []
    for perm in permutations(range(width)):
        table = []
        for mask in range(1 << width):
            image = 0
            for bit in range(width):
                if mask >> bit & 1:
                    image |= 1 << perm[bit]
            table.append(image)
        tables.append(tuple(table))
    return tuple(tables)


def _least_image(rows: Rows, width: int) -> Rows:
    return min(tuple(sorted(table[r] for r in rows)) for table in _mask_permutations(width))


def _transpose(rows: Rows, width: int) -> Rows:
    return tuple(sorted(
        sum(1 << i for i, r in enumerate(rows) if r >> j & 1)
        for j in range(width)
    ))


def _canonical_rows(height: int, width: int, square: bool) -> Iterator[Rows]:
    """Least images under column permutations, in lexicographic order."""
    stack = [()]
    while stack:
        prefix = stack.pop()
        if len(prefix) == height:
            if not square or prefix <= _least_image(_transpose(prefix, width), width):
                yield prefix
            continue
        start = prefix[-1] if prefix else 0
        children = []
        for mask in range(start, 1 << width):
            candidate = prefix + (mask,)
            if _least_image(candidate, width) == candidate:
                children.append(candidate)
        stack.extend(reversed(children))


def _to_graph(rows: Rows, n1: int, n2: int, rows_are_part1: bool) -> Graph:
    width = n2 if rows_are_part1 else n1
    edges = []
    for i, mask in enumerate(rows):
        for j in range(width):
            if mask >> j & 1:
                edges.append((i, n1 + j) if rows_are_part1 else (j, n1 + i))
    return Graph.from_edge_list(n1 + n2, edges)


def enumerate_bipartite(n1: int, n2: int, connected_only: bool = False,
                        max_cells: int = 25) -> Iterator[Graph]:
    """Yield bipartite graphs with parts ``0..n1-1`` and ``n1..n1+n2-1``.

    Two graphs are the same class when a part-preserving relabelling maps one
    onto the other; when ``n1 == n2`` swapping the parts is allowed as well.
    A graph whose bipartition is ambiguous can appear more than once, once per
    distinct placement of its vertices into the declared parts.

    Raises:
        TooSmall: If a part is empty
        TooLarge: If ``n1 * n2`` exceeds ``max_cells``
    """
    if n1 < 1 or n2 < 1:
        raise TooSmall(f"Bipartite parts must be >= 1, got ({n1}, {n2})")
    if n1 * n2 > max_cells:
        raise TooLarge(f"Bipartite enumeration limited to n1*n2 <= {max_cells}, got {n1 * n2}")
    rows_are_part1 = n2 <= n1
    height, width = (n1, n2) if rows_are_part1 else (n2, n1)
    logger.debug(f"Enumerating bipartite graphs ({n1}, {n2}), connected_only={connected_only}")
    emitted = 0
    for rows in _canonical_rows(height, width, n1 == n2):
        g = _to_graph(rows, n1, n2, rows_are_part1)
        if connected_only and not g.is_connected():
            continue
        emitted += 1
        yield g
    logger.debug(f"Emitted {emitted} bipartite graphs for ({n1}, {n2})")
