"""Finite simple undirected graphs on the vertex set ``0..n-1``."""
from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from src.utils.errors import OutOfRangeVertex, SelfLoop, TooLarge, TooSmall

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    Edges are stored as ``(u, v)`` with ``u < v``. Two graphs compare equal
    when they have the same order and the same labelled edge set.
    """
    n: int
    edges: FrozenSet[Edge]
    adjacency: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)
    degrees: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise TooSmall(f"A graph needs at least one vertex, got n={self.n}")
        neighbours: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise OutOfRangeVertex(f"Edge ({u}, {v}) outside 0..{self.n - 1}")
            if u == v:
                raise SelfLoop(f"Self-loop at vertex {u}")
            if u > v:
                raise ValueError(f"Edge ({u}, {v}) is not normalized")
            neighbours[u].add(v)
            neighbours[v].add(u)
        object.__setattr__(self, 'adjacency', tuple(frozenset(s) for s in neighbours))
        object.__setattr__(self, 'degrees', tuple(len(s) for s in neighbours))

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph from unordered pairs; duplicates collapse.

        Args:
            n: Number of vertices
            pairs: Iterable of two-element vertex pairs

        Returns:
            Graph instance

        Raises:
            OutOfRangeVertex: If an endpoint is outside ``0..n-1``
            SelfLoop: If a pair joins a vertex to itself
        """
        normalized = set()
        for pair in pairs:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeVertex(f"Edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"Self-loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        return cls(n, frozenset(normalized))

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Convert a networkx graph, relabelling nodes by sorted order."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edge_list(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph with nodes added in order ``0..n-1``."""
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.sorted_edges())
        return nx_graph

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def max_degree(self) -> int:
        return max(self.degrees)

    def min_degree(self) -> int:
        return min(self.degrees)

    def is_connected(self) -> bool:
        return len(_component(self, 0)) == self.n

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``permutation[v]``."""
        if sorted(permutation) != list(range(self.n)):
            raise ValueError("Relabelling must be a permutation of 0..n-1")
        return Graph.from_edge_list(self.n, ((permutation[u], permutation[v]) for u, v in self.edges))

    def delete_edge(self, edge: Edge) -> "Graph":
        u, v = min(edge), max(edge)
        return Graph(self.n, self.edges - {(u, v)})

    def delete_vertex(self, v: int) -> "Graph":
        """Remove ``v`` and shift the labels above it down by one."""
        if self.n == 1:
            raise TooSmall("Cannot delete the only vertex")

        def shift(x: int) -> int:
            return x - 1 if x > v else x

        return Graph.from_edge_list(
            self.n - 1,
            ((shift(a), shift(b)) for a, b in self.edges if v not in (a, b)),
        )


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees sorted in non-increasing order."""
    values: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def max_degree(self) -> int:
        return self.values[0]

    @property
    def min_degree(self) -> int:
        return self.values[-1]


@dataclass(frozen=True)
class Bipartition:
    """Two disjoint vertex sets covering the graph with no internal edges."""
    part1: FrozenSet[int]
    part2: FrozenSet[int]

    @property
    def n1(self) -> int:
        return len(self.part1)

    @property
    def n2(self) -> int:
        return len(self.part2)


def degree_sequence(g: Graph) -> DegreeSequence:
    """Degrees of ``g`` in non-increasing order."""
    return DegreeSequence(tuple(sorted(g.degrees, reverse=True)))


def _component(g: Graph, start: int) -> List[int]:
    seen = {start}
    queue = deque([start])
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in sorted(g.adjacency[v]):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


def find_bipartition(g: Graph) -> Optional[Bipartition]:
    """Two-colour ``g`` by breadth-first search.

    Components are visited in increasing order of their smallest vertex and
    that vertex is placed in ``part1``, so vertex 0 always lands in
    ``part1``.

    Returns:
        The bipartition, or None when ``g`` has an odd cycle
    """
    colour: List[Optional[int]] = [None] * g.n
    for start in range(g.n):
        if colour[start] is not None:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if colour[w] is None:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    part1 = frozenset(v for v in range(g.n) if colour[v] == 0)
    part2 = frozenset(v for v in range(g.n) if colour[v] == 1)
    return Bipartition(part1, part2)


def is_bipartite(g: Graph) -> bool:
    return find_bipartition(g) is not None


def complete_bipartite_parts(g: Graph) -> Optional[Tuple[int, int]]:
    """Part sizes ``(s, t)`` with ``s <= t`` if ``g`` is ``K_{s,t}``, else None."""
    if g.n < 2 or not g.is_connected():
        return None
    parts = find_bipartition(g)
    if parts is None or g.m != parts.n1 * parts.n2:
        return None
    return min(parts.n1, parts.n2), max(parts.n1, parts.n2)


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.is_tree() and g.max_degree() == g.n - 1


def is_path(g: Graph) -> bool:
    return g.is_tree() and g.max_degree() <= 2


def is_hamiltonian(g: Graph, max_order: int = 12) -> bool:
    """Decide whether ``g`` has a Hamiltonian cycle by backtracking.

    Raises:
        TooLarge: If ``g.n`` exceeds ``max_order``
    """
    n = g.n
    if n > max_order:
        raise TooLarge(f"Hamiltonicity search limited to n <= {max_order}, got {n}")
    if n < 3 or g.min_degree() < 2 or not g.is_connected():
        return False
    logger.trace(f"Searching Hamiltonian cycle on n={n}, m={g.m}")
    masks = [sum(1 << w for w in g.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(masks[v] & 1)
        candidates = masks[v] & ~visited
        while candidates:
            low = candidates & -candidates
            w = low.bit_length() - 1
            if extend(w, visited | low):
                return True
            candidates ^= low
        return False

    return extend(0, 1)


def longest_path(g: Graph) -> List[int]:
    """A diameter path of a tree, found by two breadth-first sweeps."""
    far = _component(g, 0)[-1]
    parent = {far: None}
    queue = deque([far])
    last = far
    while queue:
        v = queue.popleft()
        last = v
        for w in sorted(g.adjacency[v]):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    path = []
    node: Optional[int] = last
    while node is not None:
        path.append(node)
        node = parent[node]
    return path


def iter_non_edges(g: Graph) -> Iterator[Edge]:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v not in g.adjacency[u]:
                yield u, v
