"""Corpus descriptors and their members."""
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from loguru import logger

from src.enumeration.bipartite import enumerate_bipartite
from src.enumeration.connected import enumerate_connected
from src.enumeration.trees import enumerate_free_trees, enumerate_trees_with_max_degree
from src.generators.random_graphs import random_bipartite, random_graph, random_tree
from src.graph.graph import Bipartition, Graph
from src.utils.config_manager import EnumerationBudgets
from src.utils.errors import BudgetExceeded, InvalidParams


class GraphClassKind(str, Enum):
    TREES = "TREES"
    TREES_MAXDEG = "TREES_MAXDEG"
    BIPARTITE = "BIPARTITE"
    CONNECTED = "CONNECTED"
    RANDOM = "RANDOM"


RANDOM_KIND_PATTERNS = {
    "tree": re.compile(r"^tree-(\d+)$"),
    "bipartite": re.compile(r"^bipartite-(\d+)x(\d+)-([0-9.]+)$"),
    "gnp": re.compile(r"^gnp-(\d+)-([0-9.]+)$"),
}


@dataclass(frozen=True)
class GraphClass:
    """A finite corpus of graphs.

    Use the ``trees``, ``trees_maxdeg``, ``bipartite``, ``connected`` and
    ``random`` constructors rather than filling fields by hand.
    """
    kind: GraphClassKind
    n: Optional[int] = None
    max_degree: Optional[int] = None
    n1: Optional[int] = None
    n2: Optional[int] = None
    connected_only: bool = False
    random_kind: Optional[str] = None
    count: Optional[int] = None
    seed: Optional[int] = None

    @classmethod
    def trees(cls, n: int) -> "GraphClass":
        return cls(GraphClassKind.TREES, n=n)

    @classmethod
    def trees_maxdeg(cls, n: int, max_degree: int) -> "GraphClass":
        return cls(GraphClassKind.TREES_MAXDEG, n=n, max_degree=max_degree)

    @classmethod
    def bipartite(cls, n1: int, n2: int, connected_only: bool = False) -> "GraphClass":
        return cls(GraphClassKind.BIPARTITE, n1=n1, n2=n2, connected_only=connected_only)

    @classmethod
    def connected(cls, n: int) -> "GraphClass":
        return cls(GraphClassKind.CONNECTED, n=n)

    @classmethod
    def random(cls, random_kind: str, count: int, seed: int) -> "GraphClass":
        if not any(p.match(random_kind) for p in RANDOM_KIND_PATTERNS.values()):
            raise InvalidParams(f"Unknown random corpus kind: {random_kind!r}")
        if count < 0:
            raise InvalidParams(f"Random corpus count must be >= 0, got {count}")
        return cls(GraphClassKind.RANDOM, random_kind=random_kind, count=count, seed=seed)

    @property
    def label(self) -> str:
        """Stable text form, parsed back by :func:`parse_class_label`."""
        if self.kind is GraphClassKind.TREES:
            return f"TREES({self.n})"
        if self.kind is GraphClassKind.TREES_MAXDEG:
            return f"TREES_MAXDEG({self.n},{self.max_degree})"
        if self.kind is GraphClassKind.BIPARTITE:
            suffix = ",connected" if self.connected_only else ""
            return f"BIPARTITE({self.n1},{self.n2}{suffix})"
        if self.kind is GraphClassKind.CONNECTED:
            return f"CONNECTED({self.n})"
        return f"RANDOM({self.random_kind},{self.count},{self.seed})"

    @property
    def description(self) -> str:
        if self.kind is GraphClassKind.TREES:
            return f"all trees of order {self.n}"
        if self.kind is GraphClassKind.TREES_MAXDEG:
            return f"trees of order {self.n} with maximum degree {self.max_degree}"
        if self.kind is GraphClassKind.BIPARTITE:
            which = "connected bipartite" if self.connected_only else "bipartite"
            return f"{which} graphs with parts {self.n1} and {self.n2}"
        if self.kind is GraphClassKind.CONNECTED:
            return f"connected graphs of order {self.n}"
        return f"{self.count} random graphs of kind {self.random_kind} (seed {self.seed})"

    def declared_parts(self) -> Optional[Bipartition]:
        """Part roles fixed by the class, or None when they must be computed."""
        if self.kind is GraphClassKind.BIPARTITE:
            n1, n2 = self.n1, self.n2
        elif self.kind is GraphClassKind.RANDOM and (
                match := RANDOM_KIND_PATTERNS["bipartite"].match(self.random_kind or "")):
            n1, n2 = int(match.group(1)), int(match.group(2))
        else:
            return None
        return Bipartition(frozenset(range(n1)), frozenset(range(n1, n1 + n2)))

    def is_enumerated(self) -> bool:
        return self.kind is not GraphClassKind.RANDOM

    def validate(self, budgets: EnumerationBudgets) -> None:
        """Check the class against the enumeration budgets.

        Raises:
            BudgetExceeded: If the class is too large to enumerate
        """
        if self.kind in (GraphClassKind.TREES, GraphClassKind.TREES_MAXDEG):
            if self.n > budgets.tree_max_order:
                raise BudgetExceeded(f"{self.label}: trees limited to n <= {budgets.tree_max_order}")
        elif self.kind is GraphClassKind.BIPARTITE:
            if self.n1 * self.n2 > budgets.bipartite_max_cells:
                raise BudgetExceeded(f"{self.label}: bipartite limited to n1*n2 <= {budgets.bipartite_max_cells}")
        elif self.kind is GraphClassKind.CONNECTED:
            if self.n > budgets.connected_max_order:
                raise BudgetExceeded(f"{self.label}: connected graphs limited to n <= {budgets.connected_max_order}")


_LABEL = re.compile(r"^(TREES|TREES_MAXDEG|BIPARTITE|CONNECTED|RANDOM)\((.*)\)$")


def parse_class_label(label: str) -> GraphClass:
    """Inverse of :attr:`GraphClass.label`."""
    match = _LABEL.match(label.strip())
    if not match:
        raise InvalidParams(f"Not a graph class label: {label!r}")
    kind, body = match.group(1), match.group(2).split(',')
    try:
        if kind == "TREES":
            return GraphClass.trees(int(body[0]))
        if kind == "TREES_MAXDEG":
            return GraphClass.trees_maxdeg(int(body[0]), int(body[1]))
        if kind == "BIPARTITE":
            return GraphClass.bipartite(int(body[0]), int(body[1]), len(body) > 2 and body[2] == "connected")
        if kind == "CONNECTED":
            return GraphClass.connected(int(body[0]))
        return GraphClass.random(body[0], int(body[1]), int(body[2]))
    except (IndexError, ValueError) as e:
        raise InvalidParams(f"Not a graph class label: {label!r}") from e


def iter_members(graph_class: GraphClass, budgets: Optional[EnumerationBudgets] = None) -> Iterator[Graph]:
    """Stream the graphs of ``graph_class`` in canonical order."""
    budgets = budgets or EnumerationBudgets()
    graph_class.validate(budgets)
    kind = graph_class.kind
    if kind is GraphClassKind.TREES:
        yield from enumerate_free_trees(graph_class.n, budgets.tree_max_order)
    elif kind is GraphClassKind.TREES_MAXDEG:
        yield from enumerate_trees_with_max_degree(graph_class.n, graph_class.max_degree, budgets.tree_max_order)
    elif kind is GraphClassKind.BIPARTITE:
        yield from enumerate_bipartite(graph_class.n1, graph_class.n2, graph_class.connected_only,
                                       budgets.bipartite_max_cells)
    elif kind is GraphClassKind.CONNECTED:
        yield from enumerate_connected(graph_class.n, budgets.connected_max_order)
    else:
        random_kind = graph_class.random_kind
        for i in range(graph_class.count):
            seed = graph_class.seed * 1_000_003 + i
            if match := RANDOM_KIND_PATTERNS["tree"].match(random_kind):
                yield random_tree(int(match.group(1)), seed)
            elif match := RANDOM_KIND_PATTERNS["bipartite"].match(random_kind):
                yield random_bipartite(int(match.group(1)), int(match.group(2)), float(match.group(3)), seed)
            else:
                match = RANDOM_KIND_PATTERNS["gnp"].match(random_kind)
                yield random_graph(int(match.group(1)), float(match.group(2)), seed)


@lru_cache(maxsize=64)
def class_members(graph_class: GraphClass, budgets: Optional[EnumerationBudgets] = None) -> Tuple[Graph, ...]:
    """Materialized, memoized :func:`iter_members`."""
    members = tuple(iter_members(graph_class, budgets))
    logger.debug(f"{graph_class.label}: {len(members)} graphs")
    return members


def derived_maxdeg_classes(graph_class: GraphClass) -> List[GraphClass]:
    """The ``TREES_MAXDEG`` classes a ``TREES`` class splits into."""
    if graph_class.kind is GraphClassKind.TREES_MAXDEG:
        return [graph_class]
    if graph_class.kind is not GraphClassKind.TREES or graph_class.n < 3:
        return []
    return [GraphClass.trees_maxdeg(graph_class.n, d) for d in range(2, graph_class.n)]
