"""Claim, parameter, subject and outcome types."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Tuple

from src.claims.exact import Number, Verdict
from src.graph.graph import Bipartition, Graph, find_bipartition
from src.parsers.graph6_parser import parse_graph6, write_graph6
from src.utils.helpers import encode_number


class ClaimKind(str, Enum):
    PER_GRAPH = "PER_GRAPH"
    CLASS_EXTREMAL = "CLASS_EXTREMAL"
    IFF_CHARACTERIZATION = "IFF_CHARACTERIZATION"
    IDENTITY = "IDENTITY"

    @property
    def on_classes(self) -> bool:
        return self in (ClaimKind.CLASS_EXTREMAL, ClaimKind.IFF_CHARACTERIZATION)


@dataclass(frozen=True, order=True)
class ClaimParams:
    """Integer parameters ``alpha`` and ``p``; either may be absent."""
    alpha: Optional[int] = None
    p: Optional[int] = None

    def to_dict(self) -> Dict[str, Optional[int]]:
        return {"alpha": self.alpha, "p": self.p}


@dataclass(frozen=True)
class GraphSubject:
    """One graph under test, with the part roles its corpus declares."""
    graph: Graph
    label: str = "graph"
    declared_parts: Optional[Bipartition] = None

    def bipartition(self) -> Optional[Bipartition]:
        """Declared parts when valid for this graph, else the computed 2-colouring."""
        if self.declared_parts is not None:
            part1 = self.declared_parts.part1
            if all((u in part1) != (v in part1) for u, v in self.graph.edges):
                return self.declared_parts
            return None
        return find_bipartition(self.graph)

    def without_edge(self, edge: Tuple[int, int]) -> "GraphSubject":
        return GraphSubject(self.graph.delete_edge(edge), self.label, self.declared_parts)

    def without_vertex(self, v: int) -> "GraphSubject":
        parts = None
        if self.declared_parts is not None:
            def shift(side: FrozenSet[int]) -> FrozenSet[int]:
                return frozenset(x - 1 if x > v else x for x in side if x != v)
            parts = Bipartition(shift(self.declared_parts.part1), shift(self.declared_parts.part2))
        return GraphSubject(self.graph.delete_vertex(v), self.label, parts)


@dataclass(frozen=True)
class Witness:
    """Replayable description of a graph attached to an outcome."""
    graph6: str
    certificate: Optional[str] = None
    part1: Optional[Tuple[int, ...]] = None

    @classmethod
    def of(cls, g: Graph, parts: Optional[Bipartition] = None, certificate: Optional[str] = None) -> "Witness":
        part1 = tuple(sorted(parts.part1)) if parts is not None else None
        return cls(write_graph6(g), certificate, part1)

    @property
    def graph(self) -> Graph:
        return parse_graph6(self.graph6)

    def subject(self, label: str = "witness") -> GraphSubject:
        g = self.graph
        parts = None
        if self.part1 is not None:
            part1 = frozenset(self.part1)
            parts = Bipartition(part1, frozenset(range(g.n)) - part1)
        return GraphSubject(g, label, parts)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"graph6": self.graph6}
        if self.certificate is not None:
            data["certificate"] = self.certificate
        if self.part1 is not None:
            data["part1"] = list(self.part1)
        return data


@dataclass(frozen=True)
class PartOutcome:
    """Verdict on one inequality or equality of a claim."""
    label: str
    verdict: Verdict
    lhs: Optional[Number] = None
    rhs: Optional[Number] = None
    relation: Optional[str] = None
    note: str = ""
    witness: Optional[Witness] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "verdict": self.verdict.value,
            "lhs": encode_number(self.lhs, with_decimal=True) if self.lhs is not None else None,
            "rhs": encode_number(self.rhs, with_decimal=True) if self.rhs is not None else None,
            "relation": self.relation,
            "note": self.note,
        }


@dataclass(frozen=True)
class Evaluation:
    """What an evaluator returns for one parameter point."""
    parts: Tuple[PartOutcome, ...]
    interpretation: Optional[str] = None


def worst_part(parts: Tuple[PartOutcome, ...]) -> PartOutcome:
    """Most severe part; earliest wins ties."""
    return max(parts, key=lambda part: part.verdict.severity)


@dataclass(frozen=True)
class ClaimOutcome:
    """Result of evaluating one claim on one subject."""
    claim_id: str
    subject: str
    verdict: Verdict
    params: Optional[ClaimParams] = None
    lhs: Optional[Number] = None
    rhs: Optional[Number] = None
    relation: Optional[str] = None
    parts: Tuple[PartOutcome, ...] = ()
    witness: Optional[Witness] = None
    graph6: Optional[str] = None
    note: str = ""
    interpretation: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim_id,
            "subject": self.subject,
            "graph6": self.graph6,
            "params": (self.params or ClaimParams()).to_dict(),
            "lhs": encode_number(self.lhs, with_decimal=True) if self.lhs is not None else None,
            "rhs": encode_number(self.rhs, with_decimal=True) if self.rhs is not None else None,
            "relation": self.relation,
            "verdict": self.verdict.value,
            "parts": [part.to_dict() for part in self.parts],
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "note": self.note,
            "interpretation": self.interpretation,
        }


Evaluator = Callable[[Any, Optional[ClaimParams], Any], Evaluation]


@dataclass(frozen=True)
class Claim:
    """A checkable statement about graphs or graph classes."""
    id: str
    statement: str
    kind: ClaimKind
    guard: str
    evaluator: Evaluator = field(repr=False, compare=False)
    class_kinds: Tuple[str, ...] = ()
    param_rule: Optional[str] = None
    note: str = ""
    interpretation: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "statement": self.statement,
            "kind": self.kind.value,
            "guard": self.guard,
            "classes": list(self.class_kinds),
            "params": self.param_rule,
            "note": self.note,
            "interpretation": self.interpretation,
        }
