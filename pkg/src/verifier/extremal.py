"""Exact class extrema with complete witness lists."""
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

from loguru import logger

from src.claims.model import Witness
from src.enumeration.graph_class import GraphClass, class_members
from src.graph.canonical import certificate
from src.graph.graph import Graph
from src.invariants.indices import albertson, sigma, total_irregularity
from src.utils.config_manager import VerificationSettings
from src.utils.errors import InvalidParams

INDEX_FUNCTIONS: Dict[str, Callable[[Graph], int]] = {
    "irr": albertson,
    "sigma": sigma,
    "irr_t": total_irregularity,
}


@dataclass(frozen=True)
class ExtremalResult:
    """Minimum and maximum of one index over a class, with every attainer."""
    graph_class: GraphClass
    index: str
    size: int
    min_value: Optional[int]
    max_value: Optional[int]
    min_witnesses: Tuple[Witness, ...]
    max_witnesses: Tuple[Witness, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.graph_class.label,
            "index": self.index,
            "size": self.size,
            "min": self.min_value,
            "max": self.max_value,
            "min_witnesses": [w.to_dict() for w in self.min_witnesses],
            "max_witnesses": [w.to_dict() for w in self.max_witnesses],
        }

    def to_row(self) -> Dict[str, Any]:
        """Flat row for CSV tables."""
        return {
            "class": self.graph_class.label,
            "index": self.index,
            "size": self.size,
            "min": self.min_value,
            "max": self.max_value,
            "min_witnesses": " ".join(w.graph6 for w in self.min_witnesses),
            "max_witnesses": " ".join(w.graph6 for w in self.max_witnesses),
        }


def _witness(g: Graph, settings: VerificationSettings) -> Witness:
    cert = None
    if g.n <= settings.budgets.certificate_max_order:
        cert = certificate(g, settings.budgets.certificate_max_order).hex()
    return Witness.of(g, certificate=cert)


def extremal_scan(graph_class: GraphClass, index: str = "irr",
                  settings: Optional[VerificationSettings] = None) -> ExtremalResult:
    """Scan ``graph_class`` for the extrema of ``index``.

    Raises:
        BudgetExceeded: If the class exceeds the enumeration budgets
        InvalidParams: If ``index`` is unknown
    """
    if index not in INDEX_FUNCTIONS:
        raise InvalidParams(f"Unknown index {index!r}; expected one of {', '.join(INDEX_FUNCTIONS)}")
    settings = settings or VerificationSettings()
    members = class_members(graph_class, settings.budgets)
    if not members:
        logger.warning(f"{graph_class.label} is empty")
        return ExtremalResult(graph_class, index, 0, None, None, (), ())
    function = INDEX_FUNCTIONS[index]
    values = [function(g) for g in members]
    low, high = min(values), max(values)
    lows = tuple(_witness(g, settings) for g, v in zip(members, values) if v == low)
    highs = tuple(_witness(g, settings) for g, v in zip(members, values) if v == high)
    logger.debug(f"{graph_class.label} {index}: min {low} ({len(lows)}), max {high} ({len(highs)})")
    return ExtremalResult(graph_class, index, len(members), low, high, lows, highs)
