"""Degree-based irregularity indices.

Every index is exact: integers or ``Fraction`` except the general
Albertson index, which is a float.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from src.graph.graph import Graph, degree_sequence, iter_non_edges, longest_path
from src.utils.errors import CompleteGraph, InvalidSpine, NonPositiveP

SIGMA2_MODES = ("standard", "literal")


def albertson(g: Graph) -> int:
    """``irr(G)``: sum of ``|d(u) - d(v)|`` over edges."""
    d = g.degrees
    return sum(abs(d[u] - d[v]) for u, v in g.edges)


def sigma(g: Graph) -> int:
    """``σ(G)``: sum of ``(d(u) - d(v))^2`` over edges."""
    d = g.degrees
    return sum((d[u] - d[v]) ** 2 for u, v in g.edges)


def total_irregularity(g: Graph) -> int:
    """``irr_t(G)`` from the sorted degree sequence: ``2(n+1)m - 2 Σ i·d_i``."""
    values = degree_sequence(g).values
    weighted = sum(i * d for i, d in enumerate(values, start=1))
    return 2 * (g.n + 1) * g.m - 2 * weighted


def total_irregularity_pairwise(g: Graph) -> int:
    """``irr_t(G)`` as the sum of ``|d(u) - d(v)|`` over all unordered pairs."""
    d = g.degrees
    return sum(abs(d[u] - d[v]) for u in range(g.n) for v in range(u + 1, g.n))


def first_zagreb(g: Graph) -> int:
    """``M1(G) = Σ d(v)^2``."""
    return sum(x * x for x in g.degrees)


def second_zagreb(g: Graph) -> int:
    """``M2(G) = Σ d(u)d(v)`` over edges."""
    d = g.degrees
    return sum(d[u] * d[v] for u, v in g.edges)


def average_degree(g: Graph) -> Fraction:
    return Fraction(2 * g.m, g.n)


def sigma2_min_nonadjacent(g: Graph, mode: str = "standard") -> int:
    """Minimum degree sum over non-adjacent pairs.

    In ``literal`` mode each pair contributes ``2·min(d(u), d(v))``.

    Raises:
        CompleteGraph: If ``g`` has no non-adjacent pair
    """
    if mode not in SIGMA2_MODES:
        raise ValueError(f"Unknown sigma2 mode: {mode}")
    d = g.degrees
    if mode == "literal":
        values = [2 * min(d[u], d[v]) for u, v in iter_non_edges(g)]
    else:
        values = [d[u] + d[v] for u, v in iter_non_edges(g)]
    if not values:
        raise CompleteGraph("σ2 is undefined on complete graphs")
    return min(values)


def general_albertson(g: Graph, p: float) -> float:
    """``irr_p(G) = (Σ_edges |d(u) - d(v)|^p)^(1/p)``.

    Raises:
        NonPositiveP: If ``p <= 0``
    """
    if p <= 0:
        raise NonPositiveP(f"p must be positive, got {p}")
    d = np.asarray(g.degrees, dtype=float)
    if g.m == 0:
        return 0.0
    edges = np.asarray(g.sorted_edges(), dtype=int)
    gaps = np.abs(d[edges[:, 0]] - d[edges[:, 1]])
    return float(np.sum(gaps ** p) ** (1.0 / p))


def caterpillar_irr_closed_form(spine: Sequence[int]) -> int:
    """Albertson index of the caterpillar with the given spine degrees.

    Ends of the spine carry ``d - 1`` pendant leaves, interior vertices
    ``d - 2``.

    Raises:
        InvalidSpine: If the spine has fewer than two vertices, an end of
            degree below 1, or an interior vertex of degree below 2
    """
    spine = list(spine)
    validate_spine(spine)
    k = len(spine)
    along = sum(abs(spine[i] - spine[i + 1]) for i in range(k - 1))
    pendant = (spine[0] - 1) ** 2 + (spine[-1] - 1) ** 2
    pendant += sum((d - 2) * (d - 1) for d in spine[1:-1])
    return along + pendant


def validate_spine(spine: Sequence[int]) -> None:
    if len(spine) < 2:
        raise InvalidSpine(f"A spine needs at least two vertices, got {list(spine)}")
    if spine[0] < 1 or spine[-1] < 1:
        raise InvalidSpine(f"Spine ends need degree >= 1, got {list(spine)}")
    if any(d < 2 for d in spine[1:-1]):
        raise InvalidSpine(f"Interior spine vertices need degree >= 2, got {list(spine)}")


def caterpillar_spine(g: Graph) -> Optional[List[int]]:
    """Spine degrees of ``g`` along a diameter path, or None if ``g`` is not a caterpillar."""
    if g.n < 2 or not g.is_tree():
        return None
    path = longest_path(g)
    on_path = set(path)
    for v in range(g.n):
        if v in on_path:
            continue
        if g.degree(v) != 1 or not (g.adjacency[v] & on_path):
            return None
    return [g.degree(v) for v in path]


@dataclass(frozen=True)
class InvariantBundle:
    """Every index of one graph, computed together."""
    n: int
    m: int
    max_degree: int
    min_degree: int
    irr: int
    sigma: int
    irr_t: int
    m1: int
    m2: int
    deg_ave: Fraction
    sigma2: Optional[int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n, "m": self.m,
            "Delta": self.max_degree, "delta": self.min_degree,
            "irr": self.irr, "sigma": self.sigma, "irr_t": self.irr_t,
            "m1": self.m1, "m2": self.m2,
            "deg_ave": {"num": self.deg_ave.numerator, "den": self.deg_ave.denominator},
            "sigma2": self.sigma2,
        }


def compute_bundle(g: Graph, sigma2_mode: str = "standard") -> InvariantBundle:
    """Compute all indices of ``g``; ``sigma2`` is None on complete graphs."""
    try:
        s2: Optional[int] = sigma2_min_nonadjacent(g, sigma2_mode)
    except CompleteGraph:
        s2 = None
    return InvariantBundle(
        n=g.n, m=g.m,
        max_degree=g.max_degree(), min_degree=g.min_degree(),
        irr=albertson(g), sigma=sigma(g), irr_t=total_irregularity(g),
        m1=first_zagreb(g), m2=second_zagreb(g),
        deg_ave=average_degree(g), sigma2=s2,
    )
