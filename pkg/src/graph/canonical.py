"""Isomorphism-invariant certificates.

The certificate is the lexicographically largest upper-triangle adjacency
string over the leaves of an individualization-refinement search tree.
Equal certificates mean isomorphic graphs and vice versa.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.graph.graph import Graph
from src.utils.errors import TooLarge


@dataclass(frozen=True, order=True)
class GraphCertificate:
    """Opaque, hashable isomorphism class key."""
    value: bytes

    def hex(self) -> str:
        return self.value.hex()


def _refine(g: Graph, colours: List[int]) -> List[int]:
    """Equitable refinement: split cells by neighbour colour multisets."""
    cells = len(set(colours))
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in g.adjacency[v])))
            for v in range(g.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colours = [ranking[sig] for sig in signatures]
        if len(ranking) == cells:
            return colours
        cells = len(ranking)


def _individualize(colours: Sequence[int], v: int) -> List[int]:
    keyed = [(c, 0 if u == v else 1) for u, c in enumerate(colours)]
    ranking = {key: i for i, key in enumerate(sorted(set(keyed)))}
    return [ranking[key] for key in keyed]


def _are_twins(g: Graph, u: int, w: int) -> bool:
    open_u, open_w = g.adjacency[u] - {w}, g.adjacency[w] - {u}
    return open_u == open_w


def _encode(g: Graph, labels: Sequence[int]) -> Tuple[int, ...]:
    inverse = [0] * g.n
    for v, label in enumerate(labels):
        inverse[label] = v
    return tuple(
        1 if g.has_edge(inverse[i], inverse[j]) else 0
        for j in range(g.n) for i in range(j)
    )


def _search(g: Graph, colours: List[int], best: List[Optional[Tuple[int, ...]]]) -> None:
    colours = _refine(g, colours)
    counts = {}
    for c in colours:
        counts[c] = counts.get(c, 0) + 1
    target = min((c for c, k in counts.items() if k > 1), default=None)
    if target is None:
        code = _encode(g, colours)
        if best[0] is None or code > best[0]:
            best[0] = code
        return
    representatives: List[int] = []
    for v in range(g.n):
        if colours[v] != target:
            continue
        # swapping twins is an automorphism fixing every other vertex
        if any(_are_twins(g, v, r) for r in representatives):
            continue
        representatives.append(v)
        _search(g, _individualize(colours, v), best)


def certificate(g: Graph, max_order: int = 12) -> GraphCertificate:
    """Compute the isomorphism certificate of ``g``.

    Args:
        g: Graph to certify
        max_order: Largest order accepted

    Returns:
        GraphCertificate shared by exactly the graphs isomorphic to ``g``

    Raises:
        TooLarge: If ``g.n`` exceeds ``max_order``
    """
    if g.n > max_order:
        raise TooLarge(f"Certificates limited to n <= {max_order}, got {g.n}")
    best: List[Optional[Tuple[int, ...]]] = [None]
    _search(g, [0] * g.n, best)
    bits = best[0] or ()
    packed = bytearray([g.n])
    for start in range(0, len(bits), 8):
        chunk = bits[start:start + 8]
        byte = 0
        for bit in chunk:
            byte = (byte << 1) | bit
        packed.append(byte << (8 - len(chunk)))
    return GraphCertificate(bytes(packed))


def are_isomorphic(a: Graph, b: Graph, max_order: int = 12) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    return certificate(a, max_order) == certificate(b, max_order)
