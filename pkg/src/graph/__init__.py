"""Graph core: immutable graphs, structural predicates and certificates."""
from src.graph.graph import (
    Bipartition,
    DegreeSequence,
    Graph,
    complete_bipartite_parts,
    degree_sequence,
    find_bipartition,
    is_bipartite,
    is_hamiltonian,
    is_path,
    is_star,
)
from src.graph.canonical import GraphCertificate, are_isomorphic, certificate

__all__ = [
    'Bipartition', 'DegreeSequence', 'Graph', 'GraphCertificate',
    'are_isomorphic', 'certificate', 'complete_bipartite_parts',
    'degree_sequence', 'find_bipartition', 'is_bipartite', 'is_hamiltonian',
    'is_path', 'is_star',
]
