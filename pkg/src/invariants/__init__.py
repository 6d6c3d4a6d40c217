"""Irregularity indices and the invariant bundle."""
from src.invariants.indices import (
    InvariantBundle,
    albertson,
    average_degree,
    caterpillar_irr_closed_form,
    caterpillar_spine,
    compute_bundle,
    first_zagreb,
    general_albertson,
    second_zagreb,
    sigma,
    sigma2_min_nonadjacent,
    total_irregularity,
    total_irregularity_pairwise,
)

__all__ = [
    'InvariantBundle', 'albertson', 'average_degree', 'caterpillar_irr_closed_form',
    'caterpillar_spine', 'compute_bundle', 'first_zagreb', 'general_albertson',
    'second_zagreb', 'sigma', 'sigma2_min_nonadjacent', 'total_irregularity',
    'total_irregularity_pairwise',
]
