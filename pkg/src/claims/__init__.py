"""Catalogued claims and their exact evaluation."""
from src.claims.exact import Verdict
from src.claims.model import (
    Claim,
    ClaimKind,
    ClaimOutcome,
    ClaimParams,
    GraphSubject,
    PartOutcome,
    Witness,
)
from src.claims.registry import admissible_params, evaluate, get_claim, registry, resolve_claims

__all__ = [
    'Claim', 'ClaimKind', 'ClaimOutcome', 'ClaimParams', 'GraphSubject', 'PartOutcome',
    'Verdict', 'Witness', 'admissible_params', 'evaluate', 'get_claim', 'registry',
    'resolve_claims',
]
