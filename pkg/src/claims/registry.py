"""Claim registry and the uniform evaluation harness."""
from dataclasses import replace
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from loguru import logger

from src.claims.catalogue import CLAIM_CATALOGUE, get_claim_ids
from src.claims.evaluators import EVALUATORS
from src.claims.exact import Verdict
from src.claims.model import (
    Claim,
    ClaimKind,
    ClaimOutcome,
    ClaimParams,
    Evaluation,
    GraphSubject,
    PartOutcome,
    Witness,
    worst_part,
)
from src.enumeration.graph_class import GraphClass, GraphClassKind
from src.graph.canonical import certificate
from src.graph.graph import Graph
from src.parsers.graph6_parser import write_graph6
from src.utils.config_manager import VerificationSettings
from src.utils.errors import InadmissibleParams, KindMismatch, UnknownClaimId

Subject = Union[Graph, GraphSubject, GraphClass]


@lru_cache(maxsize=1)
def _claims() -> Tuple[Claim, ...]:
    claims = []
    for claim_id in get_claim_ids():
        entry = CLAIM_CATALOGUE[claim_id]
        claims.append(Claim(
            id=claim_id,
            statement=entry["statement"],
            kind=ClaimKind(entry["kind"]),
            guard=entry["guard"],
            evaluator=EVALUATORS[claim_id],
            class_kinds=tuple(entry.get("classes", ())),
            param_rule=entry.get("params"),
            note=entry.get("note", ""),
            interpretation=entry.get("interpretation"),
        ))
    return tuple(claims)


def registry() -> List[Claim]:
    """Every claim, ordered by id number."""
    return list(_claims())


def get_claim(claim_id: str) -> Claim:
    """Look up a claim by id.

    Raises:
        UnknownClaimId: If the id is not registered
    """
    for claim in _claims():
        if claim.id == claim_id:
            return claim
    raise UnknownClaimId(f"Unknown claim id: {claim_id!r}")


def resolve_claims(claim_filter: Optional[List[str]]) -> List[Claim]:
    """Claims selected by ids; None, an empty list or ``["all"]`` select everything."""
    if not claim_filter or [c.lower() for c in claim_filter] == ["all"]:
        return registry()
    return [get_claim(claim_id.strip().upper()) for claim_id in claim_filter]


def admissible_params(claim: Claim, max_degree: int) -> List[ClaimParams]:
    """Full admissible ``(alpha, p)`` grid for ``claim`` at maximum degree ``max_degree``.

    Empty when the claim takes no parameters or ``max_degree < 4``.
    """
    top = max_degree - 3
    if claim.param_rule == "alpha,p":
        return [ClaimParams(alpha, p) for alpha in range(1, top + 1) for p in range(1, alpha + 1)]
    if claim.param_rule == "alpha":
        return [ClaimParams(alpha, None) for alpha in range(1, top + 1)]
    return []


def _check_kind(claim: Claim, subject: Subject) -> Union[GraphSubject, GraphClass]:
    if claim.kind.on_classes:
        if not isinstance(subject, GraphClass):
            raise KindMismatch(f"{claim.id} is evaluated on graph classes, got {type(subject).__name__}")
        if subject.kind.value not in claim.class_kinds:
            raise KindMismatch(f"{claim.id} is evaluated on {', '.join(claim.class_kinds)}, got {subject.label}")
        return subject
    if isinstance(subject, Graph):
        return GraphSubject(subject)
    if not isinstance(subject, GraphSubject):
        raise KindMismatch(f"{claim.id} is evaluated on single graphs, got {type(subject).__name__}")
    return subject


def _with_certificate(witness: Optional[Witness], settings: VerificationSettings) -> Optional[Witness]:
    if witness is None or witness.certificate is not None:
        return witness
    g = witness.graph
    if g.n > settings.budgets.certificate_max_order:
        return witness
    return replace(witness, certificate=certificate(g, settings.budgets.certificate_max_order).hex())


def _outcome(claim: Claim, subject: Union[GraphSubject, GraphClass], params: Optional[ClaimParams],
             evaluation: Evaluation, settings: VerificationSettings) -> ClaimOutcome:
    worst = worst_part(evaluation.parts)
    if isinstance(subject, GraphClass):
        label, graph6 = subject.label, None
        witness = worst.witness
    else:
        label, graph6 = subject.label, write_graph6(subject.graph)
        witness = None
        if worst.verdict in (Verdict.FAILS, Verdict.MARGINAL):
            witness = Witness.of(subject.graph, subject.declared_parts)
    if worst.verdict in (Verdict.FAILS, Verdict.MARGINAL) or isinstance(subject, GraphClass):
        witness = _with_certificate(witness, settings)
    return ClaimOutcome(
        claim_id=claim.id,
        subject=label,
        verdict=worst.verdict,
        params=params,
        lhs=worst.lhs,
        rhs=worst.rhs,
        relation=worst.relation,
        parts=evaluation.parts,
        witness=witness,
        graph6=graph6,
        note=worst.note,
        interpretation=evaluation.interpretation or claim.interpretation,
    )


def evaluate(claim: Claim, subject: Subject, params: Optional[ClaimParams] = None,
             settings: Optional[VerificationSettings] = None) -> ClaimOutcome:
    """Evaluate ``claim`` on a graph or a graph class.

    Without ``params`` a parameterized claim is checked at every admissible
    point and the outcome reports the worst one.

    Raises:
        KindMismatch: If the subject kind does not suit the claim
        InadmissibleParams: If ``params`` lie outside the admissible grid
    """
    settings = settings or VerificationSettings()
    subject = _check_kind(claim, subject)
    if claim.param_rule is None:
        if params is not None and params != ClaimParams():
            raise InadmissibleParams(f"{claim.id} takes no parameters, got {params}")
        return _outcome(claim, subject, None, claim.evaluator(subject, None, settings), settings)

    max_degree = subject.max_degree if subject.kind is GraphClassKind.TREES_MAXDEG else 0
    grid = admissible_params(claim, max_degree)
    if params is not None:
        if params not in grid:
            raise InadmissibleParams(f"{claim.id}: {params} outside the admissible grid for Delta={max_degree}")
        points = [params]
    elif not grid:
        empty = PartOutcome("claim", Verdict.NOT_APPLICABLE, note="Delta < 4: no admissible (alpha, p)")
        return _outcome(claim, subject, None, Evaluation((empty,)), settings)
    else:
        points = grid

    best: Optional[ClaimOutcome] = None
    for point in points:
        outcome = _outcome(claim, subject, point, claim.evaluator(subject, point, settings), settings)
        if best is None or outcome.verdict.severity > best.verdict.severity:
            best = outcome
    logger.trace(f"{claim.id} on {best.subject}: {best.verdict.value} at {best.params}")
    return best
