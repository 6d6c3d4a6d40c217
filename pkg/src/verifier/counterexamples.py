"""Counterexample search, shrinking and witness replay."""
from typing import Iterator, List, Optional, Union

import networkx as nx
from loguru import logger

from src.claims.exact import Verdict
from src.claims.model import Claim, ClaimOutcome, ClaimParams, GraphSubject
from src.claims.registry import evaluate, get_claim
from src.enumeration.graph_class import (
    GraphClass,
    GraphClassKind,
    class_members,
    derived_maxdeg_classes,
    parse_class_label,
)
from src.graph.canonical import certificate
from src.graph.graph import Graph
from src.utils.config_manager import VerificationSettings
from src.utils.errors import KindMismatch, NotAFailure


def iter_subjects(claim: Claim, graph_class: GraphClass,
                  settings: VerificationSettings) -> Iterator[Union[GraphSubject, GraphClass]]:
    """Subjects ``claim`` is evaluated on within one corpus class, in canonical order."""
    if claim.kind.on_classes:
        if graph_class.kind.value in claim.class_kinds:
            yield graph_class
        elif "TREES_MAXDEG" in claim.class_kinds and graph_class.kind is GraphClassKind.TREES:
            yield from derived_maxdeg_classes(graph_class)
        return
    parts = graph_class.declared_parts()
    for i, g in enumerate(class_members(graph_class, settings.budgets)):
        yield GraphSubject(g, f"{graph_class.label}[{i}]", parts)


def find_counterexamples(claim: Claim, corpus: List[GraphClass], limit: int = 10,
                         settings: Optional[VerificationSettings] = None) -> List[ClaimOutcome]:
    """First ``limit`` FAILS outcomes of ``claim`` over ``corpus`` in canonical order."""
    settings = settings or VerificationSettings()
    found: List[ClaimOutcome] = []
    if limit <= 0:
        return found
    for graph_class in corpus:
        for subject in iter_subjects(claim, graph_class, settings):
            outcome = evaluate(claim, subject, None, settings)
            if outcome.verdict is Verdict.FAILS:
                found.append(outcome)
                if len(found) >= limit:
                    return found
    logger.debug(f"{claim.id}: {len(found)} counterexamples in {len(corpus)} classes")
    return found


def _moves(subject: GraphSubject) -> Iterator[GraphSubject]:
    for edge in subject.graph.sorted_edges():
        yield subject.without_edge(edge)
    if subject.graph.n > 1:
        for v in range(subject.graph.n):
            yield subject.without_vertex(v)


def shrink_subject(subject: GraphSubject, claim: Claim, params: Optional[ClaimParams] = None,
                   settings: Optional[VerificationSettings] = None) -> GraphSubject:
    """Greedy local minimum of a failing subject under edge and vertex deletions.

    Raises:
        KindMismatch: If ``claim`` is evaluated on classes
        NotAFailure: If ``subject`` does not fail ``claim``
    """
    if claim.kind.on_classes:
        raise KindMismatch(f"{claim.id} is evaluated on classes; only single graphs can be shrunk")
    settings = settings or VerificationSettings()
    if evaluate(claim, subject, params, settings).verdict is not Verdict.FAILS:
        raise NotAFailure(f"{claim.id} does not fail on {subject.label}")
    steps = 0
    improved = True
    while improved:
        improved = False
        for candidate in _moves(subject):
            if evaluate(claim, candidate, params, settings).verdict is Verdict.FAILS:
                subject = candidate
                steps += 1
                improved = True
                break
    logger.debug(f"{claim.id}: shrunk in {steps} steps to n={subject.graph.n}, m={subject.graph.m}")
    return subject


def shrink_counterexample(g: Union[Graph, GraphSubject], claim: Claim, params: Optional[ClaimParams] = None,
                          settings: Optional[VerificationSettings] = None) -> Graph:
    """Graph form of :func:`shrink_subject`."""
    subject = g if isinstance(g, GraphSubject) else GraphSubject(g, "shrink")
    return shrink_subject(subject, claim, params, settings).graph


def replay_witness(outcome: ClaimOutcome, settings: Optional[VerificationSettings] = None) -> Verdict:
    """Re-evaluate an outcome from its serialized witness.

    Single-graph outcomes are re-evaluated on the decoded witness. Class
    outcomes are re-evaluated on the class named by the subject label, and
    the witness must belong to that class.
    """
    settings = settings or VerificationSettings()
    if outcome.witness is None:
        raise ValueError(f"Outcome of {outcome.claim_id} on {outcome.subject} has no witness")
    claim = get_claim(outcome.claim_id)
    if not claim.kind.on_classes:
        return evaluate(claim, outcome.witness.subject(outcome.subject), outcome.params, settings).verdict
    graph_class = parse_class_label(outcome.subject)
    witness = outcome.witness.graph
    members = class_members(graph_class, settings.budgets)
    if not any(_isomorphic(witness, g, settings) for g in members):
        logger.warning(f"Witness {outcome.witness.graph6} is not a member of {graph_class.label}")
        return Verdict.NOT_APPLICABLE
    return evaluate(claim, graph_class, outcome.params, settings).verdict


def _isomorphic(a: Graph, b: Graph, settings: VerificationSettings) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    if a.n <= settings.budgets.certificate_max_order:
        return certificate(a, a.n) == certificate(b, b.n)
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())
