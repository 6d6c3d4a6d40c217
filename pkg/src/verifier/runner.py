"""Suite runner: fans (claim, subject) tasks out over a worker pool."""
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Tuple, Union

from loguru import logger

from src.claims.exact import Verdict
from src.claims.model import ClaimOutcome, GraphSubject, Witness
from src.claims.registry import evaluate, get_claim, resolve_claims
from src.enumeration.graph_class import GraphClass, GraphClassKind
from src.utils.config_manager import VerificationSettings
from src.verifier.counterexamples import iter_subjects, shrink_subject
from src.verifier.extremal import INDEX_FUNCTIONS, extremal_scan
from src.verifier.report import Report


@dataclass(frozen=True)
class Task:
    """One claim evaluation; picklable so it can cross process boundaries."""
    claim_id: str
    subject: Union[GraphSubject, GraphClass]
    origin: str


def build_tasks(corpus: List[GraphClass], claim_filter: Optional[List[str]],
                settings: VerificationSettings) -> List[Task]:
    """Every (claim, subject) pair in canonical order: corpus class, then claim, then subject.

    Raises:
        BudgetExceeded: If a corpus class exceeds its enumeration budget
        UnknownClaimId: If the filter names an unknown claim
    """
    claims = resolve_claims(claim_filter)
    for graph_class in corpus:
        graph_class.validate(settings.budgets)
    tasks = []
    for graph_class in corpus:
        for claim in claims:
            for subject in iter_subjects(claim, graph_class, settings):
                tasks.append(Task(claim.id, subject, graph_class.label))
    return tasks


def _run_task(payload: Tuple[Task, VerificationSettings]) -> ClaimOutcome:
    task, settings = payload
    return evaluate(get_claim(task.claim_id), task.subject, None, settings)


def evaluate_tasks(tasks: List[Task], settings: VerificationSettings, workers: int = 1,
                   chunk_size: int = 16) -> List[ClaimOutcome]:
    """Evaluate tasks, in order, serially or on ``workers`` processes."""
    payloads = [(task, settings) for task in tasks]
    if workers <= 1 or len(tasks) < 2:
        return [_run_task(payload) for payload in payloads]
    logger.info(f"Evaluating {len(tasks)} tasks on {workers} workers")
    with Pool(processes=workers) as pool:
        return list(pool.imap(_run_task, payloads, chunksize=max(1, chunk_size)))


def _shrink_failures(tasks: List[Task], outcomes: List[ClaimOutcome],
                     settings: VerificationSettings) -> List[Dict[str, Any]]:
    """Shrink the first per-graph failure of each (claim, class) pair."""
    shrunk = []
    seen = set()
    for task, outcome in zip(tasks, outcomes):
        key = (task.claim_id, task.origin)
        if outcome.verdict is not Verdict.FAILS or key in seen or not isinstance(task.subject, GraphSubject):
            continue
        seen.add(key)
        smaller = shrink_subject(task.subject, get_claim(task.claim_id), None, settings)
        shrunk.append({
            "claim": task.claim_id,
            "subject": outcome.subject,
            "original": outcome.graph6,
            "shrunk": Witness.of(smaller.graph, smaller.declared_parts).to_dict(),
        })
    return shrunk


def run_suite(corpus: List[GraphClass], claim_filter: Optional[List[str]] = None,
              settings: Optional[VerificationSettings] = None, workers: int = 1, chunk_size: int = 16,
              shrink: bool = False, version: str = "1.0.0", extremal: bool = True) -> Report:
    """Evaluate the selected claims on every subject of every corpus class.

    Args:
        corpus: Graph classes to evaluate on
        claim_filter: Claim ids, ``["all"]`` or None for every claim
        settings: Verification settings
        workers: Worker processes; 1 evaluates in-process
        chunk_size: Tasks handed to a worker at a time
        shrink: Shrink the first per-graph failure of each (claim, class)
        version: Tool version recorded in the report
        extremal: Attach extremal tables for the enumerated classes

    Returns:
        Report with outcomes in canonical order
    """
    settings = settings or VerificationSettings()
    claims = resolve_claims(claim_filter)
    tasks = build_tasks(corpus, [c.id for c in claims], settings)
    logger.info(f"Running {len(claims)} claims over {len(corpus)} classes ({len(tasks)} evaluations)")
    outcomes = evaluate_tasks(tasks, settings, workers, chunk_size)
    report = Report(
        run={
            "corpus": [gc.label for gc in corpus],
            "claims": [c.id for c in claims],
            "seed": [gc.seed for gc in corpus if gc.kind is GraphClassKind.RANDOM] or None,
            "version": version,
            "extremum_reading": settings.extremum_reading,
            "sigma2_mode": settings.sigma2_mode,
        },
        outcomes=outcomes,
        origins=[task.origin for task in tasks],
    )
    if extremal:
        report.extremal = [
            extremal_scan(gc, index, settings)
            for gc in corpus if gc.is_enumerated()
            for index in INDEX_FUNCTIONS
        ]
    if shrink:
        report.shrunk = _shrink_failures(tasks, outcomes, settings)
    for row in report.claim_summaries():
        if row["status"].startswith("not applicable"):
            logger.warning(f"{row['claim']} is not applicable anywhere in the corpus")
    summary = report.summary
    logger.info(f"Summary: {summary['holds']} holds, {summary['fails']} fails, "
                f"{summary['marginal']} marginal, {summary['na']} not applicable")
    return report
