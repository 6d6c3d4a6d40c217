"""Run report: outcomes, summaries and extremal tables."""
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.claims.exact import Verdict
from src.claims.model import ClaimOutcome
from src.verifier.extremal import ExtremalResult

HOLDS_DISCLAIMER = "HOLDS means no counterexample in the evaluated corpus; it is not a proof"

_SUMMARY_KEYS = {
    Verdict.HOLDS: "holds",
    Verdict.FAILS: "fails",
    Verdict.NOT_APPLICABLE: "na",
    Verdict.MARGINAL: "marginal",
}


def _counts(outcomes: List[ClaimOutcome]) -> Dict[str, int]:
    tally = Counter(o.verdict for o in outcomes)
    return {key: tally.get(verdict, 0) for verdict, key in _SUMMARY_KEYS.items()}


def _status(counts: Dict[str, int]) -> str:
    if counts["fails"]:
        return "refuted by witness"
    if counts["marginal"]:
        return "marginal"
    if counts["holds"]:
        return "holds on corpus"
    return "not applicable anywhere in the corpus"


@dataclass
class Report:
    """Deterministic record of one verification run."""
    run: Dict[str, Any]
    outcomes: List[ClaimOutcome] = field(default_factory=list)
    origins: List[str] = field(default_factory=list)
    extremal: List[ExtremalResult] = field(default_factory=list)
    shrunk: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def summary(self) -> Dict[str, int]:
        return _counts(self.outcomes)

    @property
    def has_failures(self) -> bool:
        return any(o.verdict is Verdict.FAILS for o in self.outcomes)

    def failures(self) -> List[ClaimOutcome]:
        return [o for o in self.outcomes if o.verdict is Verdict.FAILS]

    def claim_summaries(self) -> List[Dict[str, Any]]:
        """Counts and overall status per claim, in registry order."""
        grouped: Dict[str, List[ClaimOutcome]] = {}
        for outcome in self.outcomes:
            grouped.setdefault(outcome.claim_id, []).append(outcome)
        rows = []
        for claim_id, outcomes in grouped.items():
            counts = _counts(outcomes)
            rows.append({"claim": claim_id, **counts, "status": _status(counts)})
        return rows

    def class_summaries(self) -> List[Dict[str, Any]]:
        """One verdict per (claim, corpus class) pair: the worst outcome."""
        grouped: Dict[tuple, List[ClaimOutcome]] = {}
        for outcome, origin in zip(self.outcomes, self.origins):
            grouped.setdefault((outcome.claim_id, origin), []).append(outcome)
        rows = []
        for (claim_id, origin), outcomes in grouped.items():
            worst = max(outcomes, key=lambda o: o.verdict.severity)
            counts = _counts(outcomes)
            rows.append({
                "claim": claim_id,
                "class": origin,
                "verdict": worst.verdict.value,
                **counts,
                "witness": worst.witness.graph6 if worst.witness is not None else None,
            })
        return rows

    def to_dict(self) -> Dict[str, Any]:
        return {
            "run": {**self.run, "disclaimer": HOLDS_DISCLAIMER},
            "outcomes": [o.to_dict() for o in self.outcomes],
            "extremal": [e.to_dict() for e in self.extremal],
            "summary": self.summary,
            "claim_summaries": self.claim_summaries(),
            "class_summaries": self.class_summaries(),
            "shrunk": list(self.shrunk),
        }
