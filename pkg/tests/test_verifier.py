import pytest
from dataclasses import replace

from src.claims.exact import Verdict
from src.claims.model import GraphSubject, Witness
from src.claims.registry import evaluate, get_claim
from src.enumeration.graph_class import GraphClass
from src.generators.graph_families import generate_path
from src.graph.graph import is_path, is_star
from src.utils.errors import BudgetExceeded, InvalidParams, KindMismatch, NotAFailure, UnknownClaimId
from src.utils.helpers import canonical_json
from src.verifier import (
    extremal_scan,
    find_counterexamples,
    replay_witness,
    run_suite,
    shrink_counterexample,
    shrink_subject,
)
from src.verifier.report import HOLDS_DISCLAIMER
from src.verifier.runner import build_tasks


class TestExtremalScan:

    def test_trees_irr_extremes_have_unique_witnesses(self):
        result = extremal_scan(GraphClass.trees(6), "irr")
        assert (result.size, result.min_value, result.max_value) == (6, 2, 20)
        assert len(result.min_witnesses) == 1 and is_path(result.min_witnesses[0].graph)
        assert len(result.max_witnesses) == 1 and is_star(result.max_witnesses[0].graph)
        assert result.max_witnesses[0].certificate is not None

    @pytest.mark.parametrize("n", range(4, 11))
    def test_tree_extremes_by_order(self, n):
        irr = extremal_scan(GraphClass.trees(n), "irr")
        assert (irr.min_value, irr.max_value) == (2, (n - 1) * (n - 2))
        irr_t = extremal_scan(GraphClass.trees(n), "irr_t")
        assert (irr_t.min_value, irr_t.max_value) == (2 * (n - 2), (n - 1) * (n - 2))

    @pytest.mark.parametrize("n", range(4, 11))
    def test_tree_irr_witnesses_are_unique(self, n):
        irr = extremal_scan(GraphClass.trees(n), "irr")
        assert len(irr.min_witnesses) == 1 and is_path(irr.min_witnesses[0].graph)
        assert len(irr.max_witnesses) == 1 and is_star(irr.max_witnesses[0].graph)

    def test_sigma_on_trees(self):
        result = extremal_scan(GraphClass.trees(5), "sigma")
        assert result.max_value == 36
        assert result.min_value == 2

    def test_bipartite_class(self):
        result = extremal_scan(GraphClass.bipartite(2, 2), "irr")
        assert (result.min_value, result.max_value) == (0, 2)

    def test_bounded_degree_class(self):
        irr = extremal_scan(GraphClass.trees_maxdeg(7, 4), "irr")
        assert (irr.size, irr.min_value, irr.max_value) == (3, 12, 14)
        assert len(irr.min_witnesses) == 2
        assert extremal_scan(GraphClass.trees_maxdeg(7, 4), "sigma").min_value == 28

    def test_empty_class(self):
        result = extremal_scan(GraphClass.trees_maxdeg(4, 4), "irr")
        assert result.size == 0
        assert result.min_value is None and result.max_witnesses == ()

    def test_unknown_index(self):
        with pytest.raises(InvalidParams):
            extremal_scan(GraphClass.trees(4), "energy")

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            extremal_scan(GraphClass.trees(40), "irr")

    def test_row_and_dict(self):
        result = extremal_scan(GraphClass.trees(4), "irr")
        row = result.to_row()
        assert row["class"] == "TREES(4)"
        assert len(row["max_witnesses"].split()) == 1
        assert result.to_dict()["max"] == 6


class TestCounterexamples:

    def test_variance_bound_counterexamples(self):
        found = find_counterexamples(get_claim("C4"), [GraphClass.trees(5)])
        assert len(found) == 2
        assert all(o.verdict is Verdict.FAILS for o in found)
        assert len(find_counterexamples(get_claim("C4"), [GraphClass.trees(5)], limit=1)) == 1
        assert find_counterexamples(get_claim("C4"), [GraphClass.trees(5)], limit=0) == []

    def test_class_claim_counterexamples(self):
        corpus = [GraphClass.trees(n) for n in range(3, 7)]
        found = find_counterexamples(get_claim("C6"), corpus)
        assert [o.subject for o in found] == ["TREES(4)", "TREES(5)", "TREES(6)"]

    def test_holding_claim_has_none(self):
        assert find_counterexamples(get_claim("C1"), [GraphClass.trees(n) for n in range(2, 8)]) == []

    def test_shrink_star_to_claw(self, star5):
        smaller = shrink_counterexample(star5, get_claim("C4"))
        assert (smaller.n, smaller.m) == (4, 3)
        assert is_star(smaller)
        assert evaluate(get_claim("C4"), smaller).verdict is Verdict.FAILS

    def test_shrink_is_deterministic(self, star5):
        first = shrink_counterexample(star5, get_claim("C4"))
        second = shrink_counterexample(star5, get_claim("C4"))
        assert first == second

    def test_shrink_rejects_non_failures(self, path4):
        with pytest.raises(NotAFailure):
            shrink_subject(GraphSubject(path4), get_claim("C4"))
        with pytest.raises(KindMismatch):
            shrink_subject(GraphSubject(path4), get_claim("C6"))

    def test_replay_per_graph_witness(self, star5):
        outcome = evaluate(get_claim("C4"), star5)
        assert replay_witness(outcome) is Verdict.FAILS

    def test_replay_class_witness(self):
        for n in range(4, 8):
            outcome = evaluate(get_claim("C6"), GraphClass.trees(n))
            assert replay_witness(outcome) is Verdict.FAILS

    def test_replay_foreign_witness(self):
        outcome = evaluate(get_claim("C6"), GraphClass.trees(5))
        tampered = replace(outcome, witness=Witness.of(generate_path(6)))
        assert replay_witness(tampered) is Verdict.NOT_APPLICABLE

    def test_replay_needs_witness(self):
        outcome = evaluate(get_claim("C1"), GraphClass.trees(4))
        with pytest.raises(ValueError):
            replay_witness(replace(outcome, witness=None))


class TestRunSuite:

    def test_task_order(self, settings):
        tasks = build_tasks([GraphClass.trees(4), GraphClass.trees(5)], ["C6", "C13"], settings)
        assert [t.origin for t in tasks][:3] == ["TREES(4)"] * 3
        assert [t.claim_id for t in tasks[:3]] == ["C6", "C13", "C13"]
        with pytest.raises(UnknownClaimId):
            build_tasks([GraphClass.trees(4)], ["C0"], settings)
        with pytest.raises(BudgetExceeded):
            build_tasks([GraphClass.trees(40)], ["C1"], settings)

    def test_failures_and_summaries(self):
        corpus = [GraphClass.trees(n) for n in range(3, 6)]
        report = run_suite(corpus, ["C1", "C6"])
        assert report.has_failures
        assert [o.subject for o in report.failures()] == ["TREES(4)", "TREES(5)"]
        rows = {(r["claim"], r["class"]): r for r in report.class_summaries()}
        assert rows[("C6", "TREES(3)")]["verdict"] == "HOLDS"
        assert rows[("C6", "TREES(4)")]["verdict"] == "FAILS"
        assert rows[("C6", "TREES(4)")]["witness"] is not None
        statuses = {r["claim"]: r["status"] for r in report.claim_summaries()}
        assert statuses == {"C1": "holds on corpus", "C6": "refuted by witness"}

    def test_report_dict(self):
        report = run_suite([GraphClass.trees(4)], ["C1"])
        data = report.to_dict()
        assert data["run"]["disclaimer"] == HOLDS_DISCLAIMER
        assert data["run"]["corpus"] == ["TREES(4)"]
        assert data["run"]["seed"] is None
        assert [e["index"] for e in data["extremal"]] == ["irr", "sigma", "irr_t"]
        assert data["summary"] == {"holds": 1, "fails": 0, "na": 0, "marginal": 0}

    def test_random_classes_record_seeds(self):
        report = run_suite([GraphClass.random("tree-6", 3, 7)], ["C13"])
        assert report.run["seed"] == [7]
        assert len(report.outcomes) == 3
        assert report.extremal == []

    def test_not_applicable_everywhere(self):
        report = run_suite([GraphClass.trees(3)], ["C3"], extremal=False)
        assert report.claim_summaries()[0]["status"] == "not applicable anywhere in the corpus"

    def test_deterministic_output(self):
        corpus = [GraphClass.trees(n) for n in range(4, 7)] + [GraphClass.bipartite(2, 2)]
        first = canonical_json(run_suite(corpus, ["all"]).to_dict())
        second = canonical_json(run_suite(corpus, ["all"]).to_dict())
        assert first == second

    def test_workers_match_serial(self):
        corpus = [GraphClass.trees(n) for n in range(4, 8)]
        serial = run_suite(corpus, ["C4", "C6", "C13"], extremal=False)
        parallel = run_suite(corpus, ["C4", "C6", "C13"], workers=2, chunk_size=3, extremal=False)
        assert [o.to_dict() for o in parallel.outcomes] == [o.to_dict() for o in serial.outcomes]

    def test_shrink_first_failures(self):
        report = run_suite([GraphClass.trees(5)], ["C4"], shrink=True, extremal=False)
        assert len(report.shrunk) == 1
        entry = report.shrunk[0]
        assert entry["claim"] == "C4"
        shrunk = Witness(entry["shrunk"]["graph6"]).graph
        assert shrunk.n <= 5
        assert evaluate(get_claim("C4"), shrunk).verdict is Verdict.FAILS


@pytest.mark.slow
def test_sandwich_bound_never_fails():
    corpus = [GraphClass.trees(n) for n in range(2, 11)]
    corpus += [GraphClass.connected(n) for n in range(2, 8)]
    corpus += [GraphClass.bipartite(n1, n2) for n1 in range(1, 6) for n2 in range(1, 6) if n1 * n2 <= 20]
    assert find_counterexamples(get_claim("C26"), corpus) == []


BIPARTITE_BOUNDS = ["C20", "C22", "C23", "C24", "C25"]
DEGREE_BOUNDED = ["C9", "C10", "C11", "C15", "C16", "C17"]


@pytest.mark.slow
def test_bipartite_bounds_cover_every_class():
    sizes = [(n1, n2) for n1 in range(1, 21) for n2 in range(1, 21) if n1 * n2 <= 20]
    corpus = [GraphClass.bipartite(n1, n2, connected) for n1, n2 in sizes for connected in (False, True)]
    report = run_suite(corpus, BIPARTITE_BOUNDS, extremal=False)
    pairs = {(row["claim"], row["class"]) for row in report.class_summaries()}
    assert pairs == {(cid, gc.label) for cid in BIPARTITE_BOUNDS for gc in corpus}
    for outcome in report.outcomes:
        if outcome.verdict is Verdict.NOT_APPLICABLE:
            assert outcome.note, outcome.subject
        else:
            assert outcome.lhs is not None and outcome.rhs is not None, outcome.subject


@pytest.mark.slow
def test_degree_bounded_claims_over_every_class():
    corpus = [GraphClass.trees(n) for n in range(5, 11)]
    first = run_suite(corpus, DEGREE_BOUNDED, extremal=False)
    second = run_suite(corpus, DEGREE_BOUNDED, extremal=False)
    assert canonical_json(first.to_dict()) == canonical_json(second.to_dict())
    expected = {GraphClass.trees_maxdeg(n, d).label for n in range(5, 11) for d in range(2, n)}
    for claim_id in DEGREE_BOUNDED:
        subjects = {o.subject for o in first.outcomes if o.claim_id == claim_id}
        assert subjects == expected, claim_id
    for outcome in first.outcomes:
        if outcome.claim_id in ("C9", "C10") and outcome.subject.endswith((",2)", ",3)")):
            assert outcome.verdict is Verdict.NOT_APPLICABLE
        if outcome.verdict is not Verdict.NOT_APPLICABLE:
            assert outcome.lhs is not None and outcome.rhs is not None
