"""Corpus-wide claim verification."""
from src.verifier.counterexamples import (
    find_counterexamples,
    replay_witness,
    shrink_counterexample,
    shrink_subject,
)
from src.verifier.extremal import ExtremalResult, extremal_scan
from src.verifier.report import Report
from src.verifier.runner import run_suite

__all__ = [
    'ExtremalResult', 'Report', 'extremal_scan', 'find_counterexamples',
    'replay_witness', 'run_suite', 'shrink_counterexample', 'shrink_subject',
]
