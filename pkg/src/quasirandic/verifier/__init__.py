"""Exhaustive verification at small order."""

from .canonical import canonical_form
from .enumeration import enumerate_connected_graphs, enumerate_labeled_trees, scan_connected
from .lemmas import (
    LEMMA_IDS,
    verify_deletion_step,
    verify_lemma2,
    verify_lemma3,
    verify_lemma4,
    verify_lemma5,
    verify_lemma6,
    verify_lemma7,
)
from .population import InputGraphError, Population
from .report import VerificationReport, reports_to_csv, reports_to_json
from .theorems import verify_lemma1, verify_theorem

__all__ = [
    "LEMMA_IDS",
    "InputGraphError",
    "Population",
    "VerificationReport",
    "canonical_form",
    "enumerate_connected_graphs",
    "enumerate_labeled_trees",
    "reports_to_csv",
    "reports_to_json",
    "scan_connected",
    "verify_deletion_step",
    "verify_lemma1",
    "verify_lemma2",
    "verify_lemma3",
    "verify_lemma4",
    "verify_lemma5",
    "verify_lemma6",
    "verify_lemma7",
    "verify_theorem",
]
