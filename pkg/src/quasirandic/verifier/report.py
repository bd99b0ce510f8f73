"""Verification reports and their JSON / CSV serialisations."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Iterable

FIELDS = (
    "case", "population_size", "bound", "observed_extremum", "gap",
    "extremal_multisets", "extremal_canonical_graphs", "predicted_family_matched",
    "uniqueness_confirmed", "counterexamples", "passed", "notes",
)


@dataclass
class VerificationReport:
    case: dict[str, Any]
    population_size: int
    bound: float | None
    observed_extremum: float | None
    gap: float | None
    extremal_multisets: list[list[int]] = field(default_factory=list)
    extremal_canonical_graphs: list[str] = field(default_factory=list)
    predicted_family_matched: bool = False
    uniqueness_confirmed: bool = False
    counterexamples: list[str] = field(default_factory=list)
    passed: bool = False
    notes: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        out = {name: getattr(self, name) for name in FIELDS}
        if self.details:
            out["details"] = self.details
        return out

    def summary(self) -> str:
        c = self.case
        label = " ".join(f"{k}={v}" for k, v in c.items())
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {label} bound={self.bound} observed={self.observed_extremum} population={self.population_size}"


def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps({"reports": [r.to_dict() for r in reports]}, indent=2)


CSV_HEADER = ("case_id", "n", "k", "alpha") + FIELDS[1:]


def _cell(value: Any) -> Any:
    if isinstance(value, list):
        return ";".join(" ".join(map(str, v)) if isinstance(v, list) else str(v) for v in value)
    if value is None:
        return ""
    return value


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        c = r.case
        w.writerow(
            [c.get("id"), c.get("n"), c.get("k", ""), c.get("alpha", "")]
            + [_cell(getattr(r, name)) for name in FIELDS[1:]]
        )
    return buf.getvalue()
