"""The checked-in list of published statements the oracle contradicts.

``verify`` treats a mismatch as expected only if one of these entries
claims it; each entry names a rule implemented below.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from importlib import resources
from typing import Callable

from .abgroup import CyclicDecomposition, parse
from .equations import DiscrepancyReport, Mismatch, classify_k3
from .units import uk_closed_form


@dataclass(frozen=True)
class Entry:
    id: str
    suite: str
    rule: str
    claim: str
    finding: str


@cache
def load() -> tuple[Entry, ...]:
    text = resources.files("genphi").joinpath("data/known_discrepancies.json").read_text()
    return tuple(Entry(**e) for e in json.loads(text)["entries"])


def _pow2_closed_form_structure(report: DiscrepancyReport, m: Mismatch) -> bool:
    if report.equation != "agreement" or m.k is None or not m.detail:
        return False
    a = (m.n & -m.n).bit_length() - 1
    if 2 * m.k >= a:
        return False
    odd_part = uk_closed_form(m.n >> a, m.k)
    expected = odd_part * CyclicDecomposition([2, 2 ** (a - 2 * m.k)])
    return (
        parse(m.enumerated) == expected
        and m.detail["iteration"] == m.enumerated
        and m.detail["phi_k"] == m.detail["oracle_order"] == m.detail["closed_form_order"]
    )


def _published_example(report: DiscrepancyReport, m: Mismatch) -> bool:
    return report.equation == "published" and m.n == 1080000 and m.k == 3


def _k3_literal(report: DiscrepancyReport, m: Mismatch) -> bool:
    return (
        report.equation == "k3-literal"
        and m.enumerated is True
        and m.classifier is False
        and classify_k3(m.n, "divisor-closed")
    )


RULES: dict[str, Callable[[DiscrepancyReport, Mismatch], bool]] = {
    "pow2-closed-form-structure": _pow2_closed_form_structure,
    "published-example-u3-1080000": _published_example,
    "k3-literal-omissions": _k3_literal,
}


def explain(report: DiscrepancyReport, m: Mismatch) -> str | None:
    """Id of the manifest entry covering this mismatch, or None."""
    for entry in load():
        if RULES[entry.rule](report, m):
            return entry.id
    return None


def unregistered(report: DiscrepancyReport) -> list[Mismatch]:
    return [m for m in report.mismatches if explain(report, m) is None]
