"""Regenerate the golden data under tests/golden/.

    python scripts/regen_golden.py

Writes the k=3 discrepancy reports for both readings of the published
classification (n <= 10^5) and the solution sets of phi^k(n) = 1 for
k = 2, 3 (n <= 10^4). Timestamps are dropped so reruns are byte-identical.
"""
import json
from pathlib import Path

from genphi.equations import cross_verify, solve_phik_eq_one

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"
K3_BOUND = 10**5
ONE_BOUND = 10**4


def k3_reports() -> dict:
    return {
        tag: cross_verify(tag, K3_BOUND).to_dict(stable=True)
        for tag in ("k3-divisor-closed", "k3-literal")
    }


def phik_one_sets() -> dict:
    return {"bound": ONE_BOUND, "solutions": {str(k): solve_phik_eq_one(k, ONE_BOUND) for k in (2, 3)}}


def dump(obj, path: Path) -> None:
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    dump(k3_reports(), GOLDEN / "k3_reports.json")
    dump(phik_one_sets(), GOLDEN / "phik_one.json")
    print(f"wrote {GOLDEN}")
