"""Solving and classifying phi^k(n) = Phi^k(n), phi^k(n) = 1 and U^2 cyclicity.

Each published classification is implemented as a predicate and compared
against direct enumeration by ``cross_verify``; disagreements are returned as
a ``DiscrepancyReport`` rather than corrected.

Conventions: n = 1 satisfies both equations (every quantity is 1), so every
classifier answers True for it. The k = 3 list "5, 10, 12, a divisor of 8,
2*3^a, or 2p" is implemented in two readings, selected by ``reading``:

  literal          {5, 10, 12} u divisors(8) u {2*3^a} u {2p}
  divisor-closed   divisors of 8, 10, 12, 2*3^a or 2p

The default is the reading with fewer enumeration mismatches up to 10^5
(divisor-closed: none).
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any, Callable

from . import __version__
from .arith import check_positive, factorize, is_prime, iterated_phi
from .errors import DomainError
from .oracle import DEFAULT_BOUND, oracle_uk
from .phik import phi_k
from .units import uk_closed_form, uk_decomposition

K3_READINGS = ("divisor-closed", "literal")
DEFAULT_K3_READING = "divisor-closed"

DEFAULT_SWEEP_MAX = 10**5
DEFAULT_INEQUALITY_MAX = 10**6
DEFAULT_AGREEMENT_MAX = 2000
DEFAULT_AGREEMENT_K = 4


def conventions(reading: str = DEFAULT_K3_READING) -> dict[str, str]:
    return {"n=1": "solution of every equation", "k3_reading": reading}


def is_solution_phik_eq_iphik(n: int, k: int) -> bool:
    check_positive(k, "k")
    return phi_k(n, k) == iterated_phi(n, k)


def _odd_prime_power(n: int) -> bool:
    f = factorize(n)
    return len(f) == 1 and f.primes[0] != 2


def is_2qb_plus_1_prime(p: int) -> bool:
    """p prime with p = 2 q^b + 1 for an odd prime q and b >= 1."""
    if p < 7 or not is_prime(p):
        return False
    return _odd_prime_power((p - 1) // 2)


def classify_k2(n: int) -> bool:
    n = check_positive(n)
    if n in (1, 2, 4):
        return True
    if n % 4 == 2:
        n //= 2
    return n > 1 and _odd_prime_power(n)


def _is_power_of_3(n: int) -> bool:
    while n % 3 == 0:
        n //= 3
    return n == 1


def classify_k3(n: int, reading: str = DEFAULT_K3_READING) -> bool:
    n = check_positive(n)
    if reading == "literal":
        if n in (5, 10, 12) or 8 % n == 0:
            return True
        if n % 2 or n == 2:
            return False
        half = n // 2
        return _is_power_of_3(half) or is_2qb_plus_1_prime(half)
    if reading == "divisor-closed":
        if 8 % n == 0 or 10 % n == 0 or 12 % n == 0:
            return True
        odd = n // 2 if n % 4 == 2 else n
        if n % 2 == 0 and n % 4 == 0:
            return False
        return _is_power_of_3(odd) or is_2qb_plus_1_prime(odd)
    raise DomainError(f"unknown k=3 reading {reading!r}; choose from {K3_READINGS}")


def classify_u2_cyclic(n: int) -> bool:
    """n divides 24p (p = 5 or p = 2q^a + 1), some 8 * 3^b, or 48."""
    n = check_positive(n)
    a = b = 0
    while n % 2 == 0:
        n //= 2
        a += 1
    while n % 3 == 0:
        n //= 3
        b += 1
    if n == 1:
        return a <= 3 or (a == 4 and b <= 1)
    return a <= 3 and b <= 1 and (n == 5 or is_2qb_plus_1_prime(n))


def enumerate_solutions(k: int, max_n: int) -> list[int]:
    check_positive(k, "k")
    return [n for n in range(1, check_positive(max_n, "max") + 1) if is_solution_phik_eq_iphik(n, k)]


def solve_phik_eq_one(k: int, max_n: int) -> list[int]:
    check_positive(k, "k")
    return [n for n in range(1, check_positive(max_n, "max") + 1) if phi_k(n, k) == 1]


@dataclass
class Mismatch:
    n: int
    enumerated: Any
    classifier: Any
    k: int | None = None
    detail: dict | None = None

    def to_dict(self) -> dict:
        return {key: value for key, value in asdict(self).items() if value is not None}


@dataclass
class DiscrepancyReport:
    equation: str
    bound: int
    mismatches: list[Mismatch] = field(default_factory=list)
    resolved_conventions: dict[str, str] = field(default_factory=dict)
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))
    version: str = __version__

    @property
    def agrees(self) -> bool:
        return not self.mismatches

    def to_dict(self, stable: bool = False) -> dict:
        out = {
            "equation": self.equation,
            "bound": self.bound,
            "mismatches": [m.to_dict() for m in self.mismatches],
            "resolved_conventions": dict(self.resolved_conventions),
            "timestamp": self.timestamp,
            "version": self.version,
        }
        if stable:
            del out["timestamp"]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "DiscrepancyReport":
        return cls(
            equation=data["equation"],
            bound=data["bound"],
            mismatches=[Mismatch(**m) for m in data["mismatches"]],
            resolved_conventions=data.get("resolved_conventions", {}),
            timestamp=data.get("timestamp", ""),
            version=data.get("version", __version__),
        )


def _sweep(tag: str, max_n: int, enumerated: Callable[[int], bool], claimed: Callable[[int], bool],
           reading: str = DEFAULT_K3_READING) -> DiscrepancyReport:
    report = DiscrepancyReport(tag, max_n, resolved_conventions=conventions(reading))
    for n in range(1, max_n + 1):
        e, c = enumerated(n), claimed(n)
        if e != c:
            report.mismatches.append(Mismatch(n, e, c))
    return report


def _implication_sweep(tag: str, max_n: int, premise: Callable[[int], bool],
                       conclusion: Callable[[int], bool]) -> DiscrepancyReport:
    report = DiscrepancyReport(tag, max_n, resolved_conventions=conventions())
    for n in range(1, max_n + 1):
        if premise(n) and not conclusion(n):
            report.mismatches.append(Mismatch(n, True, False))
    return report


def agreement_report(max_n: int = DEFAULT_AGREEMENT_MAX, max_k: int = DEFAULT_AGREEMENT_K,
                     bound: int = DEFAULT_BOUND) -> DiscrepancyReport:
    """Closed form vs generic iteration vs oracle, on phi^k(n) and on structure."""
    report = DiscrepancyReport("agreement", max_n, resolved_conventions={"max_k": str(max_k)})
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            oracle = oracle_uk(n, k, bound)
            iteration = uk_decomposition(n, k)
            closed = uk_closed_form(n, k)
            value = phi_k(n, k)
            if oracle == iteration == closed and value == oracle.order:
                continue
            report.mismatches.append(Mismatch(
                n, str(oracle), str(closed), k=k,
                detail={"iteration": str(iteration), "phi_k": value, "oracle_order": oracle.order,
                        "closed_form_order": closed.order},
            ))
    return report


def cross_verify(tag: str, max_n: int | None = None, *, max_k: int = DEFAULT_AGREEMENT_K,
                 bound: int = DEFAULT_BOUND) -> DiscrepancyReport:
    """Run one named comparison for every n <= max_n and return the mismatches.

    Tags: k2, k3, k3-literal, k3-divisor-closed, u2-cyclic, k2-u-cyclic,
    k3-u2-cyclic, gr-inequality, phik-one-k2, agreement.
    """
    if tag == "agreement":
        return agreement_report(max_n or DEFAULT_AGREEMENT_MAX, max_k, bound)
    if tag == "gr-inequality":
        max_n = max_n or DEFAULT_INEQUALITY_MAX
        report = DiscrepancyReport(tag, max_n, resolved_conventions=conventions())
        for n in range(1, max_n + 1):
            lhs, rhs = phi_k(n, 2), iterated_phi(n, 2)
            if lhs > rhs:
                report.mismatches.append(Mismatch(n, lhs, rhs, k=2))
        return report
    max_n = max_n or DEFAULT_SWEEP_MAX
    if tag == "k2":
        return _sweep(tag, max_n, lambda n: is_solution_phik_eq_iphik(n, 2), classify_k2)
    if tag in ("k3", "k3-literal", "k3-divisor-closed"):
        reading = DEFAULT_K3_READING if tag == "k3" else tag[3:]
        return _sweep(tag, max_n, lambda n: is_solution_phik_eq_iphik(n, 3),
                      lambda n: classify_k3(n, reading), reading)
    if tag == "u2-cyclic":
        return _sweep(tag, max_n, lambda n: uk_decomposition(n, 2).is_cyclic, classify_u2_cyclic)
    if tag == "k2-u-cyclic":
        return _sweep(tag, max_n, lambda n: is_solution_phik_eq_iphik(n, 2),
                      lambda n: uk_decomposition(n, 1).is_cyclic)
    if tag == "k3-u2-cyclic":
        return _implication_sweep(tag, max_n, lambda n: is_solution_phik_eq_iphik(n, 3),
                                  lambda n: uk_decomposition(n, 2).is_cyclic)
    if tag == "phik-one-k2":
        return _sweep(tag, max_n, lambda n: phi_k(n, 2) == 1, lambda n: 24 % n == 0)
    raise DomainError(f"unknown equation tag {tag!r}")


# (n, k, description, published value, computed value)
def _published_claims() -> list[tuple[int, int, str, Any, Any]]:
    from .phiproduct import phi_product_general

    return [
        (7000, 2, "phi^2(7000)", 80, phi_k(7000, 2)),
        (7000, 2, "Phi^2(7000)", 640, iterated_phi(7000, 2)),
        (1853280, 1, "phi(5*8*9*13*18*22) by block expansion", 414720,
         phi_product_general([5, 8, 9, 13, 18, 22])),
        (64, 3, "U^3(Z_64)", "Z2", str(uk_decomposition(64, 3))),
        (1080000, 3, "U^3(Z_1080000)", "Z2 x Z2 x Z2 x Z2 x Z4 x Z5", str(oracle_uk(1080000, 3, 10**7))),
        (1080000, 3, "phi^3(1080000)", 320, phi_k(1080000, 3)),
    ]


def published_claims_report() -> DiscrepancyReport:
    """Published worked values against this package's computations."""
    report = DiscrepancyReport("published", 1080000, resolved_conventions=conventions())
    for n, k, what, published, computed in _published_claims():
        if published != computed:
            report.mismatches.append(Mismatch(n, computed, published, k=k, detail={"claim": what}))
    return report
