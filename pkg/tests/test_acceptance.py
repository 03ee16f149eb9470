"""One test (or a small group) per acceptance criterion, at the stated bounds.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints a
PASS/FAIL line per criterion.
"""
import json
import random
import time
from math import prod
from pathlib import Path

import pytest

from genphi import manifest
from genphi.abgroup import CyclicDecomposition
from genphi.arith import divisors, euler_phi, factorize, is_prime, iterated_phi
from genphi.equations import (
    K3_READINGS,
    classify_k2,
    classify_u2_cyclic,
    cross_verify,
    enumerate_solutions,
    published_claims_report,
    solve_phik_eq_one,
)
from genphi.oracle import oracle_uk
from genphi.phik import phi_k, phi_k_trace
from genphi.phiproduct import phi_product_general
from genphi.units import uk_decomposition

GOLDEN = Path(__file__).parent / "golden"


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


@pytest.mark.criterion("AC1 golden worked values")
@pytest.mark.parametrize("compute, expected", [
    (lambda: phi_k(7000, 2), 80),
    (lambda: iterated_phi(7000, 2), 640),
    (lambda: phi_product_general([5, 8, 9, 13, 18, 22]), 414720),
])
def test_ac1_golden_values(compute, expected):
    value, seconds = timed(compute)
    assert value == expected
    assert seconds < 1


@pytest.mark.criterion("AC1 golden worked values")
def test_ac1_trace():
    trace, seconds = timed(phi_k_trace, 7000, 2)
    assert [t.label for t in trace] == ["phi^2(2^3)", "phi(4)", "phi(5)", "5", "phi(6)"]
    assert [t.value for t in trace] == [1, 2, 4, 5, 2]
    assert seconds < 1


@pytest.mark.criterion("AC2 U^3(Z_1080000) three-way verdict")
def test_ac2_example_adjudication():
    oracle, seconds = timed(oracle_uk, 1080000, 3, 10**7)
    assert seconds < 60
    iteration, value = uk_decomposition(1080000, 3), phi_k(1080000, 3)
    assert oracle == iteration
    assert oracle.order == value == 160
    assert oracle == CyclicDecomposition([2, 2, 2, 4, 5])
    assert oracle.order != 320  # the published order
    report = published_claims_report()
    ids = {manifest.explain(report, m) for m in report.mismatches if m.n == 1080000}
    assert ids == {"example-u3-z1080000"}
    assert "example-u3-z1080000" in {e.id for e in manifest.load()}


@pytest.mark.criterion("AC3 closed form, iteration and oracle agree for n<=2000, k<=4")
def test_ac3_triple_agreement():
    report, seconds = timed(cross_verify, "agreement", 2000, max_k=4)
    assert seconds <= 300
    assert manifest.unregistered(report) == []
    for m in report.mismatches:
        # only the 2-power closed-form structure is off; every order agrees
        assert m.detail["iteration"] == m.enumerated
        assert m.detail["phi_k"] == m.detail["oracle_order"] == m.detail["closed_form_order"]


@pytest.mark.criterion("AC4 phi^2 <= Phi^2 for n<=10^6")
def test_ac4_inequality():
    report, seconds = timed(cross_verify, "gr-inequality", 10**6)
    assert seconds <= 180
    assert report.mismatches == []


@pytest.mark.criterion("AC5 k=2 classifier and U cyclicity for n<=10^5")
def test_ac5_k2_sweep():
    solutions = enumerate_solutions(2, 10**5)
    assert solutions == [n for n in range(1, 10**5 + 1) if classify_k2(n)]
    assert cross_verify("k2-u-cyclic", 10**5).mismatches == []


@pytest.mark.criterion("AC6 U^2 cyclicity classifier for n<=10^5")
def test_ac6_u2_cyclic():
    bad = [n for n in range(1, 10**5 + 1) if classify_u2_cyclic(n) != uk_decomposition(n, 2).is_cyclic]
    assert bad == []


@pytest.mark.criterion("AC7 k=3 readings against golden reports, U^2 cyclic")
def test_ac7_k3_sweep():
    golden = json.loads((GOLDEN / "k3_reports.json").read_text())
    for reading in K3_READINGS:
        tag = f"k3-{reading}"
        report = cross_verify(tag, 10**5)
        assert report.to_dict(stable=True) == golden[tag]
        assert manifest.unregistered(report) == []
    literal = {m["n"] for m in golden["k3-literal"]["mismatches"]}
    assert {3, 9, 27, 81, 243} <= literal
    solutions = enumerate_solutions(3, 10**5)
    assert [n for n in solutions if not uk_decomposition(n, 2).is_cyclic] == []


def _solves(n, k):
    return phi_k(n, k) == iterated_phi(n, k)


@pytest.mark.criterion("AC8 structure of the solution sets")
def test_ac8_powers_of_two():
    assert [a for a in range(1, 200) if _solves(2**a, 2)] == [1, 2]
    assert [a for a in range(1, 200) if _solves(2**a, 3)] == [1, 2, 3]


@pytest.mark.criterion("AC8 structure of the solution sets")
def test_ac8_two_odd_primes_never_solve_k2():
    multi = [n for n in range(1, 10**5 + 1) if sum(p > 2 for p in factorize(n).primes) >= 2]
    assert [n for n in multi if _solves(n, 2)] == []


@pytest.mark.criterion("AC8 structure of the solution sets")
def test_ac8_odd_prime_k3_forms():
    def allowed(m):
        if m in (2, 4):
            return True
        f = factorize(m // 2 if m % 2 == 0 else m)
        return len(f) == 1 and f.primes[0] > 2 and m % 4 != 0

    primes = [p for p in range(3, 10**4 + 1) if is_prime(p) and _solves(p, 3)]
    assert primes
    assert [p for p in primes if not allowed(p - 1)] == []


@pytest.mark.criterion("AC9 product expansion on 10^4 random lists")
def test_ac9_product_formula():
    rng = random.Random(9)
    start = time.perf_counter()
    for _ in range(10**4):
        values = [rng.randint(1, 60) for _ in range(rng.randint(1, 12))]
        expected = euler_phi(prod(values))
        assert phi_product_general(values) == expected
        shuffled = values[:]
        rng.shuffle(shuffled)
        assert phi_product_general(shuffled) == expected
    assert time.perf_counter() - start <= 60


@pytest.mark.criterion("AC10 phi^k(n) = 1 golden sets")
def test_ac10_phik_one():
    golden = json.loads((GOLDEN / "phik_one.json").read_text())
    bound = golden["bound"]
    for k in (2, 3):
        assert solve_phik_eq_one(k, bound) == golden["solutions"][str(k)]
    assert golden["solutions"]["2"] == divisors(24)
    assert cross_verify("phik-one-k2", bound).mismatches == []
