"""Brute-force U^k oracle that does not use any closed form.

Units of Z_{m1} (+) ... (+) Z_{mr} are tuples of per-coordinate units, and
the order of a tuple is the lcm of the coordinate orders. Element-order
histograms are therefore built per coordinate by enumeration and merged by
lcm-convolution, which tallies exactly the same multiset as walking the
full product group. The group is then recovered from its order statistics,
given the ring structure Z_d on every cyclic factor Z_d, and the step repeats.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ._memo import memo
from .abgroup import CyclicDecomposition
from .arith import check_nonneg, check_positive, euler_phi, factorize, gcd, lcm
from .errors import BoundExceeded, InconsistencyError
from .units import RingSpec

DEFAULT_BOUND = 10**6


@dataclass(frozen=True)
class OrderProfile:
    total: int
    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))

    @property
    def exponent(self) -> int:
        return max(self.counts, default=1)

    def validate(self) -> None:
        if sum(self.counts.values()) != self.total or self.counts.get(1) != 1:
            raise InconsistencyError(f"not a group order profile: {self}")
        exp = self.exponent
        if any(exp % d for d in self.counts):
            raise InconsistencyError(f"element orders do not divide the exponent: {self}")


def multiplicative_order(u: int, m: int, phi_m: int, phi_primes: Iterable[int]) -> int:
    """Order of u in U(Z_m): strip prime factors from phi(m) while u^e stays 1."""
    e = phi_m
    for q in phi_primes:
        while e % q == 0 and pow(u, e // q, m) == 1:
            e //= q
    return e


@memo
def _coordinate_histogram(m: int) -> tuple[tuple[int, int], ...]:
    if m == 1:
        # the zero ring: 0 = 1 is its only unit
        return ((1, 1),)
    units = [u for u in range(1, m) if gcd(u, m) == 1]
    phi_m = len(units)
    primes = factorize(phi_m).primes
    hist = Counter(multiplicative_order(u, m, phi_m, primes) for u in units)
    return tuple(sorted(hist.items()))


def _lcm_convolve(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out: Counter = Counter()
    for da, ca in a.items():
        for db, cb in b.items():
            out[lcm(da, db)] += ca * cb
    return dict(out)


def enumerate_unit_orders(ring: RingSpec | Iterable[int], bound: int = DEFAULT_BOUND) -> OrderProfile:
    moduli = ring.moduli if isinstance(ring, RingSpec) else tuple(ring)
    expected = 1
    for m in moduli:
        expected *= euler_phi(m)
    if expected > bound:
        raise BoundExceeded(f"unit group of order {expected} exceeds bound {bound}")
    profile: dict[int, int] = {1: 1}
    for m in moduli:
        profile = _lcm_convolve(profile, dict(_coordinate_histogram(m)))
    total = sum(profile.values())
    if total != expected:
        raise InconsistencyError(f"enumerated {total} units, expected {expected}")
    return OrderProfile(total, profile)


def _prime_part_count(counts: Mapping[int, int], p: int, j: int) -> int:
    """Number of elements whose order divides p^j."""
    pj = p**j
    return sum(c for d, c in counts.items() if pj % d == 0)


def _exact_log(x: int, p: int) -> int:
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    if x != 1:
        raise InconsistencyError(f"{x * p**e} is not a power of {p}")
    return e


def structure_from_profile(profile: OrderProfile) -> CyclicDecomposition:
    """The unique abelian group with this element-order histogram.

    For each prime p, the number of elements of order dividing p^j is
    p^(sum_i min(l_i, j)); successive differences of the exponent count the
    cyclic p-factors of order at least p^j.
    """
    profile.validate()
    orders: list[int] = []
    for p, full in factorize(profile.total):
        prev, at_least = 0, []
        j = 0
        while prev < full:
            j += 1
            e = _exact_log(_prime_part_count(profile.counts, p, j), p)
            at_least.append(e - prev)
            prev = e
        if prev != full or any(a < b for a, b in zip(at_least, at_least[1:])):
            raise InconsistencyError(f"inconsistent {p}-part in {profile}")
        for j, (here, nxt) in enumerate(zip(at_least, at_least[1:] + [0]), start=1):
            orders.extend([p**j] * (here - nxt))
    group = CyclicDecomposition(orders)
    if profile_of(group) != profile:
        raise InconsistencyError(f"no abelian group has the profile {profile}")
    return group


def profile_of(group: CyclicDecomposition) -> OrderProfile:
    """Element-order histogram of a decomposition, computed combinatorially."""
    profile: dict[int, int] = {1: 1}
    for p, exps in group.by_prime().items():
        top = max(exps)
        below = [p ** sum(min(e, j) for e in exps) for j in range(top + 1)]
        part = {p**j: below[j] - below[j - 1] for j in range(1, top + 1)}
        part[1] = 1
        profile = _lcm_convolve(profile, part)
    return OrderProfile(group.order, profile)


def oracle_uk(n: int, k: int, bound: int = DEFAULT_BOUND) -> CyclicDecomposition:
    n = check_positive(n)
    k = check_nonneg(k)
    ring = RingSpec([n])
    group = ring.additive_group()
    for _ in range(k):
        group = structure_from_profile(enumerate_unit_orders(ring, bound))
        ring = RingSpec.from_group(group)
    return group


def oracle_phi_k(n: int, k: int, bound: int = DEFAULT_BOUND) -> int:
    return oracle_uk(n, k, bound).order
