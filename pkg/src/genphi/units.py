"""The k-th group of units U^k(Z_n), computed two ways.

Generic iteration: Z_n is split by CRT into prime-power rings; U of each
prime-power ring is given the ring structure

    U(Z_{p^a}) = Z_{p^(a-1)} (+) Z_{p-1}         (p odd)
    U(Z_{2^a}) = Z_2 (+) Z_{2^(a-2)}  (a >= 3),  Z_2 (a = 2),  0 (a = 1)

re-split into prime powers, and the step is repeated.

Closed form: the per-prime-power case analysis for U^k(Z_{p^a}), transcribed
as published. Its p = 2 branch names a cyclic group where the iteration
gives Z_2 x Z_{2^(a-2k)}; the orders agree, the structures do not.
``closed_form_discrepancies`` reports those cases instead of patching them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._memo import memo
from .abgroup import CyclicDecomposition, direct_product
from .arith import check_nonneg, check_positive, factorize, is_prime
from .errors import DomainError


@dataclass(frozen=True, init=False)
class RingSpec:
    """The ring Z_{m1} (+) Z_{m2} (+) ..., stored CRT-split and sorted."""

    moduli: tuple[int, ...]

    def __init__(self, moduli: Iterable[int] = ()):
        split = []
        for m in moduli:
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise DomainError(f"moduli must be positive integers, got {m!r}")
            split.extend(p**e for p, e in factorize(m))
        object.__setattr__(self, "moduli", tuple(sorted(split)))

    @property
    def size(self) -> int:
        out = 1
        for m in self.moduli:
            out *= m
        return out

    def additive_group(self) -> CyclicDecomposition:
        return CyclicDecomposition(self.moduli)

    @classmethod
    def from_group(cls, group: CyclicDecomposition) -> "RingSpec":
        """Each cyclic factor Z_d carries the ring Z_d."""
        return cls(group.orders)


def _check_prime(p: int) -> int:
    p = check_positive(p, "p")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return p


def ring_of_Zn(n: int) -> RingSpec:
    return RingSpec([check_positive(n)])


def unit_ring_of_prime_power(p: int, alpha: int) -> RingSpec:
    p = _check_prime(p)
    alpha = check_positive(alpha, "alpha")
    return _unit_ring(p, alpha)


@memo
def _unit_ring(p: int, alpha: int) -> RingSpec:
    if p == 2:
        if alpha == 1:
            return RingSpec()
        if alpha == 2:
            return RingSpec([2])
        return RingSpec([2, 2 ** (alpha - 2)])
    return RingSpec([p ** (alpha - 1), p - 1])


def units_step(r: RingSpec) -> RingSpec:
    moduli: list[int] = []
    for q in r.moduli:
        ((p, e),) = factorize(q).entries
        moduli.extend(_unit_ring(p, e).moduli)
    return RingSpec(moduli)


@memo
def _uk_prime_power(p: int, alpha: int, k: int) -> RingSpec:
    ring = RingSpec([p**alpha])
    for _ in range(k):
        if not ring.moduli:
            break
        ring = units_step(ring)
    return ring


def uk_ring(n: int, k: int) -> RingSpec:
    """U^k(Z_n) with its ring structure."""
    n = check_positive(n)
    k = check_nonneg(k)
    moduli: list[int] = []
    for p, e in factorize(n):
        moduli.extend(_uk_prime_power(p, e, k).moduli)
    return RingSpec(moduli)


def uk_decomposition(n: int, k: int) -> CyclicDecomposition:
    """Group structure of U^k(Z_n) by generic iteration; k = 0 gives (Z_n, +)."""
    return uk_ring(n, k).additive_group()


def uk_prime_power_closed_form(p: int, alpha: int, k: int) -> CyclicDecomposition:
    p = _check_prime(p)
    alpha = check_positive(alpha, "alpha")
    k = check_positive(k, "k")
    return _closed_form(p, alpha, k)


@memo
def _closed_form(p: int, alpha: int, k: int) -> CyclicDecomposition:
    if p == 2:
        if 2 * k > alpha:
            return CyclicDecomposition()
        if 2 * k == alpha:
            return CyclicDecomposition([2])
        return CyclicDecomposition([2 ** (alpha - 2 * k + 1)])
    # U^i(Z_p) for i from k down to max(k - alpha + 1, 1); U^i(Z_p) = U^(i-1)(Z_{p-1})
    parts = [uk_decomposition(p - 1, i - 1) for i in range(max(k - alpha + 1, 1), k + 1)]
    if k < alpha:
        parts.append(CyclicDecomposition([p ** (alpha - k)]))
    return direct_product(parts)


def uk_closed_form(n: int, k: int) -> CyclicDecomposition:
    """Closed-form U^k(Z_n): product of the prime-power closed forms."""
    n = check_positive(n)
    k = check_nonneg(k)
    if k == 0:
        return CyclicDecomposition([n])
    return direct_product(_closed_form(p, e, k) for p, e in factorize(n))


@dataclass(frozen=True)
class StructureMismatch:
    n: int
    k: int
    iteration: CyclicDecomposition
    closed_form: CyclicDecomposition

    @property
    def orders_agree(self) -> bool:
        return self.iteration.order == self.closed_form.order


def closed_form_discrepancies(max_n: int, max_k: int) -> list[StructureMismatch]:
    """Every (n, k) with n <= max_n, 1 <= k <= max_k where the two routes differ."""
    out = []
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            it, cf = uk_decomposition(n, k), uk_closed_form(n, k)
            if it != cf:
                out.append(StructureMismatch(n, k, it, cf))
    return out
