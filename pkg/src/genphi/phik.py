"""Closed-form evaluation of the generalized totient phi^k(n) = |U^k(Z_n)|.

phi^k is multiplicative. On prime powers:

    phi^k(2^a) = 1                  if a < 2k
               = 2^(a - 2k + 1)     if a >= 2k

    phi^k(p^a) = phi^(k-1)(p-1) * prod_{i=k-a+1}^{k-1} phi^i(p)               if a < k
               = phi^(k-1)(p-1) * p^(a-k) * prod_{i=1}^{k-1} phi^i(p)          if a >= k

with phi^i(p) = phi^(i-1)(p-1) for odd p, and phi^0 the identity.
"""
from __future__ import annotations

from dataclasses import dataclass

from ._memo import memo
from .arith import check_nonneg, check_positive, factorize, is_prime
from .errors import DomainError


def phi_k(n: int, k: int) -> int:
    n = check_positive(n)
    k = check_nonneg(k)
    if k == 0:
        return n
    out = 1
    for p, alpha in factorize(n):
        out *= _phi_k_pp(p, alpha, k)
    return out


def phi_k_prime_power(p: int, alpha: int, k: int) -> int:
    p = check_positive(p, "p")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return _phi_k_pp(p, check_positive(alpha, "alpha"), check_positive(k, "k"))


@memo
def _phi_k_pp(p: int, alpha: int, k: int) -> int:
    if p == 2:
        return 1 if alpha < 2 * k else 2 ** (alpha - 2 * k + 1)
    out = phi_k(p - 1, k - 1)
    lo = k - alpha + 1 if alpha < k else 1
    for i in range(lo, k):
        out *= _phi_k_pp(p, 1, i)
    if alpha >= k:
        out *= p ** (alpha - k)
    return out


@dataclass(frozen=True)
class TraceTerm:
    """One factor of an expanded phi^k(n) evaluation."""

    label: str
    value: int


def phi_k_trace(n: int, k: int) -> list[TraceTerm]:
    """Factors of phi^k(n) in evaluation order, prime power by prime power.

    For an odd prime power the leading factor is phi^(k-1)(p-1), followed by
    the phi^i(p) factors and the p-power tail, so phi_k_trace(7000, 2) reads
    1, phi(4), phi(5), 5, phi(6).
    """
    n = check_positive(n)
    k = check_positive(k, "k")
    terms: list[TraceTerm] = []
    for p, alpha in factorize(n):
        if p == 2:
            terms.append(TraceTerm(f"phi^{k}(2^{alpha})", _phi_k_pp(2, alpha, k)))
            continue
        terms.append(TraceTerm(_label(k - 1, p - 1), phi_k(p - 1, k - 1)))
        lo = k - alpha + 1 if alpha < k else 1
        for i in range(k - 1, lo - 1, -1):
            terms.append(TraceTerm(_label(i, p), _phi_k_pp(p, 1, i)))
        if alpha > k:
            terms.append(TraceTerm(f"{p}^{alpha - k}" if alpha - k > 1 else str(p), p ** (alpha - k)))
    return terms


def _label(level: int, m: int) -> str:
    if level == 0:
        return str(m)
    if level == 1:
        return f"phi({m})"
    return f"phi^{level}({m})"
