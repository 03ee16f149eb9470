"""Integer arithmetic: gcd, primality, factorization, Euler's totient and its iterates.

Everything is exact. Primality uses Miller-Rabin with a witness set that is
deterministic below ``MR_DETERMINISTIC_LIMIT``; a prime-looking cofactor at or
above that limit cannot be certified and raises ``OverflowError`` instead of
guessing.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DomainError

# bases 2..41 are a deterministic witness set for every n below this value
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

SIEVE_LIMIT = 1 << 21
_TRIAL_PRIMES_BELOW = 1000

_spf: np.ndarray | None = None
_spf_lock = threading.Lock()


def _smallest_prime_factors() -> np.ndarray:
    global _spf
    if _spf is None:
        with _spf_lock:
            if _spf is None:
                spf = np.zeros(SIEVE_LIMIT, dtype=np.int32)
                for p in range(2, math.isqrt(SIEVE_LIMIT - 1) + 1):
                    if spf[p] == 0:
                        block = spf[p * p :: p]
                        block[block == 0] = p
                        spf[p] = p
                unset = spf == 0
                spf[unset] = np.nonzero(unset)[0]
                spf.flags.writeable = False
                _spf = spf
    return _spf


def _small_primes() -> list[int]:
    spf = _smallest_prime_factors()
    return [p for p in range(2, _TRIAL_PRIMES_BELOW) if spf[p] == p]


def check_positive(n, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    return n


def check_nonneg(k, name: str = "k") -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise DomainError(f"{name} must be an integer, got {k!r}")
    k = int(k)
    if k < 0:
        raise DomainError(f"{name} must be >= 0, got {k}")
    return k


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise DomainError("gcd is defined here for non-negative integers")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def _miller_rabin(n: int) -> bool:
    """Strong probable-prime test to all of ``_MR_BASES``; n odd, n > 41."""
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    n = check_positive(n)
    if n < SIEVE_LIMIT:
        return n >= 2 and int(_smallest_prime_factors()[n]) == n
    for p in _small_primes():
        if n % p == 0:
            return False
    probable = _miller_rabin(n)
    if probable and n >= MR_DETERMINISTIC_LIMIT:
        raise OverflowError(f"cannot certify primality of {n}: beyond the deterministic range")
    return probable


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed on {n}")  # unreachable for composites


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, e1), (p2, e2), ...)`` with p1 < p2 < ..."""

    entries: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def value(self) -> int:
        out = 1
        for p, e in self.entries:
            out *= p**e
        return out


def _prime_factors(n: int, out: dict[int, int]) -> None:
    if n < SIEVE_LIMIT:
        spf = _smallest_prime_factors()
        while n > 1:
            p = int(spf[n])
            n //= p
            out[p] = out.get(p, 0) + 1
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _prime_factors(d, out)
    _prime_factors(n // d, out)


def factorize(n: int) -> Factorization:
    n = check_positive(n)
    counts: dict[int, int] = {}
    if n >= SIEVE_LIMIT:
        for p in _small_primes():
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                counts[p] = e
            if p * p > n:
                break
    if n > 1:
        _prime_factors(n, counts)
    return Factorization(tuple(sorted(counts.items())))


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n):
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def euler_phi(n: int) -> int:
    n = check_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def iterated_phi(n: int, k: int) -> int:
    """Apply the totient k times; iterated_phi(n, 0) == n."""
    n = check_positive(n)
    k = check_nonneg(k)
    for _ in range(k):
        if n == 1:
            break
        n = euler_phi(n)
    return n

