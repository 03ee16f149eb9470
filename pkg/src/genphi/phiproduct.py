"""gcd-corrected product expansions of phi(a_1 a_2 ... a_n).

Every expansion is built from the pair identity

    phi(ab) = phi(a) phi(b) g / phi(g),   g = gcd(a, b).

For n = 2^r values the list is merged as a balanced binary tree: level 0
pairs (a_1, a_2), (a_3, a_4), ...; level k >= 1 merges the adjacent blocks
of 2^k that start at positions i = 1 (mod 2^(k+1)). For n = 2^r m with m
odd, the m blocks of 2^r are each expanded that way, then block t is peeled
off the remaining blocks t+1 .. m-1 with one more gcd-ratio factor.

Evaluation multiplies in every phi and gcd before dividing by phi(gcd), and
every division must be exact; a remainder means a transcription bug and
raises ``InconsistencyError``.
"""
from __future__ import annotations

from math import prod
from typing import Sequence

from .arith import check_positive, euler_phi, gcd
from .errors import DomainError, InconsistencyError


class _Accumulator:
    def __init__(self) -> None:
        self.value = 1

    def times(self, x: int) -> None:
        self.value *= x

    def gcd_ratio(self, left: int, right: int) -> None:
        g = gcd(left, right)
        q, r = divmod(self.value * g, euler_phi(g))
        if r:
            raise InconsistencyError(f"non-exact division by phi(gcd({left}, {right}))")
        self.value = q


def _checked(values: Sequence[int]) -> list[int]:
    return [check_positive(v, "value") for v in values]


def phi_pair(a: int, b: int) -> int:
    acc = _Accumulator()
    acc.times(euler_phi(check_positive(a, "a")) * euler_phi(check_positive(b, "b")))
    acc.gcd_ratio(a, b)
    return acc.value


def _expand_pow2_block(a: Sequence[int], start: int, size: int, acc: _Accumulator) -> None:
    """Expand phi(a[start] ... a[start+size-1]) into acc; size = 2^r, r >= 1.

    Indices are 0-based here; start = 0 (mod size).
    """
    r = size.bit_length() - 1
    for i in range(start, start + size, 2):
        acc.times(euler_phi(a[i]) * euler_phi(a[i + 1]))
        acc.gcd_ratio(a[i], a[i + 1])
    for k in range(1, r):
        half = 1 << k
        for i in range(start, start + size, 2 * half):
            acc.gcd_ratio(prod(a[i : i + half]), prod(a[i + half : i + 2 * half]))


def _is_pow2(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def phi_product_pow2(values: Sequence[int]) -> int:
    a = _checked(values)
    if len(a) < 2 or not _is_pow2(len(a)):
        raise DomainError(f"list length must be a power of two >= 2, got {len(a)}")
    acc = _Accumulator()
    _expand_pow2_block(a, 0, len(a), acc)
    return acc.value


def split_length(n: int) -> tuple[int, int]:
    """Write n = 2^r * m with m odd; return (r, m)."""
    r = (n & -n).bit_length() - 1
    return r, n >> r


def phi_product_general(values: Sequence[int]) -> int:
    a = _checked(values)
    if not a:
        raise DomainError("phi_product_general needs at least one value")
    if len(a) == 1:
        return euler_phi(a[0])
    r, m = split_length(len(a))
    if m == 1:
        return phi_product_pow2(a)
    block = 1 << r
    acc = _Accumulator()
    for t in range(m):
        lo = t * block
        if r == 0:
            acc.times(euler_phi(a[lo]))
        else:
            _expand_pow2_block(a, lo, block, acc)
    for t in range(m):
        lo = t * block
        # empty remainder for t = m-1: gcd(x, 1) = 1 and the factor is 1
        acc.gcd_ratio(prod(a[lo : lo + block]), prod(a[lo + block :]))
    return acc.value
