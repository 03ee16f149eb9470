"""Finite abelian groups up to isomorphism, stored as multisets of cyclic orders.

A ``CyclicDecomposition`` always holds its primary form (prime-power orders,
ascending), so structural equality is isomorphism.
"""
from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Union

from .arith import factorize
from .errors import DomainError

TRIVIAL_TEXT = "{0}"


def _primary_orders(orders: Iterable[int]) -> tuple[int, ...]:
    out = []
    for m in orders:
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise DomainError(f"cyclic orders must be positive integers, got {m!r}")
        out.extend(p**e for p, e in factorize(m))
    return tuple(sorted(out))


@dataclass(frozen=True, init=False)
class CyclicDecomposition:
    orders: tuple[int, ...]

    def __init__(self, orders: Iterable[int] = ()):
        # Z_1 factors are dropped: they are the trivial group
        object.__setattr__(self, "orders", _primary_orders(orders))

    @property
    def order(self) -> int:
        out = 1
        for m in self.orders:
            out *= m
        return out

    def by_prime(self) -> dict[int, list[int]]:
        """Map each prime to the ascending exponents of its cyclic factors."""
        parts: dict[int, list[int]] = defaultdict(list)
        for q in self.orders:
            ((p, e),) = factorize(q).entries
            parts[p].append(e)
        return dict(parts)

    def invariant_factors(self) -> tuple[int, ...]:
        parts = self.by_prime()
        width = max((len(v) for v in parts.values()), default=0)
        factors = [1] * width
        for p, exps in parts.items():
            # largest exponents go to the largest invariant factors
            for i, e in enumerate(reversed(exps)):
                factors[width - 1 - i] *= p**e
        return tuple(factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors()) <= 1

    def __mul__(self, other: "CyclicDecomposition") -> "CyclicDecomposition":
        return CyclicDecomposition(self.orders + other.orders)

    def __str__(self) -> str:
        return render(self.orders)

    def to_json(self) -> list[int]:
        return list(self.orders)


Decomp = Union[CyclicDecomposition, Iterable[int]]


def as_decomposition(d: Decomp) -> CyclicDecomposition:
    return d if isinstance(d, CyclicDecomposition) else CyclicDecomposition(d)


def direct_product(parts: Iterable[Decomp]) -> CyclicDecomposition:
    orders: list[int] = []
    for d in parts:
        orders.extend(as_decomposition(d).orders)
    return CyclicDecomposition(orders)


def canonical_primary(d: Decomp) -> CyclicDecomposition:
    return as_decomposition(d)


def invariant_factors(d: Decomp) -> tuple[int, ...]:
    return as_decomposition(d).invariant_factors()


def group_order(d: Decomp) -> int:
    return as_decomposition(d).order


def is_cyclic(d: Decomp) -> bool:
    return as_decomposition(d).is_cyclic


def iso_eq(a: Decomp, b: Decomp) -> bool:
    return as_decomposition(a) == as_decomposition(b)


def render(orders: Iterable[int]) -> str:
    orders = list(orders)
    if not orders:
        return TRIVIAL_TEXT
    return " x ".join(f"Z{m}" for m in orders)


_FACTOR = re.compile(r"^Z_?\{?(\d+)\}?$")


def parse(text: str) -> CyclicDecomposition:
    """Inverse of ``str()``; also accepts mixed forms such as ``Z2 x Z20``."""
    text = text.strip()
    if text in (TRIVIAL_TEXT, "1", "0", "trivial", ""):
        return CyclicDecomposition()
    orders = []
    for token in re.split(r"\s*[x×*]\s*", text):
        m = _FACTOR.match(token.strip())
        if m is None:
            raise DomainError(f"cannot parse cyclic factor {token!r}")
        orders.append(int(m.group(1)))
    return CyclicDecomposition(orders)


def from_json(data: str | list) -> CyclicDecomposition:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list):
        raise DomainError("decomposition JSON must be an array of orders")
    return CyclicDecomposition(data)
