"""Generalized Euler phi: phi^k(n) = |U^k(Z_n)|, its group structure, and related equations."""

__version__ = "0.1.0"

from .abgroup import CyclicDecomposition  # noqa: E402
from .arith import euler_phi, factorize, iterated_phi, is_prime  # noqa: E402
from .phik import phi_k  # noqa: E402
from .units import RingSpec, uk_decomposition  # noqa: E402

__all__ = [
    "CyclicDecomposition",
    "RingSpec",
    "euler_phi",
    "factorize",
    "is_prime",
    "iterated_phi",
    "phi_k",
    "uk_decomposition",
]
