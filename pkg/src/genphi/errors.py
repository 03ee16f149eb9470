"""Exception types shared by the package; the CLI maps each to an exit code."""


class DomainError(ValueError):
    """Bad input: n = 0, a non-prime where a prime is required, and so on."""


class BoundExceeded(RuntimeError):
    """A brute-force computation would enumerate more elements than allowed."""


class InconsistencyError(ArithmeticError):
    """Two routes that must agree did not (e.g. a non-exact division)."""
