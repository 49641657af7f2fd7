"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class KoebeError(Exception):
    exit_code = 1


class InputError(KoebeError, ValueError):
    """Malformed document, invalid graph, violated precondition."""

    exit_code = 1


class ConvergenceError(KoebeError, RuntimeError):
    exit_code = 2


class BudgetExceeded(KoebeError, RuntimeError):
    """Exact search ran past its node-expansion budget."""

    exit_code = 3


class CertificateError(KoebeError, AssertionError):
    """A constructive certificate or a proof-derived assertion failed to verify."""

    exit_code = 4
