"""Exception hierarchy shared by the kernels, series engines and verifiers."""
from typing import Any, Optional


class WrightLabError(Exception):
    """Base class for every error raised by the library."""


class DomainError(WrightLabError, ValueError):
    """An argument or parameter lies outside the documented domain."""


class PoleError(DomainError):
    """A gamma-type function was evaluated at a non-positive integer."""


class GammaOverflowError(WrightLabError, OverflowError):
    """Gamma of a large argument is not representable as a float."""


class SeriesConvergenceError(WrightLabError, ArithmeticError):
    """A power series did not meet its stopping rule within max_terms.

    The partial result is kept on the exception so callers can inspect
    how far the summation got.
    """

    def __init__(self, message: str, partial: Optional[Any] = None):
        super().__init__(message)
        self.partial = partial


class SeriesDivergenceError(DomainError):
    """A hypergeometric series was requested outside its disc of convergence."""


class QuadratureError(WrightLabError):
    """Adaptive quadrature failed to reach the requested tolerance."""

    def __init__(self, message: str, estimate: float = float('nan'),
                 abserr: float = float('nan')):
        super().__init__(message)
        self.estimate = estimate
        self.abserr = abserr


class TailBoundError(QuadratureError):
    """No truncation point keeps the discarded Laplace tail below tolerance."""


class ManifestError(WrightLabError):
    """A pair, limit or sweep manifest is unreadable or describes an invalid entry."""
