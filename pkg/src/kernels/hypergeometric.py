"""Generalized hypergeometric series pFq for real parameters and argument."""
import math
from typing import Optional, Sequence

from src.kernels.series import SeriesEval, SeriesSettings, sum_finite, sum_series
from src.utils.errors import DomainError, PoleError, SeriesDivergenceError


def _non_positive_integer(a: float) -> bool:
    return a <= 0 and a == math.floor(a)


def terminating_degree(upper: Sequence[float]) -> Optional[int]:
    """Degree of the polynomial when an upper parameter is a non-positive integer."""
    degrees = [int(-a) for a in upper if _non_positive_integer(a)]
    return min(degrees) if degrees else None


def _check_lower(lower: Sequence[float], degree: Optional[int]) -> None:
    for b in lower:
        if _non_positive_integer(b) and (degree is None or int(-b) < degree):
            raise PoleError(f"Lower hypergeometric parameter {b:g} hits a pole before termination")


def hyp_series(upper: Sequence[float], lower: Sequence[float], z: float,
               settings: Optional[SeriesSettings] = None,
               reverse: bool = False) -> SeriesEval:
    """
    Sum pFq(upper; lower; z) = Σ (a)_k.../(b)_k... z^k/k!.

    Terminating series are summed in full, forward or in reverse order.
    Otherwise the generic stopping rule applies.

    Args:
        upper (Sequence[float]): Upper parameters
        lower (Sequence[float]): Lower parameters
        z (float): Argument
        settings (Optional[SeriesSettings]): Series tolerances
        reverse (bool): Accumulate a terminating series from its last term

    Returns:
        SeriesEval: Series value and diagnostics
    """
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"Hypergeometric argument must be finite, got {z}")
    degree = terminating_degree(upper)
    _check_lower(lower, degree)

    def ratio(k: int) -> float:
        num = 1.0
        for a in upper:
            num *= a + k
        den = float(k + 1)
        for b in lower:
            den *= b + k
        return num / den * z

    if degree is not None:
        values = [1.0]
        for k in range(degree):
            values.append(values[-1] * ratio(k))
        return sum_finite(values, reverse=reverse)

    state = {'term': 1.0}

    def term(k: int):
        if k > 0:
            state['term'] *= ratio(k - 1)
        current = state['term']
        return current, abs(current)

    label = f"{len(upper)}F{len(lower)}"
    return sum_series(term, settings, label=label)


def hyp0f1(b: float, z: float, settings: Optional[SeriesSettings] = None) -> float:
    """₀F₁(; b; z)."""
    return hyp_series([], [b], z, settings).value


def hyp1f1(a: float, b: float, z: float, settings: Optional[SeriesSettings] = None) -> float:
    """
    Confluent hypergeometric ₁F₁(a; b; z).

    Negative arguments go through Kummer's transformation
    ₁F₁(a; b; z) = e^z ₁F₁(b - a; b; -z) unless the series terminates.

    Args:
        a (float): Upper parameter
        b (float): Lower parameter
        z (float): Argument

    Returns:
        float: ₁F₁(a; b; z)
    """
    if z < 0 and terminating_degree([a]) is None:
        return math.exp(z) * hyp_series([b - a], [b], -z, settings).value
    return hyp_series([a], [b], z, settings).value


def hyp2f1(a: float, b: float, c: float, z: float,
           settings: Optional[SeriesSettings] = None,
           reverse: bool = False) -> float:
    """
    Gauss hypergeometric ₂F₁(a, b; c; z).

    Args:
        a (float): First upper parameter
        b (float): Second upper parameter
        c (float): Lower parameter
        z (float): Argument, |z| < 1 unless a or b is a non-positive integer
        reverse (bool): Reverse accumulation for terminating series

    Returns:
        float: ₂F₁(a, b; c; z)
    """
    if terminating_degree([a, b]) is None and abs(z) >= 1.0:
        raise SeriesDivergenceError(
            f"2F1({a:g}, {b:g}; {c:g}; z) diverges for |z| >= 1, got z={z:g}")
    return hyp_series([a, b], [c], z, settings, reverse=reverse).value
