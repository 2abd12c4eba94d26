"""Truncated power-series summation with diagnostics."""
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

from src.utils.config import DEFAULTS
from src.utils.errors import DomainError, SeriesConvergenceError
from src.utils.logger import setup_logger
from src.utils.summation import CompensatedSum

# term(k) -> (signed value, magnitude envelope used by the stopping rule).
# An envelope of None marks a structural zero that the rule skips.
TermFunction = Callable[[int], Tuple[float, Optional[float]]]

logger = setup_logger('SeriesSum')


@dataclass(frozen=True)
class SeriesSettings:
    rel_tol: float = DEFAULTS['series']['rel_tol']
    abs_tol: float = DEFAULTS['series']['abs_tol']
    max_terms: int = DEFAULTS['series']['max_terms']
    consecutive_small_terms: int = DEFAULTS['series']['consecutive_small_terms']
    max_cancellation_digits: float = DEFAULTS['series']['max_cancellation_digits']

    def __post_init__(self):
        if self.rel_tol < 0 or self.abs_tol < 0:
            raise DomainError("Series tolerances must be non-negative")
        if self.rel_tol == 0 and self.abs_tol == 0:
            raise DomainError("At least one series tolerance must be positive")
        if self.max_terms < 1 or self.consecutive_small_terms < 1:
            raise DomainError("max_terms and consecutive_small_terms must be positive")
        if self.max_cancellation_digits <= 0:
            raise DomainError("max_cancellation_digits must be positive")

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> 'SeriesSettings':
        section = config.get('series', {})
        return cls(
            rel_tol=float(section.get('rel_tol', cls.rel_tol)),
            abs_tol=float(section.get('abs_tol', cls.abs_tol)),
            max_terms=int(section.get('max_terms', cls.max_terms)),
            consecutive_small_terms=int(section.get('consecutive_small_terms',
                                                    cls.consecutive_small_terms)),
            max_cancellation_digits=float(section.get('max_cancellation_digits',
                                                      cls.max_cancellation_digits)),
        )


DEFAULT_SETTINGS = SeriesSettings()


@dataclass(frozen=True)
class SeriesEval:
    """A series value with its truncation diagnostics."""
    value: float
    terms_used: int
    last_term_magnitude: float
    converged: bool
    max_term_magnitude: float = 0.0

    def __float__(self) -> float:
        return self.value

    @property
    def cancellation_digits(self) -> float:
        """Decimal digits lost to cancellation between the largest term and the sum."""
        return lost_digits(self.max_term_magnitude, self.value)


def lost_digits(max_term: float, value: float) -> float:
    """log10(max_term / |value|), 0 for an all-zero series and inf when nonzero terms cancel to 0."""
    if max_term == 0:
        return 0.0
    if value == 0:
        return math.inf
    return max(0.0, math.log10(max_term / abs(value)))


def sum_series(term: TermFunction,
               settings: Optional[SeriesSettings] = None,
               label: str = 'series') -> SeriesEval:
    """
    Sum term(0) + term(1) + ... until the stopping rule fires.

    The rule needs ``consecutive_small_terms`` envelopes in a row that are
    below abs_tol + rel_tol * |partial sum| and not larger than the envelope
    before them. Terms whose envelope is None are added but neither extend
    nor reset the run. Accumulation is compensated.

    A sum that stops but has lost more than ``max_cancellation_digits``
    digits to cancellation is returned with ``converged=False``.

    Args:
        term (TermFunction): Maps k to (value, envelope)
        settings (Optional[SeriesSettings]): Tolerances and term budget
        label (str): Name used in error messages

    Returns:
        SeriesEval: Summed value with diagnostics
    """
    settings = settings or DEFAULT_SETTINGS
    acc = CompensatedSum()
    small_run = 0
    previous_envelope = math.inf
    last_envelope = math.inf
    max_magnitude = 0.0

    for k in range(settings.max_terms):
        value, envelope = term(k)
        acc.add(value)
        max_magnitude = max(max_magnitude, abs(value))
        if envelope is None:
            continue

        threshold = settings.abs_tol + settings.rel_tol * abs(acc.value)
        if envelope <= threshold and envelope <= previous_envelope:
            small_run += 1
        else:
            small_run = 0
        previous_envelope = last_envelope = envelope

        if small_run >= settings.consecutive_small_terms:
            digits = lost_digits(max_magnitude, acc.value)
            trusted = digits <= settings.max_cancellation_digits
            if not trusted:
                logger.debug(f"{label} lost {digits:.1f} digits to cancellation "
                             f"(largest term {max_magnitude:.3e}, sum {acc.value:.3e})")
            return SeriesEval(acc.value, k + 1, envelope, trusted, max_magnitude)

    partial = SeriesEval(acc.value, settings.max_terms, last_envelope, False, max_magnitude)
    raise SeriesConvergenceError(
        f"{label} did not converge within {settings.max_terms} terms "
        f"(last term magnitude {last_envelope:.3e})",
        partial=partial,
    )


def sum_finite(values, reverse: bool = False) -> SeriesEval:
    """Exact-length sum of a terminating series, optionally in reverse order."""
    values = list(values)
    acc = CompensatedSum()
    acc.extend(reversed(values) if reverse else values)
    last = abs(values[-1]) if values else 0.0
    largest = max((abs(v) for v in values), default=0.0)
    return SeriesEval(acc.value, len(values), last, True, largest)
