"""Semi-infinite quadrature for forward Laplace transforms."""
import math
import warnings
from dataclasses import dataclass, replace
from typing import Any, Callable, Dict, NamedTuple, Optional, Tuple, Union

from scipy import integrate

from src.utils.config import DEFAULTS
from src.utils.errors import DomainError, QuadratureError, TailBoundError

MAX_TRUNCATION = 1.0e6
GROWTH_FACTOR = 1.25


@dataclass(frozen=True)
class TailBound:
    """
    Envelope |f(t)| ≤ amplitude · t^degree · exp(rate · t^power + shift · t) for large t.

    Used to pick the truncation point T of ∫₀^∞ e^(-st) f(t) dt.
    """
    amplitude: float = 1.0
    rate: float = 0.0
    power: float = 1.0
    degree: float = 0.0
    shift: float = 0.0

    def __post_init__(self):
        if self.amplitude <= 0:
            raise DomainError(f"Tail bound amplitude must be positive, got {self.amplitude}")
        if self.power > 1 or self.power <= 0:
            raise DomainError(f"Tail bound power must lie in (0, 1], got {self.power}")

    def log_integrand(self, t: float, s: float) -> float:
        return (math.log(self.amplitude) + self.degree * math.log(t)
                + self.rate * t ** self.power + (self.shift - s) * t)

    def decay_rate(self, t: float, s: float) -> float:
        """Lower bound κ on -d/dt of the log integrand for every point past t."""
        growth = self.rate * self.power * t ** (self.power - 1.0)
        return s - self.shift - max(self.degree, 0.0) / t - growth

    def tail(self, t: float, s: float) -> float:
        """Bound on ∫_t^∞ e^(-su) |f(u)| du, infinite while the integrand still grows."""
        kappa = self.decay_rate(t, s)
        if kappa <= 0:
            return math.inf
        return math.exp(self.log_integrand(t, s)) / kappa

    def truncation(self, s: float, target: float, start: float = 1.0) -> float:
        """
        Smallest T on a geometric grid with tail(T) < target.

        Args:
            s (float): Laplace variable
            target (float): Tail tolerance
            start (float): First candidate

        Returns:
            float: Truncation point
        """
        if s <= 0:
            raise DomainError(f"Laplace variable must be positive, got s={s:g}")
        t = max(start, 1.0e-3)
        while t < MAX_TRUNCATION:
            if self.tail(t, s) < target:
                return t
            t *= GROWTH_FACTOR
        raise TailBoundError(
            f"No truncation point below {MAX_TRUNCATION:g} bounds the tail by {target:.1e} at s={s:g}")


@dataclass(frozen=True)
class CompactSupport:
    """The integrand vanishes (to working precision) beyond ``upper``."""
    upper: float

    def __post_init__(self):
        if not self.upper > 0:
            raise DomainError(f"Support bound must be positive, got {self.upper}")

    def truncation(self, s: float, target: float, start: float = 1.0) -> float:
        return self.upper


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = DEFAULTS['quadrature']['abs_tol']
    rel_tol: float = DEFAULTS['quadrature']['rel_tol']
    max_subdivisions: int = DEFAULTS['quadrature']['max_subdivisions']
    tail_safety: float = DEFAULTS['quadrature']['tail_safety']
    truncation_rule: Union[TailBound, CompactSupport] = TailBound()

    def __post_init__(self):
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise DomainError("Quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be positive")

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> 'QuadratureSpec':
        section = config.get('quadrature', {})
        return cls(
            abs_tol=float(section.get('abs_tol', cls.abs_tol)),
            rel_tol=float(section.get('rel_tol', cls.rel_tol)),
            max_subdivisions=int(section.get('max_subdivisions', cls.max_subdivisions)),
            tail_safety=float(section.get('tail_safety', cls.tail_safety)),
        )

    def with_bound(self, bound: Union[TailBound, CompactSupport]) -> 'QuadratureSpec':
        return replace(self, truncation_rule=bound)


DEFAULT_SPEC = QuadratureSpec()


class IdentityChart:
    """Integrate directly in t over (0, T)."""

    def to_time(self, u: float) -> Tuple[float, float]:
        return u, 1.0

    def bounds(self, upper: float) -> Tuple[float, float]:
        return 0.0, upper


class SqrtChart:
    """t = u², for integrands with a t^(-1/2) endpoint singularity."""

    def to_time(self, u: float) -> Tuple[float, float]:
        return u * u, 2.0 * u

    def bounds(self, upper: float) -> Tuple[float, float]:
        return 0.0, math.sqrt(upper)


class InversePowerChart:
    """
    x = λ / t^σ, the natural variable of the Mainardi time sides.

    Small t maps to large x; the integral is cut at x_max, past which the
    Mainardi functions are below double-precision significance.
    """

    def __init__(self, lam: float, sigma: float, x_max: float):
        if lam <= 0 or not 0 < sigma < 1 or x_max <= 0:
            raise DomainError(f"Invalid inverse-power chart lam={lam}, sigma={sigma}, x_max={x_max}")
        self.lam = lam
        self.sigma = sigma
        self.x_max = x_max

    def to_time(self, x: float) -> Tuple[float, float]:
        t = (self.lam / x) ** (1.0 / self.sigma)
        return t, t / (self.sigma * x)

    def bounds(self, upper: float) -> Tuple[float, float]:
        return self.lam / upper ** self.sigma, self.x_max


class LaplaceResult(NamedTuple):
    value: float
    abserr: float
    upper: float


def laplace_forward(f: Callable[[float], float], s: float,
                    spec: Optional[QuadratureSpec] = None,
                    chart=None) -> LaplaceResult:
    """
    ∫₀^∞ e^(-st) f(t) dt by adaptive Gauss-Kronrod quadrature on a truncated range.

    The truncation point comes from ``spec.truncation_rule`` so that the
    discarded tail is below abs_tol / tail_safety.

    Args:
        f (Callable[[float], float]): Time function
        s (float): Laplace variable, s > 0
        spec (Optional[QuadratureSpec]): Tolerances and tail bound
        chart: Variable change (IdentityChart, SqrtChart or InversePowerChart)

    Returns:
        LaplaceResult: Value, achieved error estimate including the tail, truncation point
    """
    spec = spec or DEFAULT_SPEC
    chart = chart or IdentityChart()
    s = float(s)
    if not math.isfinite(s) or s <= 0:
        raise DomainError(f"Laplace variable must be positive, got s={s}")

    tail_target = spec.abs_tol / spec.tail_safety
    upper = spec.truncation_rule.truncation(s, tail_target)
    lower_u, upper_u = chart.bounds(upper)

    def integrand(u: float) -> float:
        t, jacobian = chart.to_time(u)
        if t <= 0.0:
            return 0.0
        return math.exp(-s * t) * f(t) * jacobian

    if upper_u <= lower_u:
        return LaplaceResult(0.0, tail_target, upper)

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always', integrate.IntegrationWarning)
        value, abserr = integrate.quad(integrand, lower_u, upper_u,
                                       epsabs=spec.abs_tol, epsrel=spec.rel_tol,
                                       limit=spec.max_subdivisions)

    allowed = max(spec.abs_tol, spec.rel_tol * abs(value))
    if not math.isfinite(value) or (caught and abserr > 1.0e3 * allowed):
        raise QuadratureError(
            f"Laplace quadrature at s={s:g} reached error {abserr:.3e}, requested {allowed:.1e}",
            estimate=value, abserr=abserr,
        )
    return LaplaceResult(value, abserr + tail_target, upper)
