"""Series evaluation of the Wright, Mittag-Leffler and Mainardi functions."""
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional, Tuple

from src.kernels.scalar import (LOG_PI, is_pole, log_abs_gamma, safe_exp,
                                scaled_rgamma_jet, sin_pi)
from src.kernels.series import SeriesEval, SeriesSettings, sum_series
from src.laplace.quadrature import TailBound
from src.utils.config import DEFAULTS
from src.utils.errors import DomainError, SeriesConvergenceError
from src.utils.logger import setup_logger

logger = setup_logger('WrightCore')

TAIL_LOG_FLOOR = DEFAULTS['mainardi']['tail_log_floor']
CROSS_CHECK_TOL = DEFAULTS['series']['cross_check_tol']


class WrightKind(Enum):
    FIRST = 'first'
    SECOND = 'second'


@dataclass(frozen=True)
class WrightParams:
    """Parameters (α, β) of W_{α,β}; first kind for α ≥ 0, second kind for -1 < α < 0."""
    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise DomainError(f"Wright parameters must be finite, got ({self.alpha}, {self.beta})")
        if self.alpha <= -1.0:
            raise DomainError(f"Wright function needs alpha > -1, got alpha={self.alpha:g}")
        if self.beta < 0.0:
            raise DomainError(f"Wright function needs beta >= 0, got beta={self.beta:g}")

    @property
    def kind(self) -> WrightKind:
        return WrightKind.FIRST if self.alpha >= 0 else WrightKind.SECOND


@dataclass(frozen=True)
class SigmaParam:
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and 0.0 < self.sigma < 1.0):
            raise DomainError(f"Mainardi functions need 0 < sigma < 1, got sigma={self.sigma}")


def as_sigma(sigma) -> SigmaParam:
    return sigma if isinstance(sigma, SigmaParam) else SigmaParam(float(sigma))


def power_log(t: float, k: int, factorial: bool = True) -> Tuple[float, float]:
    """(ln|t^k / k!|, sign of t^k), with ln 0 = -inf and t^0 = 1."""
    if k == 0:
        return 0.0, 1.0
    if t == 0.0:
        return -math.inf, 1.0
    log_value = k * math.log(abs(t))
    if factorial:
        log_value -= math.lgamma(k + 1)
    sign = -1.0 if (t < 0 and k % 2) else 1.0
    return log_value, sign


def jet_series(x_of_k: Callable[[int], float], t: float, order: int = 0,
               k_power: int = 0, factorial: bool = True,
               settings: Optional[SeriesSettings] = None,
               label: str = 'series') -> SeriesEval:
    """
    Σ_k k^k_power · t^k / (k!) · (d/dx)^order (1/Γ)(x_k).

    Terms are formed in log space; the envelope is the term magnitude
    without the ψ-polynomial so that its zeros cannot fake convergence.
    Zero terms at poles of Γ carry no envelope.

    Args:
        x_of_k (Callable[[int], float]): Gamma argument of the k-th term
        t (float): Series argument
        order (int): Derivative order of the reciprocal gamma
        k_power (int): Power of k multiplying each term
        factorial (bool): Divide by k! (Wright) or not (Mittag-Leffler)
        settings (Optional[SeriesSettings]): Stopping rule
        label (str): Name used in error messages

    Returns:
        SeriesEval: Series value and diagnostics
    """
    def term(k: int) -> Tuple[float, Optional[float]]:
        if k_power and k == 0:
            return 0.0, None
        log_prefactor, sign = power_log(t, k, factorial)
        if log_prefactor == -math.inf:
            return 0.0, 0.0
        if k_power:
            log_prefactor += k_power * math.log(k)
        x = x_of_k(k)
        value = sign * scaled_rgamma_jet(x, order, log_prefactor)
        if is_pole(x):
            # 1/Γ vanishes at a pole; that zero says nothing about the tail
            return value, (abs(value) if value else None)
        base = safe_exp(log_prefactor - log_abs_gamma(x)[0])
        return value, max(abs(value), base)

    return sum_series(term, settings, label=label)


def _second_kind_term(p: WrightParams, t: float, k: int) -> Tuple[float, float]:
    log_prefactor, sign = power_log(t, k)
    if log_prefactor == -math.inf:
        return 0.0, 0.0
    x = p.alpha * k + p.beta
    if x >= 0.5:
        magnitude = safe_exp(log_prefactor - math.lgamma(x))
        return sign * magnitude, magnitude
    # 1/Γ(x) = Γ(1-x) sin(πx) / π
    magnitude = safe_exp(log_prefactor + math.lgamma(1.0 - x) - LOG_PI)
    return sign * sin_pi(x) * magnitude, magnitude


def _zero_alpha(beta: float, t: float) -> float:
    """W_{0,β}(t) = e^t / Γ(β)."""
    if is_pole(beta):
        return 0.0
    if beta < 170.0 and t < 700.0:
        return math.exp(t) / math.gamma(beta)
    log_gamma, sign = log_abs_gamma(beta)
    return sign * safe_exp(t - log_gamma)


def wright_eval(p: WrightParams, t: float,
                settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """
    Wright function W_{α,β}(t) = Σ t^k / (k! Γ(αk + β)).

    α = 0 is the closed form e^t / Γ(β). The second kind is summed with
    the reflection form of 1/Γ for arguments below 1/2.

    Args:
        p (WrightParams): Parameters (α, β)
        t (float): Real argument
        settings (Optional[SeriesSettings]): Stopping rule

    Returns:
        SeriesEval: Value and truncation diagnostics
    """
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"Wright argument must be finite, got {t}")
    label = f"W_{{{p.alpha:g},{p.beta:g}}}({t:g})"
    if p.alpha == 0:
        value = _zero_alpha(p.beta, t)
        return SeriesEval(value, 1, 0.0, True, abs(value))
    if p.kind is WrightKind.FIRST:
        return jet_series(lambda k: p.alpha * k + p.beta, t, settings=settings, label=label)
    return sum_series(lambda k: _second_kind_term(p, t, k), settings, label=label)


def wright(alpha: float, beta: float, t: float,
           settings: Optional[SeriesSettings] = None) -> float:
    return wright_eval(WrightParams(alpha, beta), t, settings).value


def mittag_leffler(alpha: float, beta: float, z: float,
                   settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """
    Two-parameter Mittag-Leffler function E_{α,β}(z) = Σ z^k / Γ(αk + β).

    Args:
        alpha (float): α > 0
        beta (float): Real β, poles of Γ contribute zero terms
        z (float): Real argument
        settings (Optional[SeriesSettings]): Stopping rule

    Returns:
        SeriesEval: Value and truncation diagnostics
    """
    alpha, beta, z = float(alpha), float(beta), float(z)
    if not (math.isfinite(alpha) and math.isfinite(beta) and math.isfinite(z)):
        raise DomainError("Mittag-Leffler parameters and argument must be finite")
    if alpha <= 0:
        raise DomainError(f"Mittag-Leffler function needs alpha > 0, got alpha={alpha:g}")
    return jet_series(lambda k: alpha * k + beta, z, factorial=False, settings=settings,
                      label=f"E_{{{alpha:g},{beta:g}}}({z:g})")


def _direct_second_kind(p: WrightParams, t: float,
                        settings: Optional[SeriesSettings]) -> SeriesEval:
    return jet_series(lambda k: p.alpha * k + p.beta, t, settings=settings,
                      label='reciprocal-gamma form')


def check_mainardi_argument(t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t < 0:
        raise DomainError(f"Mainardi functions need a finite t >= 0, got t={t}")
    return t


def mainardi_m(sigma, t: float, settings: Optional[SeriesSettings] = None,
               cross_check: bool = True) -> SeriesEval:
    """
    Mainardi function M_σ(t) = W_{-σ,1-σ}(-t).

    Summed in the reflection form (1/π) Σ (-t)^(k-1)/(k-1)! Γ(σk) sin(πσk).
    With ``cross_check`` the plain reciprocal-gamma series is summed too
    and disagreement beyond the configured tolerance marks the result
    as not converged.

    Args:
        sigma: σ in (0, 1), float or SigmaParam
        t (float): Argument, t ≥ 0
        settings (Optional[SeriesSettings]): Stopping rule
        cross_check (bool): Compare against the reciprocal-gamma form

    Returns:
        SeriesEval: Value and truncation diagnostics
    """
    s = as_sigma(sigma)
    t = check_mainardi_argument(t)
    p = WrightParams(-s.sigma, 1.0 - s.sigma)
    result = wright_eval(p, -t, settings)
    if cross_check:
        try:
            direct = _direct_second_kind(p, -t, settings)
        except SeriesConvergenceError:
            return result
        scale = max(1.0, abs(result.value))
        if abs(direct.value - result.value) > CROSS_CHECK_TOL * scale:
            logger.debug(f"M_{s.sigma:g}({t:g}): reflection form {result.value:.17g} "
                         f"differs from reciprocal-gamma form {direct.value:.17g}")
            return replace(result, converged=False)
    return result


def mainardi_f(sigma, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """Mainardi function F_σ(t) = W_{-σ,0}(-t) = σ t M_σ(t)."""
    s = as_sigma(sigma)
    t = check_mainardi_argument(t)
    return wright_eval(WrightParams(-s.sigma, 0.0), -t, settings)


def mainardi_tail_cutoff(sigma, log_floor: float = TAIL_LOG_FLOOR) -> float:
    """
    Argument beyond which M_σ and F_σ are below e^(-log_floor).

    Uses the leading exponential decay exp(-c x^(1/(1-σ))) with
    c = (1-σ) σ^(σ/(1-σ)). Past this point the alternating series has
    lost every significant digit, so integrands treat the function as 0.

    Args:
        sigma: σ in (0, 1)
        log_floor (float): Decay exponent to reach

    Returns:
        float: Cutoff argument
    """
    s = as_sigma(sigma).sigma
    c = (1.0 - s) * s ** (s / (1.0 - s))
    return (log_floor / c) ** (1.0 - s)


def wright_growth_bound(alpha: float, lam: float = 1.0, beta: float = 1.0,
                        amplitude: float = 10.0) -> TailBound:
    """
    Growth envelope of W_{α,β}(±λt) for α ≥ 0 as a TailBound.

    |W_{α,β}(λt)| grows like exp(r t^p) with p = 1/(1+α) and
    r = (1+α) α^(-α/(1+α)) λ^(1/(1+α)).

    Args:
        alpha (float): α ≥ 0
        lam (float): Scale λ > 0
        beta (float): β, sets the algebraic prefactor
        amplitude (float): Constant in front of the envelope

    Returns:
        TailBound: Envelope usable by laplace_forward
    """
    if alpha < 0 or lam <= 0:
        raise DomainError(f"Growth bound needs alpha >= 0 and lam > 0, got ({alpha}, {lam})")
    power = 1.0 / (1.0 + alpha)
    rate = (1.0 + alpha) * alpha ** (-alpha * power) * lam ** power
    degree = max(0.0, (0.5 - beta) * power)
    return TailBound(amplitude=amplitude, rate=rate, power=power, degree=degree)
