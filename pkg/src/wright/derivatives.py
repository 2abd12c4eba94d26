"""Derivatives of W, E, F and M with respect to their parameters."""
import math
from typing import Optional, Tuple

from src.kernels.scalar import LOG_PI, cos_pi, digamma, safe_exp, sin_pi, trigamma
from src.kernels.series import SeriesEval, SeriesSettings, sum_series
from src.wright.core import (WrightKind, WrightParams, as_sigma, check_mainardi_argument,
                             jet_series, power_log)
from src.utils.errors import DomainError


def _first_kind(p: WrightParams, t: float) -> float:
    if p.kind is not WrightKind.FIRST:
        raise DomainError(
            f"Parameter derivatives of W need the first kind (alpha >= 0), got alpha={p.alpha:g}; "
            f"use the sigma-derivatives of F and M for the second kind")
    t = float(t)
    if not math.isfinite(t):
        raise DomainError(f"Argument must be finite, got {t}")
    return t


def _wright_jet(p: WrightParams, t: float, order: int, k_power: int,
                settings: Optional[SeriesSettings], name: str) -> SeriesEval:
    t = _first_kind(p, t)
    return jet_series(lambda k: p.alpha * k + p.beta, t, order=order, k_power=k_power,
                      settings=settings, label=f"{name}[{p.alpha:g},{p.beta:g}]({t:g})")


def dW_dalpha(p: WrightParams, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """
    ∂W_{α,β}(t)/∂α = -Σ_{k≥1} ψ(αk+β) t^k / ((k-1)! Γ(αk+β)).

    Args:
        p (WrightParams): First-kind parameters
        t (float): Argument
        settings (Optional[SeriesSettings]): Stopping rule

    Returns:
        SeriesEval: Derivative value and diagnostics
    """
    return _wright_jet(p, t, order=1, k_power=1, settings=settings, name='dW/dalpha')


def dW_dbeta(p: WrightParams, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """∂W_{α,β}(t)/∂β = -Σ_{k≥0} ψ(αk+β) t^k / (k! Γ(αk+β))."""
    return _wright_jet(p, t, order=1, k_power=0, settings=settings, name='dW/dbeta')


def d2W_dalpha2(p: WrightParams, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """∂²W/∂α² = Σ k² [ψ(αk+β)² - ψ'(αk+β)] t^k / (k! Γ(αk+β))."""
    return _wright_jet(p, t, order=2, k_power=2, settings=settings, name='d2W/dalpha2')


def d2W_dbeta2(p: WrightParams, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    return _wright_jet(p, t, order=2, k_power=0, settings=settings, name='d2W/dbeta2')


def _ml_jet(alpha: float, beta: float, z: float, order: int, k_power: int,
            settings: Optional[SeriesSettings], name: str) -> SeriesEval:
    alpha, beta, z = float(alpha), float(beta), float(z)
    if not (math.isfinite(alpha) and math.isfinite(beta) and math.isfinite(z)):
        raise DomainError("Mittag-Leffler parameters and argument must be finite")
    if alpha <= 0:
        raise DomainError(f"Mittag-Leffler derivatives need alpha > 0, got alpha={alpha:g}")
    return jet_series(lambda k: alpha * k + beta, z, order=order, k_power=k_power,
                      factorial=False, settings=settings,
                      label=f"{name}[{alpha:g},{beta:g}]({z:g})")


def dE_dalpha(alpha: float, beta: float, z: float,
              settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """∂E_{α,β}(z)/∂α = -Σ k ψ(αk+β) z^k / Γ(αk+β)."""
    return _ml_jet(alpha, beta, z, 1, 1, settings, 'dE/dalpha')


def dE_dbeta(alpha: float, beta: float, z: float,
             settings: Optional[SeriesSettings] = None) -> SeriesEval:
    return _ml_jet(alpha, beta, z, 1, 0, settings, 'dE/dbeta')


def d2E_dalpha2(alpha: float, beta: float, z: float,
                settings: Optional[SeriesSettings] = None) -> SeriesEval:
    return _ml_jet(alpha, beta, z, 2, 2, settings, 'd2E/dalpha2')


def d2E_dbeta2(alpha: float, beta: float, z: float,
               settings: Optional[SeriesSettings] = None) -> SeriesEval:
    return _ml_jet(alpha, beta, z, 2, 0, settings, 'd2E/dbeta2')


def gamma_sine_jet(sigma: float, k: int, shift: float, order: int,
                   log_scale: float) -> Tuple[float, float]:
    """
    exp(log_scale) times the order-th σ-derivative of Γ(σk + shift) sin(πσk).

    Returns the value and an envelope free of the oscillating factors.
    """
    x = sigma * k + shift
    magnitude = safe_exp(log_scale + math.lgamma(x) + order * math.log(k))
    s, c = sin_pi(sigma * k), cos_pi(sigma * k)
    if order == 0:
        return magnitude * s, magnitude
    psi = digamma(x)
    if order == 1:
        return magnitude * (psi * s + math.pi * c), magnitude * (abs(psi) + math.pi)
    psi1 = trigamma(x)
    value = (psi * psi + psi1) * s + 2.0 * math.pi * psi * c - math.pi ** 2 * s
    envelope = psi * psi + psi1 + 2.0 * math.pi * abs(psi) + math.pi ** 2
    return magnitude * value, magnitude * envelope


def _mainardi_sigma_series(sigma, t: float, order: int, f_line: bool,
                           settings: Optional[SeriesSettings], name: str) -> SeriesEval:
    s = as_sigma(sigma).sigma
    t = check_mainardi_argument(t)

    def term(j: int) -> Tuple[float, float]:
        k = j + 1
        # F: (-1)^(k-1) t^k / k!,  M: (-t)^(k-1) / (k-1)!
        log_prefactor, _ = power_log(t, k if f_line else j)
        if log_prefactor == -math.inf:
            return 0.0, 0.0
        sign = -1.0 if j % 2 else 1.0
        value, envelope = gamma_sine_jet(s, k, 1.0 if f_line else 0.0, order,
                                         log_prefactor - LOG_PI)
        return sign * value, envelope

    return sum_series(term, settings, label=f"{name}[{s:g}]({t:g})")


def dF_dsigma(sigma, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """
    ∂F_σ(t)/∂σ = (1/π) Σ_{k≥1} (-1)^(k-1) t^k/k! · k Γ(σk+1) [ψ(σk+1) sin(πσk) + π cos(πσk)].

    Args:
        sigma: σ in (0, 1)
        t (float): Argument, t ≥ 0
        settings (Optional[SeriesSettings]): Stopping rule

    Returns:
        SeriesEval: Derivative value and diagnostics
    """
    return _mainardi_sigma_series(sigma, t, 1, True, settings, 'dF/dsigma')


def dM_dsigma(sigma, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """∂M_σ(t)/∂σ = (1/π) Σ_{k≥1} (-t)^(k-1)/(k-1)! · k Γ(σk) [ψ(σk) sin(πσk) + π cos(πσk)]."""
    return _mainardi_sigma_series(sigma, t, 1, False, settings, 'dM/dsigma')


def d2F_dsigma2(sigma, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    return _mainardi_sigma_series(sigma, t, 2, True, settings, 'd2F/dsigma2')


def d2M_dsigma2(sigma, t: float, settings: Optional[SeriesSettings] = None) -> SeriesEval:
    """
    ∂²M_σ(t)/∂σ² with coefficient k² Γ(σk) [(ψ² + ψ') sin(πσk) + 2π ψ cos(πσk) - π² sin(πσk)].
    """
    return _mainardi_sigma_series(sigma, t, 2, False, settings, 'd2M/dsigma2')
