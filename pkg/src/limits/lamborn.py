"""Finite-order delta-sequence approximants of Wright and Mittag-Leffler values."""
import math
import warnings
from dataclasses import dataclass
from typing import Callable

from scipy import integrate

from src.kernels.hypergeometric import hyp2f1
from src.kernels.scalar import rgamma
from src.utils.config import DEFAULTS
from src.utils.errors import DomainError, QuadratureError

TAIL_CUT = DEFAULTS['lamborn']['tail_cut']


@dataclass(frozen=True)
class LambornOrder:
    """Order ν of the sequence ν J_ν(νx) → δ(x - 1)."""
    nu: float

    def __post_init__(self):
        if not math.isfinite(self.nu) or self.nu < 3:
            raise DomainError(f"Delta-sequence order must be >= 3, got nu={self.nu}")

    @property
    def terminating(self) -> bool:
        """True for odd integers, where the hypergeometric approximant is a polynomial."""
        return self.nu == math.floor(self.nu) and int(self.nu) % 2 == 1


def as_order(nu) -> LambornOrder:
    return nu if isinstance(nu, LambornOrder) else LambornOrder(float(nu))


def lamborn_hyp_factor(t: float, beta: float, nu, reverse: bool = False) -> float:
    """
    ₂F₁((ν+1)/2, (1-ν)/2; β+1; t²/ν²), which tends to Γ(β+1) W_{1,β+1}(-t²/4).

    Args:
        t (float): Argument, 0 < t < ν
        beta (float): β > -1
        nu: Order ν ≥ 3, float or LambornOrder
        reverse (bool): Sum a terminating series from its last term

    Returns:
        float: Hypergeometric factor
    """
    order = as_order(nu)
    t, beta = float(t), float(beta)
    if not math.isfinite(t) or t <= 0 or t >= order.nu:
        raise DomainError(f"Hypergeometric approximant needs 0 < t < nu, got t={t}, nu={order.nu:g}")
    if not math.isfinite(beta) or beta <= -1:
        raise DomainError(f"Hypergeometric approximant needs beta > -1, got beta={beta}")
    nu = order.nu
    return hyp2f1(0.5 * (nu + 1.0), 0.5 * (1.0 - nu), beta + 1.0, (t / nu) ** 2, reverse=reverse)


def wright_limit_hyp(t: float, beta: float, nu, reverse: bool = False) -> float:
    """
    Finite-ν approximant of W_{1,β+1}(-t²/4).

    Args:
        t (float): Argument, 0 < t < ν
        beta (float): β > -1
        nu: Order ν ≥ 3; odd integers give a terminating sum
        reverse (bool): Summation direction of the terminating sum

    Returns:
        float: ₂F₁(...) / Γ(β+1)
    """
    return lamborn_hyp_factor(t, beta, nu, reverse) * rgamma(float(beta) + 1.0)


def lamborn_kernel(xi: float, nu) -> float:
    """
    ν^(ν+1) / (√(ν²+ξ²) [ξ + √(ν²+ξ²)]^ν), evaluated as exp(-ν asinh(ξ/ν)) / √(1 + ξ²/ν²).

    Args:
        xi (float): ξ ≥ 0
        nu: Order ν ≥ 3

    Returns:
        float: Kernel value, 1 at ξ = 0
    """
    nu = as_order(nu).nu
    xi = float(xi)
    if not math.isfinite(xi) or xi < 0:
        raise DomainError(f"Kernel needs xi >= 0, got xi={xi}")
    ratio = xi / nu
    return math.exp(-nu * math.asinh(ratio)) / math.hypot(1.0, ratio)


def lamborn_limit(f: Callable[[float], float], nu, tail_cut: float = TAIL_CUT,
                  abs_tol: float = 1.0e-10, rel_tol: float = 1.0e-10) -> float:
    """
    ∫₀^∞ f(ξ) kernel(ξ, ν) dξ, which tends to the Laplace transform of f at s = 1.

    With ξ = ν sinh(v/ν) the kernel times dξ becomes e^(-v) dv, so the
    integral is ∫₀^V f(ν sinh(v/ν)) e^(-v) dv truncated at V = tail_cut.

    Args:
        f (Callable[[float], float]): Function of ξ
        nu: Order ν ≥ 3
        tail_cut (float): Upper limit V in the v variable
        abs_tol (float): Absolute quadrature tolerance
        rel_tol (float): Relative quadrature tolerance

    Returns:
        float: Finite-ν value
    """
    nu = as_order(nu).nu

    def integrand(v: float) -> float:
        xi = nu * math.sinh(v / nu)
        if xi <= 0.0:
            return 0.0
        return f(xi) * math.exp(-v)

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter('always', integrate.IntegrationWarning)
        value, abserr = integrate.quad(integrand, 0.0, tail_cut, epsabs=abs_tol,
                                       epsrel=rel_tol, limit=200)
    if not math.isfinite(value) or (caught and abserr > 1.0e3 * max(abs_tol, rel_tol * abs(value))):
        raise QuadratureError(f"Delta-limit quadrature at nu={nu:g} reached error {abserr:.3e}",
                              estimate=value, abserr=abserr)
    return value
