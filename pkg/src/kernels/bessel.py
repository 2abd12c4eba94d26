"""Real-order Bessel functions and their order derivatives."""
import math
import warnings
from typing import Callable, Tuple

from scipy import integrate, special

from src.utils.config import DEFAULTS
from src.utils.errors import DomainError, QuadratureError

ORDER_DERIVATIVE_ABS_TOL = DEFAULTS['bessel']['order_derivative_abs_tol']


def _check(nu: float, t: float) -> Tuple[float, float]:
    nu, t = float(nu), float(t)
    if not (math.isfinite(nu) and math.isfinite(t)):
        raise DomainError(f"Bessel order and argument must be finite, got nu={nu}, t={t}")
    if t <= 0:
        raise DomainError(f"Bessel functions need t > 0, got t={t:g}")
    return nu, t


def bessel_j(nu: float, t: float) -> float:
    """
    Bessel function of the first kind J_ν(t).

    Args:
        nu (float): Real order
        t (float): Argument, t > 0

    Returns:
        float: J_ν(t)
    """
    nu, t = _check(nu, t)
    return float(special.jv(nu, t))


def bessel_y(nu: float, t: float) -> float:
    nu, t = _check(nu, t)
    return float(special.yv(nu, t))


def bessel_i(nu: float, t: float) -> float:
    nu, t = _check(nu, t)
    return float(special.iv(nu, t))


def bessel_k(nu: float, t: float) -> float:
    nu, t = _check(nu, t)
    return float(special.kv(nu, t))


def _integrate_order_derivative(integrand: Callable[[float], float],
                                abs_tol: float, label: str) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', integrate.IntegrationWarning)
        value, abserr = integrate.quad(integrand, 0.0, math.pi / 2,
                                       epsabs=abs_tol, epsrel=0.0, limit=400)
    if not math.isfinite(value) or abserr > 100 * abs_tol:
        raise QuadratureError(
            f"{label}: quadrature reached error {abserr:.3e}, requested {abs_tol:.1e}",
            estimate=value, abserr=abserr,
        )
    return value


def bessel_j_order_derivative_quadrature(beta: float, t: float,
                                         abs_tol: float = ORDER_DERIVATIVE_ABS_TOL) -> float:
    """
    ∂J_β(t)/∂β = πβ ∫₀^{π/2} tanθ Y₀(t sin²θ) J_β(t cos²θ) dθ for β > 0.

    The integrand behaves like (π/2 - θ)^(2β-1) at the upper end and
    logarithmically at the lower end; adaptive extrapolation handles both.

    Args:
        beta (float): Order, β > 0
        t (float): Argument, t > 0
        abs_tol (float): Absolute quadrature tolerance

    Returns:
        float: Order derivative at ν = β
    """
    beta, t = _check(beta, t)
    if beta <= 0:
        raise DomainError(f"Order-derivative quadrature needs beta > 0, got {beta:g}")

    def integrand(theta: float) -> float:
        s, c = math.sin(theta), math.cos(theta)
        if s == 0.0 or c == 0.0:
            return 0.0
        return (s / c) * special.y0(t * s * s) * special.jv(beta, t * c * c)

    return math.pi * beta * _integrate_order_derivative(
        integrand, abs_tol / (math.pi * beta), 'dJ/dbeta')


def bessel_i_order_derivative_quadrature(beta: float, t: float,
                                         abs_tol: float = ORDER_DERIVATIVE_ABS_TOL) -> float:
    """∂I_β(t)/∂β = -2β ∫₀^{π/2} tanθ K₀(t sin²θ) I_β(t cos²θ) dθ for β > 0."""
    beta, t = _check(beta, t)
    if beta <= 0:
        raise DomainError(f"Order-derivative quadrature needs beta > 0, got {beta:g}")

    def integrand(theta: float) -> float:
        s, c = math.sin(theta), math.cos(theta)
        if s == 0.0 or c == 0.0:
            return 0.0
        return (s / c) * special.k0(t * s * s) * special.iv(beta, t * c * c)

    return -2.0 * beta * _integrate_order_derivative(
        integrand, abs_tol / (2.0 * beta), 'dI/dbeta')


def bessel_j_order_derivative(beta: float, t: float) -> float:
    """
    ∂J_ν(t)/∂ν at ν = β, in closed form for β ∈ {0, 1/2, 1}, by quadrature otherwise.

    Args:
        beta (float): Order, β ≥ 0
        t (float): Argument, t > 0

    Returns:
        float: Order derivative
    """
    beta, t = _check(beta, t)
    if beta == 0.0:
        return 0.5 * math.pi * float(special.y0(t))
    if beta == 0.5:
        si_2t, ci_2t = special.sici(2.0 * t)
        return math.sqrt(2.0 / (math.pi * t)) * (math.sin(t) * ci_2t - math.cos(t) * si_2t)
    if beta == 1.0:
        return float(special.j0(t)) / t + 0.5 * math.pi * float(special.y1(t))
    return bessel_j_order_derivative_quadrature(beta, t)


def bessel_i_order_derivative(beta: float, t: float) -> float:
    """∂I_ν(t)/∂ν at ν = β, closed form for β ∈ {0, 1/2, 1}, quadrature otherwise."""
    beta, t = _check(beta, t)
    if beta == 0.0:
        return -float(special.k0(t))
    if beta == 0.5:
        return (math.exp(t) * special.expi(-2.0 * t)
                - math.exp(-t) * special.expi(2.0 * t)) / math.sqrt(2.0 * math.pi * t)
    if beta == 1.0:
        return float(special.k1(t)) - float(special.i0(t)) / t
    return bessel_i_order_derivative_quadrature(beta, t)
