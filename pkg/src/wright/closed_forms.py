"""Closed forms of Wright functions and their β-derivatives in terms of Bessel functions."""
import math

from scipy import special

from src.kernels.bessel import (bessel_i, bessel_i_order_derivative, bessel_j,
                                bessel_j_order_derivative)
from src.utils.errors import DomainError

SIGNS = ('-', '+')


def _check_sign(sign: str) -> str:
    if sign not in SIGNS:
        raise DomainError(f"sign must be '-' or '+', got {sign!r}")
    return sign


def _positive(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


def bessel_reduction(beta: float, t: float, sign: str = '-') -> float:
    """
    W_{1,β+1}(∓t²/4) = (2/t)^β J_β(t) for sign '-', (2/t)^β I_β(t) for sign '+'.

    Args:
        beta (float): Order β ≥ 0
        t (float): t > 0
        sign (str): '-' for J, '+' for I

    Returns:
        float: Closed-form value
    """
    t = _positive(t, 't')
    bessel = bessel_j if _check_sign(sign) == '-' else bessel_i
    return (2.0 / t) ** beta * bessel(beta, t)


def closed_form_dWbeta_bessel(beta: float, t: float, sign: str = '-') -> float:
    """
    ∂/∂β of W_{1,β+1}(∓t²/4) = (2/t)^β [ln(2/t) B_β(t) + ∂B_β(t)/∂β], B = J or I.

    β ∈ {0, 1/2, 1} use explicit order derivatives; other β > 0 go through
    the order-derivative quadrature.

    Args:
        beta (float): β ≥ 0
        t (float): t > 0
        sign (str): '-' (J branch) or '+' (I branch)

    Returns:
        float: β-derivative
    """
    t = _positive(t, 't')
    beta = float(beta)
    if beta < 0:
        raise DomainError(f"closed_form_dWbeta_bessel needs beta >= 0, got {beta:g}")
    if _check_sign(sign) == '-':
        value, derivative = bessel_j(beta, t), bessel_j_order_derivative(beta, t)
    else:
        value, derivative = bessel_i(beta, t), bessel_i_order_derivative(beta, t)
    return (2.0 / t) ** beta * (math.log(2.0 / t) * value + derivative)


def dW_dx_bessel_form(beta: float, x: float, sign: str = '-') -> float:
    """The same derivative written in x = t²/4: ∂/∂β W_{1,β+1}(∓x)."""
    x = _positive(x, 'x')
    return closed_form_dWbeta_bessel(beta, 2.0 * math.sqrt(x), sign)


def digamma_bessel_sum(x: float) -> float:
    """Σ_{k≥0} ψ(k+1) x^k / (k!)² = ½ ln x · I₀(2√x) + K₀(2√x)."""
    x = _positive(x, 'x')
    r = 2.0 * math.sqrt(x)
    return 0.5 * math.log(x) * special.i0(r) + special.k0(r)


def alpha_derivative_closed_sum(beta: float, x: float) -> float:
    """
    ∂W_{α,β}(x)/∂α at α = 1 for β ∈ {0, 1}, x > 0.

    Args:
        beta (float): 0 or 1
        x (float): x > 0

    Returns:
        float: Closed-form derivative
    """
    x = _positive(x, 'x')
    r, q, log_x = 2.0 * math.sqrt(x), math.sqrt(x), math.log(x)
    if beta == 0:
        return -x * digamma_bessel_sum(x)
    if beta == 1:
        return q * special.k1(r) - 0.5 * special.i0(r) - 0.5 * q * log_x * special.i1(r)
    raise DomainError(f"Closed sums exist for beta in {{0, 1}}, got {beta:g}")


def beta_derivative_closed_sum(beta: float, x: float) -> float:
    """∂W_{α,β}(x)/∂β at α = 1 for β ∈ {0, 1}, x > 0."""
    x = _positive(x, 'x')
    r, q, log_x = 2.0 * math.sqrt(x), math.sqrt(x), math.log(x)
    if beta == 0:
        return q * special.k1(r) + 0.5 * special.i0(r) - 0.5 * q * log_x * special.i1(r)
    if beta == 1:
        return -digamma_bessel_sum(x)
    raise DomainError(f"Closed sums exist for beta in {{0, 1}}, got {beta:g}")


def mainardi_m_half(t: float) -> float:
    """M_{1/2}(t) = exp(-t²/4) / √π."""
    return math.exp(-0.25 * t * t) / math.sqrt(math.pi)


def mainardi_m_third(x: float) -> float:
    """M_{1/3}(x) = (√x / π) K_{1/3}(2 x^{3/2} / √27) for x > 0."""
    x = _positive(x, 'x')
    return math.sqrt(x) / math.pi * special.kv(1.0 / 3.0, 2.0 * x ** 1.5 / math.sqrt(27.0))


def mainardi_f_third(x: float) -> float:
    """F_{1/3}(x) = x^{3/2} K_{1/3}(2 x^{3/2} / √27) / (3π) for x > 0."""
    x = _positive(x, 'x')
    return x ** 1.5 * special.kv(1.0 / 3.0, 2.0 * x ** 1.5 / math.sqrt(27.0)) / (3.0 * math.pi)
