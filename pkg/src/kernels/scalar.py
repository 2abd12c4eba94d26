"""Real-valued scalar special functions used as series coefficients and oracles.

Every kernel validates its argument and delegates the numerics to
``scipy.special``. Poles raise ``PoleError``; the reciprocal-gamma helpers
instead return the finite limits the parameter-derivative series need.
"""
import math
from typing import List, Tuple

import numpy as np
from scipy import special

from src.utils.errors import DomainError, GammaOverflowError, PoleError

EULER_GAMMA = float(np.euler_gamma)
LOG_PI = math.log(math.pi)


def _require_finite(x: float, name: str = 'x') -> float:
    value = float(x)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return value


def is_pole(x: float) -> bool:
    """True when x is a non-positive integer."""
    return x <= 0.0 and x == math.floor(x)


def safe_exp(log_value: float) -> float:
    if log_value == -math.inf:
        return 0.0
    try:
        return math.exp(log_value)
    except OverflowError as e:
        raise GammaOverflowError(f"exp({log_value:.6g}) is not representable") from e


def gamma(x: float) -> float:
    """
    Gamma function.

    Args:
        x (float): Argument, not a non-positive integer

    Returns:
        float: Γ(x)
    """
    x = _require_finite(x)
    if is_pole(x):
        raise PoleError(f"Gamma has a pole at x={x:g}")
    value = float(special.gamma(x))
    if not math.isfinite(value):
        raise GammaOverflowError(f"Gamma({x:g}) overflows double precision")
    return value


def rgamma(x: float) -> float:
    """Reciprocal gamma 1/Γ(x); exactly 0 at the poles."""
    x = _require_finite(x)
    if is_pole(x):
        return 0.0
    return float(special.rgamma(x))


def log_abs_gamma(x: float) -> Tuple[float, float]:
    """
    Logarithm of |Γ(x)| together with the sign of Γ(x).

    Args:
        x (float): Argument, not a non-positive integer

    Returns:
        Tuple[float, float]: (ln|Γ(x)|, sign)
    """
    x = _require_finite(x)
    if is_pole(x):
        raise PoleError(f"Gamma has a pole at x={x:g}")
    sign = 1.0 if x > 0 else float(special.gammasgn(x))
    return math.lgamma(x), sign


def digamma(x: float) -> float:
    x = _require_finite(x)
    if is_pole(x):
        raise PoleError(f"Digamma has a pole at x={x:g}")
    return float(special.digamma(x))


def trigamma(x: float) -> float:
    x = _require_finite(x)
    if is_pole(x):
        raise PoleError(f"Trigamma has a pole at x={x:g}")
    return float(special.polygamma(1, x))


def scaled_rgamma_jet(x: float, order: int, log_scale: float = 0.0) -> float:
    """
    exp(log_scale) times the order-th derivative of 1/Γ at x, without overflow.

    Orders 0, 1 and 2 are 1/Γ, -ψ/Γ and (ψ² - ψ')/Γ. At x = -n the finite
    limits 0, (-1)^n n! and 2(-1)^(n+1) n! ψ(n+1) are used.

    Args:
        x (float): Argument
        order (int): Derivative order, 0 to 2
        log_scale (float): Logarithm of a positive prefactor folded into the result

    Returns:
        float: Scaled derivative value
    """
    if order not in (0, 1, 2):
        raise DomainError(f"Reciprocal gamma jet order must be 0, 1 or 2, got {order}")
    x = _require_finite(x)
    if log_scale == -math.inf:
        return 0.0

    if is_pole(x):
        if order == 0:
            return 0.0
        n = int(-x)
        magnitude = safe_exp(log_scale + math.lgamma(n + 1))
        parity = -1.0 if n % 2 else 1.0
        if order == 1:
            return parity * magnitude
        return -2.0 * parity * magnitude * float(special.digamma(n + 1))

    log_gamma, sign = log_abs_gamma(x)
    base = sign * safe_exp(log_scale - log_gamma)
    if order == 0:
        return base
    psi = float(special.digamma(x))
    if order == 1:
        return -psi * base
    return (psi * psi - float(special.polygamma(1, x))) * base


def rgamma_jet(x: float, order: int) -> float:
    return scaled_rgamma_jet(x, order, 0.0)


def psi_over_gamma(x: float) -> float:
    """ψ(x)/Γ(x), continued to (-1)^(n+1) n! at x = -n."""
    return -rgamma_jet(x, 1)


def lower_incomplete_gamma(a: float, z: float) -> float:
    """
    Lower incomplete gamma function γ(a, z) = ∫₀^z u^(a-1) e^(-u) du.

    Args:
        a (float): Order, a > 0
        z (float): Upper limit, z ≥ 0

    Returns:
        float: γ(a, z)
    """
    a = _require_finite(a, 'a')
    z = _require_finite(z, 'z')
    if a <= 0:
        raise DomainError(f"Lower incomplete gamma needs a > 0, got a={a:g}")
    if z < 0:
        raise DomainError(f"Lower incomplete gamma needs z >= 0, got z={z:g}")
    if z == 0:
        return 0.0
    return float(special.gammainc(a, z)) * gamma(a)


def incomplete_gamma_ladder(a0: float, z: float, steps: int) -> List[float]:
    """
    γ(a0 + j, z) for j = 0..steps via γ(a+1, z) = a γ(a, z) - z^a e^(-z).

    Args:
        a0 (float): Starting order, a0 > 0
        z (float): Argument, z ≥ 0
        steps (int): Number of upward steps

    Returns:
        List[float]: Ladder values, starting with γ(a0, z)
    """
    if steps < 0:
        raise DomainError(f"steps must be non-negative, got {steps}")
    values = [lower_incomplete_gamma(a0, z)]
    a = a0
    for _ in range(steps):
        drop = 0.0 if z == 0 else math.exp(a * math.log(z) - z)
        values.append(a * values[-1] - drop)
        a += 1.0
    return values


def erf(x: float) -> float:
    return float(special.erf(_require_finite(x)))


def erfc(x: float) -> float:
    return float(special.erfc(_require_finite(x)))


def ei(x: float) -> float:
    """Exponential integral Ei(x), principal value for x > 0."""
    x = _require_finite(x)
    if x == 0:
        raise DomainError("Ei is undefined at x=0")
    return float(special.expi(x))


def si(x: float) -> float:
    x = _require_finite(x)
    return float(special.sici(x)[0])


def ci(x: float) -> float:
    x = _require_finite(x)
    if x <= 0:
        raise DomainError(f"Ci needs x > 0, got x={x:g}")
    return float(special.sici(x)[1])


def sin_pi(x: float) -> float:
    """sin(πx), exact at integers and half-integers."""
    r = math.fmod(_require_finite(x), 2.0)
    if r < 0:
        r += 2.0
    if r in (0.0, 1.0):
        return 0.0
    if r == 0.5:
        return 1.0
    if r == 1.5:
        return -1.0
    if r > 1.0:
        return -math.sin(math.pi * (r - 1.0))
    return math.sin(math.pi * r)


def cos_pi(x: float) -> float:
    """cos(πx), exact at integers and half-integers."""
    return sin_pi(_require_finite(x) + 0.5)
