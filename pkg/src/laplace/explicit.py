"""Explicit Mittag-Leffler values E_{1,β+1} through the incomplete gamma function."""
import math

from src.kernels.hypergeometric import hyp1f1
from src.kernels.scalar import erf, gamma, lower_incomplete_gamma, rgamma
from src.utils.errors import DomainError


def ml_explicit(beta: float, z: float) -> float:
    """
    E_{1,β+1}(z) without summing its defining series.

    Positive z uses e^z γ(β, z) / (Γ(β) z^β); negative z uses
    ₁F₁(1; β+1; z) / Γ(β+1).

    Args:
        beta (float): β > 0
        z (float): Real argument

    Returns:
        float: E_{1,β+1}(z)
    """
    beta, z = float(beta), float(z)
    if not (math.isfinite(beta) and math.isfinite(z)):
        raise DomainError("ml_explicit needs finite beta and z")
    if beta <= 0:
        raise DomainError(f"ml_explicit needs beta > 0, got beta={beta:g}")
    if z == 0:
        return rgamma(beta + 1.0)
    if z > 0:
        return math.exp(z) * lower_incomplete_gamma(beta, z) / (gamma(beta) * z ** beta)
    return hyp1f1(1.0, beta + 1.0, z) * rgamma(beta + 1.0)


def half_integer_incomplete_gamma(n: int, z: float) -> float:
    """γ(n + 1/2, z) climbed from γ(1/2, z) = √π erf(√z) with γ(a+1, z) = a γ(a, z) - z^a e^(-z)."""
    if n < 0 or z < 0:
        raise DomainError(f"half_integer_incomplete_gamma needs n >= 0 and z >= 0, got ({n}, {z})")
    value = math.sqrt(math.pi) * erf(math.sqrt(z))
    a = 0.5
    for _ in range(n):
        value = a * value - z ** a * math.exp(-z)
        a += 1.0
    return value


def ml_half_integer(n: int, z: float) -> float:
    """
    E_{1,n+3/2}(z) for z > 0 from the half-integer incomplete gamma ladder.

    Args:
        n (int): Ladder index, n ≥ 0
        z (float): z > 0

    Returns:
        float: E_{1,n+3/2}(z)
    """
    if z <= 0:
        raise DomainError(f"ml_half_integer needs z > 0, got z={z:g}")
    a = n + 0.5
    return math.exp(z) * half_integer_incomplete_gamma(n, z) / (gamma(a) * z ** a)


def ml_one_one(z: float) -> float:
    return math.exp(z)


def ml_one_two(z: float) -> float:
    return math.expm1(z) / z if z != 0 else 1.0


def ml_one_three_halves(z: float) -> float:
    """E_{1,3/2}(z) = e^z erf(√z) / √z for z > 0."""
    if z <= 0:
        raise DomainError(f"Closed form needs z > 0, got z={z:g}")
    return math.exp(z) * erf(math.sqrt(z)) / math.sqrt(z)


def ml_one_five_halves(z: float) -> float:
    """E_{1,5/2}(z) = (e^z / z^{3/2}) [erf(√z) - (2/√π) √z e^(-z)] for z > 0."""
    if z <= 0:
        raise DomainError(f"Closed form needs z > 0, got z={z:g}")
    root = math.sqrt(z)
    return math.exp(z) / z ** 1.5 * (erf(root) - 2.0 / math.sqrt(math.pi) * root * math.exp(-z))
