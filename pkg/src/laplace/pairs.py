"""Catalog of Laplace transform pairs and function identities checked by the verifier."""
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from src.kernels.bessel import bessel_k
from src.kernels.scalar import erfc
from src.laplace.explicit import ml_explicit
from src.laplace.quadrature import (CompactSupport, IdentityChart, InversePowerChart,
                                    SqrtChart, TailBound)
from src.utils.errors import DomainError, ManifestError
from src.utils.manifest import expand_parameters, read_manifest
from src.wright.core import (WrightParams, mainardi_f, mainardi_m, mainardi_tail_cutoff,
                             mittag_leffler, wright_eval, wright_growth_bound)

# Mainardi-type integrands are noise-limited near the tail cutoff.
MAINARDI_ABS_TOL = 1.0e-9

Chart = Union[IdentityChart, SqrtChart, InversePowerChart]


@dataclass
class PairSetup:
    """Evaluable sides of one pair at fixed parameters."""
    time_function: Callable[[float], float]
    image_function: Callable[[float], float]
    chart: Optional[Chart] = None
    bound: Union[TailBound, CompactSupport] = field(default_factory=TailBound)
    abs_tol: Optional[float] = None
    pointwise: bool = False


def _w(alpha: float, beta: float, x: float) -> float:
    return wright_eval(WrightParams(alpha, beta), x).value


def _ml(alpha: float, beta: float, z: float) -> float:
    return mittag_leffler(alpha, beta, z).value


def _cut(sigma: float, x: float, evaluate: Callable[[float], float]) -> float:
    """Mainardi-type value, zero past the tail cutoff."""
    if x > mainardi_tail_cutoff(sigma):
        return 0.0
    return evaluate(x)


def _mainardi_m(sigma: float, x: float) -> float:
    return _cut(sigma, x, lambda v: mainardi_m(sigma, v, cross_check=False).value)


def _mainardi_f(sigma: float, x: float) -> float:
    return _cut(sigma, x, lambda v: mainardi_f(sigma, v).value)


def _inverse_chart(lam: float, sigma: float) -> InversePowerChart:
    return InversePowerChart(lam, sigma, mainardi_tail_cutoff(sigma))


def _algebraic_bound(lam: float, degree: float) -> TailBound:
    return TailBound(amplitude=2.0 * max(lam, 1.0), degree=degree)


# First-kind Wright pairs

def wright_scaling(alpha: float, beta: float, lam: float, sign: int = 1) -> PairSetup:
    """W_{α,β}(±λt) ↔ (1/s) E_{α,β}(±λ/s)."""
    return PairSetup(
        time_function=lambda t: _w(alpha, beta, sign * lam * t),
        image_function=lambda s: _ml(alpha, beta, sign * lam / s) / s,
        bound=wright_growth_bound(alpha, lam, beta),
    )


def wright_shift(alpha: float, beta: float, lam: float, rho: float, sign: int = 1) -> PairSetup:
    """e^(±ρt) W_{α,β}(λt) ↔ E_{α,β}(λ/(s∓ρ)) / (s∓ρ)."""
    def image(s: float) -> float:
        shifted = s - sign * rho
        return _ml(alpha, beta, lam / shifted) / shifted

    return PairSetup(
        time_function=lambda t: math.exp(sign * rho * t) * _w(alpha, beta, lam * t),
        image_function=image,
        bound=replace(wright_growth_bound(alpha, lam, beta), shift=max(sign * rho, 0.0)),
    )


def wright_hyperbolic(alpha: float, beta: float, lam: float, rho: float,
                      kind: str = 'sinh') -> PairSetup:
    """sinh(ρt) W or cosh(ρt) W ↔ half difference or half sum of the shifted images."""
    if kind not in ('sinh', 'cosh'):
        raise DomainError(f"kind must be 'sinh' or 'cosh', got {kind!r}")
    weight = math.sinh if kind == 'sinh' else math.cosh
    parity = -1.0 if kind == 'sinh' else 1.0

    def image(s: float) -> float:
        up, down = s - rho, s + rho
        return 0.5 * (_ml(alpha, beta, lam / up) / up + parity * _ml(alpha, beta, lam / down) / down)

    return PairSetup(
        time_function=lambda t: weight(rho * t) * _w(alpha, beta, lam * t),
        image_function=image,
        bound=replace(wright_growth_bound(alpha, lam, beta), shift=rho),
    )


def wright_t_weighted(alpha: float, beta: float, lam: float) -> PairSetup:
    """t W_{α,β}(λt) ↔ [(α-β+1) E_{α,β}(λ/s) + E_{α,β-1}(λ/s)] / (α s²)."""
    def image(s: float) -> float:
        z = lam / s
        return ((alpha - beta + 1.0) * _ml(alpha, beta, z) + _ml(alpha, beta - 1.0, z)) / (alpha * s * s)

    bound = wright_growth_bound(alpha, lam, beta)
    return PairSetup(
        time_function=lambda t: t * _w(alpha, beta, lam * t),
        image_function=image,
        bound=replace(bound, degree=bound.degree + 1.0),
    )


def _oscillatory_bound(lam: float) -> TailBound:
    # the series for J-type functions carries rounding noise of size e^(λt)
    return TailBound(amplitude=2.0, rate=lam, power=1.0)


def bessel_j0_form(lam: float) -> PairSetup:
    """W_{1,1}(-λ²t²/4) = J₀(λt) ↔ 1/√(s²+λ²)."""
    return PairSetup(
        time_function=lambda t: _w(1.0, 1.0, -0.25 * (lam * t) ** 2),
        image_function=lambda s: 1.0 / math.hypot(s, lam),
        bound=_oscillatory_bound(lam),
    )


def bessel_j1_form(lam: float) -> PairSetup:
    """W_{1,2}(-λ²t²/4) = 2 J₁(λt)/(λt) ↔ 2/(s + √(s²+λ²))."""
    return PairSetup(
        time_function=lambda t: _w(1.0, 2.0, -0.25 * (lam * t) ** 2),
        image_function=lambda s: 2.0 / (s + math.hypot(s, lam)),
        bound=_oscillatory_bound(lam),
    )


def bessel_j2_form(lam: float) -> PairSetup:
    """W_{1,3}(-λ²t²/4) = 4 J₂(λt)/(λt)² ↔ (r + r³/3)/λ with r = λ/(s + √(s²+λ²))."""
    def image(s: float) -> float:
        r = lam / (s + math.hypot(s, lam))
        return (r + r ** 3 / 3.0) / lam

    return PairSetup(
        time_function=lambda t: _w(1.0, 3.0, -0.25 * (lam * t) ** 2),
        image_function=image,
        bound=_oscillatory_bound(lam),
    )


def wright_one_two_negative(lam: float) -> PairSetup:
    """W_{1,2}(-λt) ↔ (1 - e^(-λ/s)) / λ."""
    return PairSetup(
        time_function=lambda t: _w(1.0, 2.0, -lam * t),
        image_function=lambda s: -math.expm1(-lam / s) / lam,
        bound=wright_growth_bound(1.0, lam, 2.0),
    )


def wright_incomplete_gamma(beta: float, lam: float, sign: int = 1) -> PairSetup:
    """W_{1,β+1}(±λt) ↔ E_{1,β+1}(±λ/s)/s with E in explicit incomplete-gamma form."""
    return PairSetup(
        time_function=lambda t: _w(1.0, beta + 1.0, sign * lam * t),
        image_function=lambda s: ml_explicit(beta, sign * lam / s) / s,
        bound=wright_growth_bound(1.0, lam, beta + 1.0),
    )


# Mainardi pairs, integrated in x = λ/t^σ

def mainardi_f_inverse(sigma: float, lam: float) -> PairSetup:
    """(1/t) F_σ(λ/t^σ) ↔ exp(-λ s^σ)."""
    return PairSetup(
        time_function=lambda t: _mainardi_f(sigma, lam / t ** sigma) / t,
        image_function=lambda s: math.exp(-lam * s ** sigma),
        chart=_inverse_chart(lam, sigma),
        bound=_algebraic_bound(lam, -1.0 - sigma),
        abs_tol=MAINARDI_ABS_TOL,
    )


def mainardi_m_inverse(sigma: float, lam: float) -> PairSetup:
    """(σλ/t^(σ+1)) M_σ(λ/t^σ) ↔ exp(-λ s^σ)."""
    return PairSetup(
        time_function=lambda t: sigma * lam / t ** (sigma + 1.0) * _mainardi_m(sigma, lam / t ** sigma),
        image_function=lambda s: math.exp(-lam * s ** sigma),
        chart=_inverse_chart(lam, sigma),
        bound=_algebraic_bound(lam, -1.0 - sigma),
        abs_tol=MAINARDI_ABS_TOL,
    )


def mainardi_f_scaled(sigma: float, lam: float) -> PairSetup:
    """(1/σ) F_σ(λ/t^σ) ↔ λ s^(σ-1) exp(-λ s^σ)."""
    return PairSetup(
        time_function=lambda t: _mainardi_f(sigma, lam / t ** sigma) / sigma,
        image_function=lambda s: lam * s ** (sigma - 1.0) * math.exp(-lam * s ** sigma),
        chart=_inverse_chart(lam, sigma),
        bound=_algebraic_bound(lam, -sigma),
        abs_tol=MAINARDI_ABS_TOL,
    )


def mainardi_m_scaled(sigma: float, lam: float) -> PairSetup:
    """(λ/t^σ) M_σ(λ/t^σ) ↔ λ s^(σ-1) exp(-λ s^σ)."""
    def time_function(t: float) -> float:
        x = lam / t ** sigma
        return x * _mainardi_m(sigma, x)

    return PairSetup(
        time_function=time_function,
        image_function=lambda s: lam * s ** (sigma - 1.0) * math.exp(-lam * s ** sigma),
        chart=_inverse_chart(lam, sigma),
        bound=_algebraic_bound(lam, -sigma),
        abs_tol=MAINARDI_ABS_TOL,
    )


def wright_second_kind_inverse(sigma: float, beta: float, lam: float) -> PairSetup:
    """t^(β-1) W_{-σ,β}(-λ/t^σ) ↔ s^(-β) exp(-λ s^σ)."""
    def time_function(t: float) -> float:
        x = lam / t ** sigma
        return t ** (beta - 1.0) * _cut(sigma, x, lambda v: _w(-sigma, beta, -v))

    return PairSetup(
        time_function=time_function,
        image_function=lambda s: s ** (-beta) * math.exp(-lam * s ** sigma),
        chart=_inverse_chart(lam, sigma),
        bound=_algebraic_bound(lam, beta - 1.0),
        abs_tol=MAINARDI_ABS_TOL,
    )


# σ = 1/2 closed forms

def half_levy_density(lam: float) -> PairSetup:
    """λ/(2√π t^{3/2}) exp(-λ²/4t) ↔ exp(-λ√s)."""
    return PairSetup(
        time_function=lambda t: lam / (2.0 * math.sqrt(math.pi) * t ** 1.5) * math.exp(-lam * lam / (4.0 * t)),
        image_function=lambda s: math.exp(-lam * math.sqrt(s)),
        chart=SqrtChart(),
        bound=_algebraic_bound(lam, -1.5),
    )


def half_diffusion_kernel(lam: float) -> PairSetup:
    """exp(-λ²/4t)/√(πt) ↔ exp(-λ√s)/√s."""
    return PairSetup(
        time_function=lambda t: math.exp(-lam * lam / (4.0 * t)) / math.sqrt(math.pi * t),
        image_function=lambda s: math.exp(-lam * math.sqrt(s)) / math.sqrt(s),
        chart=SqrtChart(),
        bound=_algebraic_bound(lam, -0.5),
    )


def half_erfc(lam: float) -> PairSetup:
    """erfc(λ/(2√t)) ↔ exp(-λ√s)/s."""
    return PairSetup(
        time_function=lambda t: erfc(lam / (2.0 * math.sqrt(t))),
        image_function=lambda s: math.exp(-lam * math.sqrt(s)) / s,
        chart=SqrtChart(),
        bound=TailBound(amplitude=1.0),
    )


def half_pointwise(lam: float) -> PairSetup:
    """(λ/(2t^{3/2})) M_{1/2}(λ/√t) = λ/(2√π t^{3/2}) exp(-λ²/4t), pointwise in t."""
    return PairSetup(
        time_function=lambda t: lam / (2.0 * t ** 1.5) * mainardi_m(0.5, lam / math.sqrt(t)).value,
        image_function=lambda t: lam / (2.0 * math.sqrt(math.pi) * t ** 1.5) * math.exp(-lam * lam / (4.0 * t)),
        pointwise=True,
    )


def _bessel_k_image(n: float, lam: float, s: float) -> float:
    """λ^{m+1/2} s^{(1-2m)/4} K_{m-1/2}(λ√s) / (2^{m-1/2} √π) for m = n + 1."""
    m = n + 1.0
    return (lam ** (m + 0.5) * s ** ((1.0 - 2.0 * m) / 4.0) * bessel_k(m - 0.5, lam * math.sqrt(s))
            / (2.0 ** (m - 0.5) * math.sqrt(math.pi)))


def weighted_half_f(n: int, lam: float) -> PairSetup:
    """t^n F_{1/2}(λ/√t) ↔ λ^{n+3/2} s^{-(2n+1)/4} K_{n+1/2}(λ√s) / (2^{n+1/2} √π)."""
    return PairSetup(
        time_function=lambda t: t ** n * _mainardi_f(0.5, lam / math.sqrt(t)),
        image_function=lambda s: _bessel_k_image(n, lam, s),
        chart=_inverse_chart(lam, 0.5),
        bound=_algebraic_bound(lam, n - 0.5),
        abs_tol=MAINARDI_ABS_TOL,
    )


def weighted_half_wright(n: int, lam: float) -> PairSetup:
    """2 t^n W_{-1/2,0}(-λ/√t) ↔ λ^{n+3/2} s^{-(2n+1)/4} K_{n+1/2}(λ√s) / (2^{n-1/2} √π)."""
    def time_function(t: float) -> float:
        x = lam / math.sqrt(t)
        return 2.0 * t ** n * _cut(0.5, x, lambda v: _w(-0.5, 0.0, -v))

    return PairSetup(
        time_function=time_function,
        image_function=lambda s: 2.0 * _bessel_k_image(n, lam, s),
        chart=_inverse_chart(lam, 0.5),
        bound=_algebraic_bound(2.0 * lam, n - 0.5),
        abs_tol=MAINARDI_ABS_TOL,
    )


# σ = 1/3 forms through K_{1/3}

def _third_bessel(lam: float, t: float) -> float:
    return bessel_k(1.0 / 3.0, 2.0 * lam ** 1.5 / math.sqrt(27.0 * t))


def third_density(lam: float) -> PairSetup:
    """(λ^{3/2}/(3π t^{3/2})) K_{1/3}(2λ^{3/2}/√(27t)) ↔ exp(-λ s^{1/3})."""
    return PairSetup(
        time_function=lambda t: lam ** 1.5 / (3.0 * math.pi * t ** 1.5) * _third_bessel(lam, t),
        image_function=lambda s: math.exp(-lam * s ** (1.0 / 3.0)),
        chart=_inverse_chart(lam, 1.0 / 3.0),
        bound=_algebraic_bound(lam, -4.0 / 3.0),
    )


def third_scaled(lam: float) -> PairSetup:
    """(λ^{3/2}/(π t^{1/2})) K_{1/3}(2λ^{3/2}/√(27t)) ↔ λ s^{-2/3} exp(-λ s^{1/3})."""
    return PairSetup(
        time_function=lambda t: lam ** 1.5 / (math.pi * math.sqrt(t)) * _third_bessel(lam, t),
        image_function=lambda s: lam * s ** (-2.0 / 3.0) * math.exp(-lam * s ** (1.0 / 3.0)),
        chart=_inverse_chart(lam, 1.0 / 3.0),
        bound=_algebraic_bound(lam, -1.0 / 3.0),
    )


def third_pointwise(lam: float, side: str = 'f') -> PairSetup:
    """3 F_{1/3}(λ/t^{1/3}) (side 'f') or x M_{1/3}(x) (side 'm') = (λ^{3/2}/(π√t)) K_{1/3}(...)."""
    def time_function(t: float) -> float:
        x = lam / t ** (1.0 / 3.0)
        if side == 'f':
            return 3.0 * mainardi_f(1.0 / 3.0, x).value
        return x * mainardi_m(1.0 / 3.0, x).value

    if side not in ('f', 'm'):
        raise DomainError(f"side must be 'f' or 'm', got {side!r}")
    return PairSetup(
        time_function=time_function,
        image_function=lambda t: lam ** 1.5 / (math.pi * math.sqrt(t)) * _third_bessel(lam, t),
        pointwise=True,
    )


PAIR_BUILDERS: Dict[str, Callable[..., PairSetup]] = {
    'wright_scaling': wright_scaling,
    'wright_shift': wright_shift,
    'wright_hyperbolic': wright_hyperbolic,
    'wright_t_weighted': wright_t_weighted,
    'bessel_j0_form': bessel_j0_form,
    'bessel_j1_form': bessel_j1_form,
    'bessel_j2_form': bessel_j2_form,
    'wright_one_two_negative': wright_one_two_negative,
    'wright_incomplete_gamma': wright_incomplete_gamma,
    'mainardi_f_inverse': mainardi_f_inverse,
    'mainardi_m_inverse': mainardi_m_inverse,
    'mainardi_f_scaled': mainardi_f_scaled,
    'mainardi_m_scaled': mainardi_m_scaled,
    'wright_second_kind_inverse': wright_second_kind_inverse,
    'half_levy_density': half_levy_density,
    'half_diffusion_kernel': half_diffusion_kernel,
    'half_erfc': half_erfc,
    'half_pointwise': half_pointwise,
    'weighted_half_f': weighted_half_f,
    'weighted_half_wright': weighted_half_wright,
    'third_density': third_density,
    'third_scaled': third_scaled,
    'third_pointwise': third_pointwise,
}


@dataclass(frozen=True)
class TransformPair:
    """
    A named pair at fixed parameters with the grid it is checked on.

    The grid holds Laplace variables s, or arguments t for pointwise
    function identities. Only names and numbers are stored so the pair can
    be shipped to worker processes and rebuilt there.
    """
    name: str
    builder: str
    params: Tuple[Tuple[str, Any], ...]
    grid: Tuple[float, ...]
    provenance: str = ''

    def __post_init__(self):
        if self.builder not in PAIR_BUILDERS:
            raise ManifestError(f"Unknown pair builder {self.builder!r} in pair {self.name!r}")
        if not self.grid:
            raise ManifestError(f"Pair {self.name!r} has an empty grid")

    @property
    def param_dict(self) -> Dict[str, Any]:
        return dict(self.params)

    def setup(self) -> PairSetup:
        return PAIR_BUILDERS[self.builder](**self.param_dict)

    @property
    def time_function(self) -> Callable[[float], float]:
        return self.setup().time_function

    @property
    def image_function(self) -> Callable[[float], float]:
        return self.setup().image_function


def expand_entry(entry: Dict[str, Any]) -> List[TransformPair]:
    """
    Expand one manifest entry into concrete pairs.

    Args:
        entry (Dict[str, Any]): Manifest entry with name, grid and optional builder, cases, vary

    Returns:
        List[TransformPair]: One pair per parameter combination
    """
    try:
        name = entry['name']
        builder = entry.get('builder', name)
        grid = tuple(float(v) for v in entry['grid'])
    except (KeyError, TypeError, ValueError) as e:
        raise ManifestError(f"Malformed pair entry {entry!r}: {str(e)}") from e

    return [TransformPair(name=name, builder=builder, params=tuple(params.items()), grid=grid,
                          provenance=entry.get('provenance', ''))
            for params in expand_parameters(entry)]


def load_pair_manifest(path: Union[str, Path]) -> List[TransformPair]:
    """
    Read a YAML pair manifest.

    Args:
        path (Union[str, Path]): Manifest file with a top-level 'pairs' list

    Returns:
        List[TransformPair]: Expanded pairs in manifest order
    """
    pairs = []
    for entry in read_manifest(path, 'pairs'):
        pairs.extend(expand_entry(entry))
    return pairs
