"""Delta-limit targets and the verifier that checks convergence towards them."""
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from src.kernels.bessel import bessel_j, bessel_k
from src.laplace.explicit import ml_explicit
from src.limits.lamborn import lamborn_limit, wright_limit_hyp
from src.utils.config import DEFAULTS, resolve_workers
from src.utils.errors import DomainError, ManifestError
from src.utils.logger import setup_logger
from src.utils.manifest import expand_parameters, read_manifest
from src.utils.parallel import parallel_map
from src.verification.report import (INFO, VerificationReport, VerificationRow, compare,
                                      error_row, format_params)
from src.wright.core import (WrightParams, mainardi_f, mainardi_tail_cutoff, mittag_leffler,
                             wright_eval)

# approximant(ν) and the value it should tend to
LimitSetup = Tuple[Callable[[float], float], float]

# Bessel-type integrands are bounded, so e^(-v) is negligible well before the
# point where their alternating series runs out of precision.
BOUNDED_TAIL_CUT = 60.0


def _w(alpha: float, beta: float, x: float) -> float:
    return wright_eval(WrightParams(alpha, beta), x).value


def _ml(alpha: float, beta: float, z: float) -> float:
    return mittag_leffler(alpha, beta, z).value


def _kernel_limit(f: Callable[[float], float], tail_cut: float) -> Callable[[float], float]:
    return lambda nu: lamborn_limit(f, nu, tail_cut)


def wright_ml(alpha: float, beta: float, lam: float, tail_cut: float) -> LimitSetup:
    """W_{α,β}(λξ) → E_{α,β}(λ)."""
    return _kernel_limit(lambda xi: _w(alpha, beta, lam * xi), tail_cut), _ml(alpha, beta, lam)


def wright_shifted(alpha: float, beta: float, lam: float, rho: float, sign: int,
                   tail_cut: float) -> LimitSetup:
    """e^(±ρξ) W_{α,β}(λξ) → E_{α,β}(λ/(1∓ρ)) / (1∓ρ)."""
    if not 0 < rho <= 0.5:
        raise DomainError(f"Shifted limits need 0 < rho <= 0.5, got rho={rho}")
    scale = 1.0 - sign * rho
    f = lambda xi: math.exp(sign * rho * xi) * _w(alpha, beta, lam * xi)
    return _kernel_limit(f, tail_cut), _ml(alpha, beta, lam / scale) / scale


def wright_weighted(alpha: float, beta: float, lam: float, tail_cut: float) -> LimitSetup:
    """ξ W_{α,β}(λξ) → [(α-β+1) E_{α,β}(λ) + E_{α,β-1}(λ)] / α."""
    target = ((alpha - beta + 1.0) * _ml(alpha, beta, lam) + _ml(alpha, beta - 1.0, lam)) / alpha
    return _kernel_limit(lambda xi: xi * _w(alpha, beta, lam * xi), tail_cut), target


def wright_incomplete(beta: float, lam: float, tail_cut: float) -> LimitSetup:
    """W_{1,β+1}(λξ) → E_{1,β+1}(λ) in incomplete-gamma form."""
    return _kernel_limit(lambda xi: _w(1.0, beta + 1.0, lam * xi), tail_cut), ml_explicit(beta, lam)


def exp_limit(lam: float, sign: int, tail_cut: float) -> LimitSetup:
    """W_{1,1}(±λξ) → e^(±λ)."""
    return _kernel_limit(lambda xi: _w(1.0, 1.0, sign * lam * xi), tail_cut), math.exp(sign * lam)


def w12_linear(lam: float, sign: int, tail_cut: float) -> LimitSetup:
    """W_{1,2}(-λξ) → (1 - e^(-λ))/λ and W_{1,2}(λξ) → (e^λ - 1)/λ."""
    target = -math.expm1(-lam) / lam if sign < 0 else math.expm1(lam) / lam
    return _kernel_limit(lambda xi: _w(1.0, 2.0, sign * lam * xi), tail_cut), target


def _bessel_ratio(lam: float) -> float:
    return lam / (1.0 + math.hypot(1.0, lam))


def j0_limit(lam: float, tail_cut: float) -> LimitSetup:
    """W_{1,1}(-λ²ξ²/4) → 1/√(1+λ²)."""
    f = lambda xi: _w(1.0, 1.0, -0.25 * (lam * xi) ** 2)
    return _kernel_limit(f, min(tail_cut, BOUNDED_TAIL_CUT)), 1.0 / math.hypot(1.0, lam)


def j1_limit(lam: float, tail_cut: float) -> LimitSetup:
    """W_{1,2}(-λ²ξ²/4) → 2/(1 + √(1+λ²))."""
    f = lambda xi: _w(1.0, 2.0, -0.25 * (lam * xi) ** 2)
    return _kernel_limit(f, min(tail_cut, BOUNDED_TAIL_CUT)), 2.0 / (1.0 + math.hypot(1.0, lam))


def j2_limit(lam: float, tail_cut: float) -> LimitSetup:
    """W_{1,3}(-λ²ξ²/4) → (r + r³/3)/λ with r = λ/(1 + √(1+λ²))."""
    r = _bessel_ratio(lam)
    f = lambda xi: _w(1.0, 3.0, -0.25 * (lam * xi) ** 2)
    return _kernel_limit(f, min(tail_cut, BOUNDED_TAIL_CUT)), (r + r ** 3 / 3.0) / lam


def weighted_half_f(n: int, lam: float, tail_cut: float) -> LimitSetup:
    """ξ^n F_{1/2}(λ/√ξ) → λ^{n+3/2} K_{n+1/2}(λ) / (2^{n+1/2} √π)."""
    cutoff = mainardi_tail_cutoff(0.5)

    def f(xi: float) -> float:
        x = lam / math.sqrt(xi)
        return xi ** n * mainardi_f(0.5, x).value if x <= cutoff else 0.0

    target = lam ** (n + 1.5) * bessel_k(n + 0.5, lam) / (2.0 ** (n + 0.5) * math.sqrt(math.pi))
    return _kernel_limit(f, tail_cut), target


def third_f(lam: float, tail_cut: float) -> LimitSetup:
    """F_{1/3}(λ/ξ^{1/3}) → (λ/3) e^(-λ)."""
    cutoff = mainardi_tail_cutoff(1.0 / 3.0)

    def f(xi: float) -> float:
        x = lam / xi ** (1.0 / 3.0)
        return mainardi_f(1.0 / 3.0, x).value if x <= cutoff else 0.0

    return _kernel_limit(f, tail_cut), lam / 3.0 * math.exp(-lam)


def hyp_bessel(t: float, beta: float, tail_cut: float) -> LimitSetup:
    """₂F₁ approximant / Γ(β+1) → W_{1,β+1}(-t²/4) = (2/t)^β J_β(t)."""
    return (lambda nu: wright_limit_hyp(t, beta, nu)), (2.0 / t) ** beta * bessel_j(beta, t)


LIMIT_BUILDERS: Dict[str, Callable[..., LimitSetup]] = {
    'wright_ml': wright_ml,
    'wright_shifted': wright_shifted,
    'wright_weighted': wright_weighted,
    'wright_incomplete': wright_incomplete,
    'exp_limit': exp_limit,
    'w12_linear': w12_linear,
    'j0_limit': j0_limit,
    'j1_limit': j1_limit,
    'j2_limit': j2_limit,
    'weighted_half_f': weighted_half_f,
    'third_f': third_f,
    'hyp_bessel': hyp_bessel,
}


@dataclass(frozen=True)
class LimitCase:
    """One limit at fixed parameters."""
    name: str
    builder: str
    params: Tuple[Tuple[str, Any], ...]

    def __post_init__(self):
        if self.builder not in LIMIT_BUILDERS:
            raise ManifestError(f"Unknown limit builder {self.builder!r} in {self.name!r}")

    @property
    def param_dict(self) -> Dict[str, Any]:
        return dict(self.params)

    def setup(self, tail_cut: float) -> LimitSetup:
        return LIMIT_BUILDERS[self.builder](tail_cut=tail_cut, **self.param_dict)


def load_limit_manifest(path: Union[str, Path]) -> List[LimitCase]:
    """
    Read a YAML limit manifest with a top-level 'limits' list.

    Args:
        path (Union[str, Path]): Manifest file

    Returns:
        List[LimitCase]: Expanded cases in manifest order
    """
    cases = []
    for entry in read_manifest(path, 'limits'):
        if 'name' not in entry:
            raise ManifestError(f"Limit entry without a name: {entry!r}")
        builder = entry.get('builder', entry['name'])
        for params in expand_parameters(entry):
            cases.append(LimitCase(entry['name'], builder, tuple(params.items())))
    return cases


def _evaluate_case(task: Tuple[LimitCase, Tuple[float, ...], float]
                   ) -> Tuple[List[float], float, Optional[Exception]]:
    case, orders, tail_cut = task
    try:
        approximant, target = case.setup(tail_cut)
        return [approximant(nu) for nu in orders], target, None
    except Exception as e:
        return [], math.nan, e


class LimitVerifier:
    """Checks that finite-order approximants approach their targets as ν grows."""

    def __init__(self, config: Optional[Dict[str, Any]] = None, workers: Optional[int] = None):
        """
        Initialize the LimitVerifier.

        Args:
            config (Optional[Dict[str, Any]]): Loaded configuration, defaults when None
            workers (Optional[int]): Process-pool width
        """
        self.config = config or DEFAULTS
        self.logger = setup_logger('LimitVerifier')
        lamborn = self.config.get('lamborn', DEFAULTS['lamborn'])
        self.orders = tuple(float(nu) for nu in lamborn.get('orders', DEFAULTS['lamborn']['orders']))
        self.tail_cut = float(lamborn.get('tail_cut', DEFAULTS['lamborn']['tail_cut']))
        section = self.config.get('verification', DEFAULTS['verification'])
        self.rel_tol = float(section.get('limit_rel_tol', DEFAULTS['verification']['limit_rel_tol']))
        self.workers = workers if workers is not None else resolve_workers(self.config)
        if len(self.orders) < 2:
            raise ManifestError("Delta-limit checks need at least two orders")

    def _rows(self, case: LimitCase, values: Sequence[float], target: float) -> List[VerificationRow]:
        rows = []
        for nu, value in zip(self.orders, values):
            params = dict(case.param_dict, nu=nu)
            row = compare(case.name, params, value, target, self.rel_tol)
            # only the largest order is held to the tolerance
            if nu != self.orders[-1]:
                row.passed = True
                row.verdict = INFO
            rows.append(row)

        first, last = abs(values[0] - target), abs(values[-1] - target)
        rows.append(VerificationRow(
            name=f"{case.name}_convergence",
            params=format_params(dict(case.param_dict, nu_low=self.orders[0], nu_high=self.orders[-1])),
            lhs=last, rhs=first, abs_err=last,
            rel_err=last / first if first > 0 else math.inf,
            passed=last < first,
        ))
        return rows

    def verify(self, cases: Sequence[LimitCase], suite: str = 'limits',
               progress: bool = False) -> VerificationReport:
        """
        Evaluate every case at every configured order.

        Each case yields one row per order, where the largest order must be
        within limit_rel_tol of the target, and a convergence row that
        passes when the error shrinks from the smallest to the largest order.

        Args:
            cases (Sequence[LimitCase]): Cases to check
            suite (str): Report name
            progress (bool): Show a progress bar

        Returns:
            VerificationReport: Rows in manifest order
        """
        self.logger.info(f"Checking {len(cases)} delta limits at orders {list(self.orders)}")
        tasks = [(case, self.orders, self.tail_cut) for case in cases]
        results = parallel_map(_evaluate_case, tasks, workers=self.workers,
                               desc='delta limits', progress=progress)
        report = VerificationReport(suite)
        for case, (values, target, error) in zip(cases, results):
            if error is not None:
                self.logger.error(f"Error evaluating limit {case.name}: {str(error)}")
                report.add(error_row(case.name, case.param_dict, error))
                continue
            report.extend(self._rows(case, values, target))
        return report
