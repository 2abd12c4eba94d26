"""Analytic identities checked against the series, quadrature and closed-form engines."""
import math
import warnings
from itertools import product
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from scipy import integrate

from src.kernels.bessel import (bessel_i, bessel_i_order_derivative,
                                bessel_i_order_derivative_quadrature, bessel_j_order_derivative,
                                bessel_j_order_derivative_quadrature)
from src.kernels.hypergeometric import hyp0f1, hyp2f1
from src.kernels.scalar import incomplete_gamma_ladder, lower_incomplete_gamma, psi_over_gamma
from src.kernels.series import SeriesSettings
from src.laplace.explicit import (ml_explicit, ml_half_integer, ml_one_five_halves, ml_one_one,
                                  ml_one_three_halves, ml_one_two)
from src.limits.lamborn import lamborn_hyp_factor, lamborn_kernel, lamborn_limit
from src.sweeps.figures import SweepSpec, analyze_morphology, run_sweep
from src.utils.config import DEFAULTS, resolve_workers
from src.utils.logger import setup_logger
from src.verification.report import (INFO, VerificationReport, VerificationRow, compare,
                                      error_row, format_params)
from src.wright import derivatives
from src.wright.closed_forms import (alpha_derivative_closed_sum, bessel_reduction,
                                     beta_derivative_closed_sum, closed_form_dWbeta_bessel,
                                     dW_dx_bessel_form, mainardi_f_third, mainardi_m_half,
                                     mainardi_m_third)
from src.wright.core import (WrightParams, mainardi_f, mainardi_m, mainardi_tail_cutoff,
                             mittag_leffler, wright)

FIRST_STEP = 5.0e-4
SECOND_STEP = 2.0e-3

FD_ALPHAS = (0.5, 1.0, 2.0)
FD_BETAS = (0.5, 1.0, 1.5)
FD_TS = (0.5, 1.0, 2.0)
FD_SIGMAS = (0.25, 0.5, 0.75)

MAINARDI_SIGMAS = (0.2, 1.0 / 3.0, 0.5, 0.8)
MAINARDI_TS = (0.5, 1.0, 2.0)

MORPHOLOGY_TS = (0.5, 1.0, 1.5, 1.75, 2.0)
MORPHOLOGY_GRID = (0.0, 5.0, 0.05)
# smallest t at which the minimum of each curve lies inside (0, 1)
MINIMUM_IN_UNIT_FROM = {'dW_dalpha': 1.0, 'dW_dbeta': 1.75}


def central_difference(f: Callable[[float], float], x: float, h: float = FIRST_STEP) -> float:
    """Five-point first derivative, error O(h^4)."""
    return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)


def second_difference(f: Callable[[float], float], x: float, h: float = SECOND_STEP) -> float:
    return (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x)
            + 16.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h * h)


def _m(sigma: float, t: float) -> float:
    return mainardi_m(sigma, t, cross_check=False).value


def _f(sigma: float, t: float) -> float:
    return mainardi_f(sigma, t).value


def _check_row(name: str, params: Dict[str, Any], lhs: float, rhs: float,
               passed: bool, verdict: str = '') -> VerificationRow:
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(rhs) if rhs else math.inf
    return VerificationRow(name, format_params(params), lhs, rhs, abs_err, rel_err, passed, verdict)


class IdentitySuite:
    """
    Identity checks grouped by subject.

    Each group returns rows; a failing evaluation becomes an ERROR row and
    the remaining checks still run.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None, workers: Optional[int] = None):
        """
        Initialize the IdentitySuite.

        Args:
            config (Optional[Dict[str, Any]]): Loaded configuration, defaults when None
            workers (Optional[int]): Process-pool width for the figure sweeps
        """
        self.config = config or DEFAULTS
        self.settings = SeriesSettings.from_config(self.config)
        self.workers = workers if workers is not None else resolve_workers(self.config)
        self.orders = tuple(float(nu) for nu in self.config.get('lamborn', DEFAULTS['lamborn'])
                            .get('orders', DEFAULTS['lamborn']['orders']))
        self.logger = setup_logger('IdentitySuite')

    def _checked(self, name: str, params: Dict[str, Any], lhs: Callable[[], float],
                 rhs: Callable[[], float], rel_tol: float, abs_tol: float = 0.0) -> VerificationRow:
        try:
            return compare(name, params, lhs(), rhs(), rel_tol, abs_tol)
        except Exception as e:
            self.logger.error(f"Error evaluating {name} at {format_params(params)}: {str(e)}")
            return error_row(name, params, e)

    def bessel_reductions(self) -> List[VerificationRow]:
        """W_{1,β+1}(∓t²/4) against (2/t)^β J_β(t) and (2/t)^β I_β(t)."""
        rows = []
        for beta, t, sign in product((0.0, 0.5, 1.0, 2.0), np.arange(1, 21) * 0.5, ('-', '+')):
            t = float(t)
            x = -0.25 * t * t if sign == '-' else 0.25 * t * t
            rows.append(self._checked(
                'bessel_reduction', {'beta': beta, 't': t, 'sign': sign},
                lambda: wright(1.0, beta + 1.0, x, self.settings),
                lambda: bessel_reduction(beta, t, sign),
                rel_tol=1.0e-10, abs_tol=1.0e-12))
        return rows

    def explicit_mittag_leffler(self) -> List[VerificationRow]:
        rows = []
        for beta, z in product((0.5, 1.0, 1.5, 2.0, 2.5, 3.0), (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 5.0)):
            rows.append(self._checked(
                'ml_explicit', {'beta': beta, 'z': z},
                lambda: ml_explicit(beta, z),
                lambda: mittag_leffler(1.0, beta + 1.0, z, self.settings).value,
                rel_tol=1.0e-10))

        named = [('ml_one_one', 1.0, ml_one_one), ('ml_one_two', 2.0, ml_one_two),
                 ('ml_one_three_halves', 1.5, ml_one_three_halves),
                 ('ml_one_five_halves', 2.5, ml_one_five_halves)]
        for (name, beta, func), z in product(named, (0.5, 1.0, 2.0, 5.0)):
            rows.append(self._checked(
                name, {'z': z}, lambda: func(z),
                lambda: mittag_leffler(1.0, beta, z, self.settings).value, rel_tol=1.0e-10))

        for n, z in product(range(4), (0.5, 2.0)):
            rows.append(self._checked(
                'ml_half_integer', {'n': n, 'z': z}, lambda: ml_half_integer(n, z),
                lambda: mittag_leffler(1.0, n + 1.5, z, self.settings).value, rel_tol=1.0e-10))

        for a0, z in product((0.5, 1.0), (0.5, 2.0, 10.0)):
            rows.append(self._checked(
                'incomplete_gamma_ladder', {'a': a0 + 3, 'z': z},
                lambda: incomplete_gamma_ladder(a0, z, 3)[-1],
                lambda: lower_incomplete_gamma(a0 + 3.0, z), rel_tol=1.0e-12))
        return rows

    def _first_kind_differences(self) -> List[VerificationRow]:
        rows = []
        s = self.settings
        for alpha, beta, t in product(FD_ALPHAS, FD_BETAS, FD_TS):
            p = WrightParams(alpha, beta)
            params = {'alpha': alpha, 'beta': beta, 't': t}
            cases = [
                ('dW_dalpha', lambda: derivatives.dW_dalpha(p, t, s).value,
                 lambda: central_difference(lambda a: wright(a, beta, t, s), alpha)),
                ('dW_dbeta', lambda: derivatives.dW_dbeta(p, t, s).value,
                 lambda: central_difference(lambda b: wright(alpha, b, t, s), beta)),
                ('dE_dalpha', lambda: derivatives.dE_dalpha(alpha, beta, t, s).value,
                 lambda: central_difference(lambda a: mittag_leffler(a, beta, t, s).value, alpha)),
                ('dE_dbeta', lambda: derivatives.dE_dbeta(alpha, beta, t, s).value,
                 lambda: central_difference(lambda b: mittag_leffler(alpha, b, t, s).value, beta)),
                ('d2W_dalpha2', lambda: derivatives.d2W_dalpha2(p, t, s).value,
                 lambda: second_difference(lambda a: wright(a, beta, t, s), alpha)),
                ('d2W_dbeta2', lambda: derivatives.d2W_dbeta2(p, t, s).value,
                 lambda: second_difference(lambda b: wright(alpha, b, t, s), beta)),
                ('d2E_dalpha2', lambda: derivatives.d2E_dalpha2(alpha, beta, t, s).value,
                 lambda: second_difference(lambda a: mittag_leffler(a, beta, t, s).value, alpha)),
                ('d2E_dbeta2', lambda: derivatives.d2E_dbeta2(alpha, beta, t, s).value,
                 lambda: second_difference(lambda b: mittag_leffler(alpha, b, t, s).value, beta)),
            ]
            for name, analytic, numeric in cases:
                second = name.startswith('d2')
                rows.append(self._checked(
                    f"{name}_finite_difference", params, analytic, numeric,
                    rel_tol=1.0e-4 if second else 1.0e-6,
                    abs_tol=1.0e-6 if second else 1.0e-8))
        return rows

    def _sigma_differences(self) -> List[VerificationRow]:
        rows = []
        s = self.settings
        for sigma, t in product(FD_SIGMAS, FD_TS):
            params = {'sigma': sigma, 't': t}
            cases = [
                ('dF_dsigma', lambda: derivatives.dF_dsigma(sigma, t, s).value,
                 lambda: central_difference(lambda q: _f(q, t), sigma)),
                ('dM_dsigma', lambda: derivatives.dM_dsigma(sigma, t, s).value,
                 lambda: central_difference(lambda q: _m(q, t), sigma)),
                ('d2F_dsigma2', lambda: derivatives.d2F_dsigma2(sigma, t, s).value,
                 lambda: second_difference(lambda q: _f(q, t), sigma)),
                ('d2M_dsigma2', lambda: derivatives.d2M_dsigma2(sigma, t, s).value,
                 lambda: second_difference(lambda q: _m(q, t), sigma)),
            ]
            for name, analytic, numeric in cases:
                second = name.startswith('d2')
                rows.append(self._checked(
                    f"{name}_finite_difference", params, analytic, numeric,
                    rel_tol=1.0e-4 if second else 1.0e-6,
                    abs_tol=1.0e-6 if second else 1.0e-8))
        return rows

    def finite_differences(self) -> List[VerificationRow]:
        """Every parameter derivative against central differences of the function itself."""
        return self._first_kind_differences() + self._sigma_differences()

    def closed_sums(self) -> List[VerificationRow]:
        """α- and β-derivative series at α = 1, β ∈ {0, 1} against their Bessel closed forms."""
        rows = []
        for beta, x in product((0.0, 1.0), (0.25, 0.5, 1.0, 2.0, 4.0)):
            p = WrightParams(1.0, beta)
            params = {'beta': beta, 'x': x}
            rows.append(self._checked(
                'alpha_derivative_closed_sum', params,
                lambda: derivatives.dW_dalpha(p, x, self.settings).value,
                lambda: alpha_derivative_closed_sum(beta, x), rel_tol=1.0e-9, abs_tol=1.0e-9))
            rows.append(self._checked(
                'beta_derivative_closed_sum', params,
                lambda: derivatives.dW_dbeta(p, x, self.settings).value,
                lambda: beta_derivative_closed_sum(beta, x), rel_tol=1.0e-9, abs_tol=1.0e-9))
        return rows

    def order_derivatives(self) -> List[VerificationRow]:
        """Bessel order derivatives: closed forms against the series and against quadrature."""
        rows = []
        ts = (0.5, 1.0, 2.0, 4.0)
        for beta, t, sign in product((0.0, 0.5, 1.0), ts, ('-', '+')):
            x = -0.25 * t * t if sign == '-' else 0.25 * t * t
            rows.append(self._checked(
                'order_derivative_closed_form', {'beta': beta, 't': t, 'sign': sign},
                lambda: derivatives.dW_dbeta(WrightParams(1.0, beta + 1.0), x, self.settings).value,
                lambda: closed_form_dWbeta_bessel(beta, t, sign),
                rel_tol=1.0e-8, abs_tol=1.0e-12))

        for beta, x, sign in product((0.5, 1.0), (0.25, 2.25), ('-', '+')):
            rows.append(self._checked(
                'order_derivative_x_form', {'beta': beta, 'x': x, 'sign': sign},
                lambda: derivatives.dW_dbeta(WrightParams(1.0, beta + 1.0),
                                             -x if sign == '-' else x, self.settings).value,
                lambda: dW_dx_bessel_form(beta, x, sign), rel_tol=1.0e-8, abs_tol=1.0e-12))

        for beta, t in product((0.5, 1.0), ts):
            params = {'beta': beta, 't': t}
            rows.append(self._checked(
                'j_order_derivative_quadrature', params,
                lambda: bessel_j_order_derivative_quadrature(beta, t),
                lambda: bessel_j_order_derivative(beta, t), rel_tol=1.0e-7, abs_tol=1.0e-7))
            rows.append(self._checked(
                'i_order_derivative_quadrature', params,
                lambda: bessel_i_order_derivative_quadrature(beta, t),
                lambda: bessel_i_order_derivative(beta, t), rel_tol=1.0e-7, abs_tol=1.0e-7))
        return rows

    def _mainardi_mass(self, sigma: float) -> float:
        cutoff = mainardi_tail_cutoff(sigma)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore', integrate.IntegrationWarning)
            value, _ = integrate.quad(lambda t: _m(sigma, t), 0.0, cutoff,
                                      epsabs=1.0e-9, epsrel=1.0e-9, limit=200)
        return value

    def mainardi_structure(self) -> List[VerificationRow]:
        """F = σtM, the σ-derivative relations, closed forms at σ = 1/2, 1/3 and unit mass."""
        rows = []
        s = self.settings
        for sigma, t in product(MAINARDI_SIGMAS, MAINARDI_TS):
            params = {'sigma': sigma, 't': t}
            rows.append(self._checked(
                'mainardi_f_m_relation', params, lambda: _f(sigma, t),
                lambda: sigma * t * _m(sigma, t), rel_tol=1.0e-11, abs_tol=1.0e-14))
            rows.append(self._checked(
                'mainardi_sigma_derivative_relation', params,
                lambda: derivatives.dF_dsigma(sigma, t, s).value,
                lambda: t * _m(sigma, t) + sigma * t * derivatives.dM_dsigma(sigma, t, s).value,
                rel_tol=1.0e-8, abs_tol=1.0e-12))
            rows.append(self._checked(
                'mainardi_second_sigma_derivative_relation', params,
                lambda: derivatives.d2F_dsigma2(sigma, t, s).value,
                lambda: (2.0 * t * derivatives.dM_dsigma(sigma, t, s).value
                         + sigma * t * derivatives.d2M_dsigma2(sigma, t, s).value),
                rel_tol=1.0e-8, abs_tol=1.0e-12))

        for t in np.arange(0, 9) * 0.5:
            t = float(t)
            rows.append(self._checked('mainardi_half_gaussian', {'t': t}, lambda: _m(0.5, t),
                                      lambda: mainardi_m_half(t), rel_tol=1.0e-11))
        for x in (0.5, 1.0, 2.0):
            rows.append(self._checked('mainardi_third_airy', {'x': x}, lambda: _m(1.0 / 3.0, x),
                                      lambda: mainardi_m_third(x), rel_tol=1.0e-10))
            rows.append(self._checked('mainardi_third_airy_f', {'x': x}, lambda: _f(1.0 / 3.0, x),
                                      lambda: mainardi_f_third(x), rel_tol=1.0e-10))
        for sigma in (1.0 / 3.0, 0.5):
            rows.append(self._checked('mainardi_unit_mass', {'sigma': sigma},
                                      lambda: self._mainardi_mass(sigma), lambda: 1.0,
                                      rel_tol=1.0e-6))
        return rows

    def hypergeometric_identities(self) -> List[VerificationRow]:
        rows = []
        for a, z in product((2.0, 3.0, 5.5), (0.1, 0.3, 0.7)):
            rows.append(self._checked(
                'hyp2f1_sine_identity', {'a': a, 'z': z},
                lambda: hyp2f1(a, 1.0 - a, 1.5, math.sin(z) ** 2) * (2.0 * a - 1.0) * math.sin(z),
                lambda: math.sin((2.0 * a - 1.0) * z), rel_tol=1.0e-10, abs_tol=1.0e-12))
        for z in (0.5, 1.0, 2.0):
            rows.append(self._checked(
                'hyp0f1_modified_bessel', {'z': z}, lambda: hyp0f1(1.0, z),
                lambda: bessel_i(0.0, 2.0 * math.sqrt(z)), rel_tol=1.0e-12))
        for t, beta, nu in product((1.0, 2.0), (0.0, 0.5), (101, 201)):
            rows.append(self._checked(
                'terminating_direction_invariance', {'t': t, 'beta': beta, 'nu': nu},
                lambda: lamborn_hyp_factor(t, beta, nu),
                lambda: lamborn_hyp_factor(t, beta, nu, reverse=True),
                rel_tol=1.0e-13, abs_tol=1.0e-15))
        return rows

    def delta_kernel(self) -> List[VerificationRow]:
        """The kernel against its log-space form, and its unit mass."""
        rows = []
        for nu, xi in ((5.0, 1.0), (201.0, 0.5), (201.0, 1.0), (201.0, 3.0)):
            root = math.hypot(nu, xi)
            log_form = lambda: math.exp((nu + 1.0) * math.log(nu) - math.log(root)
                                        - nu * math.log(xi + root))
            rows.append(self._checked('lamborn_kernel_log_form', {'nu': nu, 'xi': xi},
                                      lambda: lamborn_kernel(xi, nu), log_form, rel_tol=1.0e-11))
        for nu in self.orders:
            rows.append(self._checked('lamborn_kernel_mass', {'nu': nu},
                                      lambda: lamborn_limit(lambda xi: 1.0, nu), lambda: 1.0,
                                      rel_tol=1.0e-8))
        return rows

    def _curve_rows(self, target: str, t: float, limit: float) -> Dict[str, Any]:
        spec = SweepSpec(name=f"{target}_t{t:g}", target=target, fixed=(('beta', 1.0), ('t', t)),
                         sweep_var='alpha', grid=MORPHOLOGY_GRID, output=f"{target}_t{t:g}.csv")
        shape = analyze_morphology(run_sweep(spec, self.settings, self.workers), lower=0.0)
        depth = limit - shape.minimum_value
        params = {'target': target, 'beta': 1.0, 't': t}
        rows = [
            _check_row('figure_single_minimum', params, float(shape.interior_minima), 1.0,
                       shape.interior_minima == 1),
            _check_row('figure_decay', params, abs(shape.end_value - limit), 0.05 * depth,
                       abs(shape.end_value - limit) <= 0.05 * depth),
        ]
        inside = 0.0 < shape.minimum_location < 1.0
        if t >= MINIMUM_IN_UNIT_FROM[target]:
            rows.append(_check_row('figure_minimum_location', params,
                                   shape.minimum_location, 1.0, inside))
        else:
            rows.append(_check_row('figure_minimum_location', params,
                                   shape.minimum_location, 1.0, True, INFO))
        return {'rows': rows, 'depth': depth}

    def figure_morphology(self) -> List[VerificationRow]:
        """
        Shape of the α-sweeps of ∂W/∂α and ∂W/∂β at β = 1.

        Depths are measured from the α → ∞ limit of each curve: 0 for the
        α-derivative and -ψ(1)/Γ(1) for the β-derivative.
        """
        limits = {'dW_dalpha': 0.0, 'dW_dbeta': -psi_over_gamma(1.0)}
        rows, depths = [], {}
        for target, t in product(limits, MORPHOLOGY_TS):
            try:
                curve = self._curve_rows(target, t, limits[target])
            except Exception as e:
                self.logger.error(f"Error analysing {target} sweep at t={t:g}: {str(e)}")
                rows.append(error_row('figure_morphology', {'target': target, 't': t}, e))
                continue
            rows.extend(curve['rows'])
            depths[(target, t)] = curve['depth']

        for target in limits:
            for low, high in zip(MORPHOLOGY_TS, MORPHOLOGY_TS[1:]):
                if (target, low) in depths and (target, high) in depths:
                    rows.append(_check_row(
                        'figure_depth_increases', {'target': target, 't_low': low, 't_high': high},
                        depths[(target, high)], depths[(target, low)],
                        depths[(target, high)] > depths[(target, low)]))
        for t in MORPHOLOGY_TS:
            if ('dW_dalpha', t) in depths and ('dW_dbeta', t) in depths:
                rows.append(_check_row(
                    'figure_beta_minimum_shallower', {'t': t},
                    depths[('dW_dbeta', t)], depths[('dW_dalpha', t)],
                    depths[('dW_dbeta', t)] <= depths[('dW_dalpha', t)]))
        return rows

    def run(self, suite: str = 'identities') -> VerificationReport:
        """
        Run every identity group.

        Args:
            suite (str): Report name

        Returns:
            VerificationReport: Rows of all groups in a fixed order
        """
        groups = [
            ('Bessel reductions', self.bessel_reductions),
            ('explicit Mittag-Leffler forms', self.explicit_mittag_leffler),
            ('finite differences', self.finite_differences),
            ('closed sums', self.closed_sums),
            ('order derivatives', self.order_derivatives),
            ('Mainardi structure', self.mainardi_structure),
            ('hypergeometric identities', self.hypergeometric_identities),
            ('delta kernel', self.delta_kernel),
            ('figure morphology', self.figure_morphology),
        ]
        report = VerificationReport(suite)
        for label, group in groups:
            self.logger.info(f"Checking {label}")
            rows = group()
            failed = sum(1 for row in rows if not row.passed)
            if failed:
                self.logger.warning(f"{label}: {failed} of {len(rows)} checks failed")
            report.extend(rows)
        return report
