"""
Competing readings of published closed forms, decided numerically.

Each adjudication evaluates a printed reading and a corrected reading of
the same quantity next to an independent oracle (a defining series, a
finite difference or a quadrature). The verdict names the reading that
agrees with the oracle; when neither or both agree it is INCONCLUSIVE and
the row fails.
"""
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from src.kernels.bessel import bessel_i, bessel_j, bessel_k, bessel_y
from src.kernels.hypergeometric import hyp0f1
from src.kernels.scalar import digamma, erf, gamma, lower_incomplete_gamma, rgamma, trigamma
from src.laplace import pairs
from src.laplace.explicit import (half_integer_incomplete_gamma, ml_explicit, ml_half_integer,
                                  ml_one_five_halves)
from src.laplace.quadrature import QuadratureSpec
from src.laplace.verifier import evaluate_setup
from src.utils.config import DEFAULTS
from src.utils.logger import setup_logger
from src.utils.summation import compensated_sum
from src.verification.report import (INCONCLUSIVE, VerificationReport, VerificationRow,
                                      error_row, format_params)
from src.wright import derivatives
from src.wright.closed_forms import (alpha_derivative_closed_sum, beta_derivative_closed_sum,
                                     closed_form_dWbeta_bessel)
from src.wright.core import WrightParams, mainardi_f, mainardi_m, mittag_leffler, wright

PRINTED = 'PRINTED'
CORRECTED = 'CORRECTED'

FD_STEP = 1.0e-4


@dataclass
class Adjudication:
    name: str
    params: Dict[str, Any]
    printed: Callable[[], float]
    corrected: Callable[[], float]
    oracle: Callable[[], float]
    description: str = ''


@dataclass
class Verdict:
    """Values of both readings and the oracle, with the reading that matched."""
    adjudication: Adjudication
    printed: float
    corrected: float
    oracle: float
    tol: float
    matches: List[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return self.matches[0] if len(self.matches) == 1 else INCONCLUSIVE

    def as_row(self) -> VerificationRow:
        chosen = {PRINTED: self.printed, CORRECTED: self.corrected}.get(self.verdict, math.nan)
        abs_err = abs(chosen - self.oracle)
        rel_err = abs_err / abs(self.oracle) if self.oracle else abs_err
        return VerificationRow(
            name=self.adjudication.name,
            params=format_params(self.adjudication.params),
            lhs=chosen, rhs=self.oracle, abs_err=abs_err, rel_err=rel_err,
            passed=self.verdict != INCONCLUSIVE, verdict=self.verdict,
            note=f"printed={self.printed:.17g};corrected={self.corrected:.17g}",
        )


def _agrees(value: float, oracle: float, tol: float) -> bool:
    return math.isfinite(value) and abs(value - oracle) <= tol * max(abs(oracle), 1.0e-300)


def adjudicate(adjudication: Adjudication, tol: float) -> Verdict:
    """
    Evaluate both readings against the oracle.

    Args:
        adjudication (Adjudication): Readings and oracle
        tol (float): Relative agreement tolerance

    Returns:
        Verdict: Values and the matching readings
    """
    printed, corrected = adjudication.printed(), adjudication.corrected()
    oracle = adjudication.oracle()
    matches = [label for label, value in ((PRINTED, printed), (CORRECTED, corrected))
               if _agrees(value, oracle, tol)]
    return Verdict(adjudication, printed, corrected, oracle, tol, matches)


def _ml(alpha: float, beta: float, z: float) -> float:
    return mittag_leffler(alpha, beta, z).value


def _printed_second_alpha_series(alpha: float, beta: float, t: float, terms: int = 40) -> float:
    # coefficient ψ(αk+1)² - ψ'(αk+β) as printed
    values = []
    for k in range(1, terms):
        x = alpha * k + beta
        values.append(k * k * (digamma(alpha * k + 1.0) ** 2 - trigamma(x))
                      * t ** k / math.factorial(k) * rgamma(x))
    return compensated_sum(values)


def _laplace_side(setup: pairs.PairSetup, s: float, spec: QuadratureSpec) -> float:
    return evaluate_setup(setup, s, spec)[0]


def _root_pi_erf(z: float) -> float:
    return math.sqrt(math.pi) * erf(math.sqrt(z))


def derivative_adjudications() -> List[Adjudication]:
    p = WrightParams(1.0, 2.0)
    h = FD_STEP
    return [
        Adjudication(
            'second_alpha_derivative_coefficient', {'alpha': 1.0, 'beta': 2.0, 't': 1.0},
            printed=lambda: _printed_second_alpha_series(1.0, 2.0, 1.0),
            corrected=lambda: derivatives.d2W_dalpha2(p, 1.0).value,
            oracle=lambda: (derivatives.dW_dalpha(WrightParams(1.0 + h, 2.0), 1.0).value
                            - derivatives.dW_dalpha(WrightParams(1.0 - h, 2.0), 1.0).value) / (2 * h),
            description='ψ(αk+1)² against ψ(αk+β)² in the second α-derivative'),
        Adjudication(
            'alpha_derivative_sum_beta0', {'x': 1.0},
            printed=lambda: 1.0 * bessel_i(0.0, 2.0),
            corrected=lambda: alpha_derivative_closed_sum(0.0, 1.0),
            oracle=lambda: derivatives.dW_dalpha(WrightParams(1.0, 0.0), 1.0).value,
            description='t I₀(2√t) against -t[½ ln t I₀ + K₀]'),
        Adjudication(
            'alpha_derivative_sum_beta1', {'x': 1.0},
            printed=lambda: bessel_i(1.0, 2.0),
            corrected=lambda: alpha_derivative_closed_sum(1.0, 1.0),
            oracle=lambda: derivatives.dW_dalpha(WrightParams(1.0, 1.0), 1.0).value,
            description='√t I₁(2√t) against √t K₁ - ½ I₀ - ½ √t ln t I₁'),
        # at x = 1 both readings coincide
        Adjudication(
            'beta_derivative_sum_beta0', {'x': 2.0},
            printed=lambda: (0.5 * (2.0 * bessel_i(0.0, 2.0 * math.sqrt(2.0))
                                    - math.sqrt(2.0) * bessel_i(1.0, 2.0 * math.sqrt(2.0)) * math.log(2.0))
                             + math.sqrt(2.0) * bessel_k(1.0, 2.0 * math.sqrt(2.0))),
            corrected=lambda: beta_derivative_closed_sum(0.0, 2.0),
            oracle=lambda: derivatives.dW_dbeta(WrightParams(1.0, 0.0), 2.0).value,
            description='½[t I₀ - √t I₁ ln t] + √t K₁ against √t K₁ + ½ I₀ - ½ √t ln t I₁'),
        Adjudication(
            'beta_derivative_sum_beta1', {'x': 1.0},
            printed=lambda: bessel_i(0.0, 2.0),
            corrected=lambda: beta_derivative_closed_sum(1.0, 1.0),
            oracle=lambda: derivatives.dW_dbeta(WrightParams(1.0, 1.0), 1.0).value,
            description='I₀(2√t) against -½ ln t I₀ - K₀'),
        Adjudication(
            'mainardi_f_m_factor', {'sigma': 0.5, 't': 1.0},
            printed=lambda: -0.5 * 1.0 * mainardi_m(0.5, 1.0).value,
            corrected=lambda: 0.5 * 1.0 * mainardi_m(0.5, 1.0).value,
            oracle=lambda: mainardi_f(0.5, 1.0).value,
            description='F = -σtM against F = σtM'),
        Adjudication(
            'order_derivative_j_line', {'t': 1.5},
            printed=lambda: (2.0 / 1.5) * (-math.log(0.75) * bessel_j(1.0, 1.5)
                                           - bessel_j(0.0, 1.5) / 1.5
                                           + 0.5 * math.pi * bessel_y(1.0, 1.5)),
            corrected=lambda: closed_form_dWbeta_bessel(1.0, 1.5, '-'),
            oracle=lambda: derivatives.dW_dbeta(WrightParams(1.0, 2.0), -0.25 * 1.5 ** 2).value,
            description='sign of J₀(t)/t in the order derivative at β = 1'),
    ]


def laplace_adjudications(spec: QuadratureSpec) -> List[Adjudication]:
    alpha, beta, lam, s = 1.0, 1.5, 2.0, 3.0
    z = lam / s

    def printed_t_rule() -> float:
        return ((alpha * lam - beta + 1.0) * _ml(alpha, beta, z) + _ml(alpha, beta - 1.0, z)) \
            / (alpha * lam * s * s)

    def printed_five_halves(x: float) -> float:
        return math.exp(x) / x ** 1.5 * (_root_pi_erf(x) * math.exp(x) - x * math.exp(-x))

    def printed_seven_halves(x: float) -> float:
        inner = 2.0 * (_root_pi_erf(x) * math.exp(x) - x * math.exp(-x)) - x * x * math.exp(-x)
        return math.exp(x) / x ** 2.5 * inner

    def printed_weighted_half(n: int, lam_: float, s_: float) -> float:
        return (lam_ ** (n + 0.5) * s_ ** ((1.0 - 2.0 * n) / 4.0)
                * bessel_k(n - 0.5, lam_ * math.sqrt(s_)) / (2.0 ** (n - 0.5) * math.sqrt(math.pi)))

    return [
        Adjudication(
            't_multiplication_rule', {'alpha': alpha, 'beta': beta, 'lam': lam, 's': s},
            printed=printed_t_rule,
            corrected=lambda: pairs.wright_t_weighted(alpha, beta, lam).image_function(s),
            oracle=lambda: _laplace_side(pairs.wright_t_weighted(alpha, beta, lam), s, spec),
            description='placement of λ in the transform of t W_{α,β}(λt)'),
        Adjudication(
            'ml_explicit_gamma_factor', {'beta': 0.5, 'z': 1.0},
            printed=lambda: math.e * lower_incomplete_gamma(0.5, 1.0),
            corrected=lambda: ml_explicit(0.5, 1.0),
            oracle=lambda: _ml(1.0, 1.5, 1.0),
            description='missing 1/Γ(β) in E_{1,β+1}(z) = e^z γ(β,z) / z^β'),
        Adjudication(
            'incomplete_gamma_order_one', {'z': 2.0},
            printed=lambda: -math.expm1(-2.0) / 2.0,
            corrected=lambda: -math.expm1(-2.0),
            oracle=lambda: lower_incomplete_gamma(1.0, 2.0),
            description='γ(1,z) = (1 - e^-z)/z against 1 - e^-z'),
        Adjudication(
            'incomplete_gamma_five_halves', {'z': 2.0},
            printed=lambda: 2.0 * (_root_pi_erf(2.0) - 2.0 * math.exp(-2.0)) - 4.0 * math.exp(-2.0),
            corrected=lambda: half_integer_incomplete_gamma(2, 2.0),
            oracle=lambda: lower_incomplete_gamma(2.5, 2.0),
            description='printed γ(5/2,z) against the upward recurrence from γ(1/2,z)'),
        Adjudication(
            'ml_five_halves_form', {'z': 1.0},
            printed=lambda: printed_five_halves(1.0),
            corrected=lambda: ml_one_five_halves(1.0),
            oracle=lambda: _ml(1.0, 2.5, 1.0),
            description='stray e^z inside the bracket of E_{1,5/2}'),
        Adjudication(
            'ml_seven_halves_form', {'z': 1.0},
            printed=lambda: printed_seven_halves(1.0),
            corrected=lambda: ml_half_integer(2, 1.0),
            oracle=lambda: _ml(1.0, 3.5, 1.0),
            description='printed E_{1,7/2} against the incomplete-gamma ladder'),
        Adjudication(
            'weighted_half_transform_index', {'n': 1, 'lam': 1.0, 's': 2.0},
            printed=lambda: printed_weighted_half(1, 1.0, 2.0),
            corrected=lambda: pairs.weighted_half_f(1, 1.0).image_function(2.0),
            oracle=lambda: _laplace_side(pairs.weighted_half_f(1, 1.0), 2.0, spec),
            description='K index n-1/2 against n+1/2 in the transform of t^n F_{1/2}(λ/√t)'),
    ]


def limit_adjudications(spec: QuadratureSpec) -> List[Adjudication]:
    beta, lam = 1.5, 1.0

    def printed_weighted_target(n: int, lam_: float) -> float:
        return lam_ ** (n + 1) * bessel_k(n - 0.5, lam_) / (2.0 ** (n - 0.5) * math.sqrt(math.pi))

    def corrected_weighted_target(n: int, lam_: float) -> float:
        return lam_ ** (n + 1.5) * bessel_k(n + 0.5, lam_) / (2.0 ** (n + 0.5) * math.sqrt(math.pi))

    shift_core = lambda: lower_incomplete_gamma(beta, lam) / (lam ** beta * gamma(beta))
    return [
        Adjudication(
            'hyp_wright_gamma_factor', {'beta': 2.0, 't': 1.0},
            printed=lambda: hyp0f1(3.0, -0.25),
            corrected=lambda: hyp0f1(3.0, -0.25) * rgamma(3.0),
            oracle=lambda: wright(1.0, 3.0, -0.25),
            description='missing 1/Γ(β+1) between the hypergeometric limit and W_{1,β+1}'),
        Adjudication(
            'hyp_sine_limit', {'t': 1.5},
            printed=lambda: 2.0 * math.sin(1.5) / (math.sqrt(math.pi) * 1.5),
            corrected=lambda: math.sin(1.5) / 1.5,
            oracle=lambda: hyp0f1(1.5, -0.25 * 1.5 ** 2),
            description='limit of the hypergeometric approximant at β = 1/2'),
        Adjudication(
            'hyp_cosine_sign', {'t': 1.0},
            printed=lambda: -math.cos(1.0) / math.sqrt(math.pi),
            corrected=lambda: math.cos(1.0) / math.sqrt(math.pi),
            oracle=lambda: wright(1.0, 0.5, -0.25),
            description='sign of W_{1,1/2}(-t²/4) = cos t / √π'),
        Adjudication(
            'lamborn_shift_exponent', {'beta': beta, 'lam': lam},
            printed=lambda: math.exp(-lam) * shift_core(),
            corrected=lambda: math.exp(lam) * shift_core(),
            oracle=lambda: _ml(1.0, beta + 1.0, lam),
            description='e^-λ against e^λ in the incomplete-gamma limit target'),
        Adjudication(
            'lamborn_w12_target', {'lam': 1.0},
            printed=lambda: 2.0 * math.exp(-1.0) * math.sinh(0.5),
            corrected=lambda: -math.expm1(-1.0),
            oracle=lambda: _ml(1.0, 2.0, -1.0),
            description='limit target of W_{1,2}(-λξ)'),
        # at λ = 1 both readings coincide
        Adjudication(
            'lamborn_weighted_half_target', {'n': 1, 'lam': 2.0},
            printed=lambda: printed_weighted_target(1, 2.0),
            corrected=lambda: corrected_weighted_target(1, 2.0),
            oracle=lambda: _laplace_side(pairs.weighted_half_f(1, 2.0), 1.0, spec),
            description='limit target of ξ^n F_{1/2}(λ/√ξ)'),
    ]


class AdjudicationSuite:
    """Runs every adjudication and reports one verdict row each."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or DEFAULTS
        section = self.config.get('verification', DEFAULTS['verification'])
        self.tol = float(section.get('adjudication_tol', DEFAULTS['verification']['adjudication_tol']))
        self.spec = QuadratureSpec.from_config(self.config)
        self.logger = setup_logger('AdjudicationSuite')

    def catalog(self) -> List[Adjudication]:
        return (derivative_adjudications() + laplace_adjudications(self.spec)
                + limit_adjudications(self.spec))

    def run(self, suite: str = 'adjudications') -> VerificationReport:
        """
        Adjudicate every catalogued reading pair.

        Args:
            suite (str): Report name

        Returns:
            VerificationReport: One verdict row per adjudication
        """
        report = VerificationReport(suite)
        for adjudication in self.catalog():
            try:
                verdict = adjudicate(adjudication, self.tol)
            except Exception as e:
                self.logger.error(f"Error adjudicating {adjudication.name}: {str(e)}")
                report.add(error_row(adjudication.name, adjudication.params, e))
                continue
            if verdict.verdict == INCONCLUSIVE:
                self.logger.warning(f"{adjudication.name}: inconclusive, printed={verdict.printed:.6g}, "
                                    f"corrected={verdict.corrected:.6g}, oracle={verdict.oracle:.6g}")
            else:
                self.logger.info(f"{adjudication.name}: {verdict.verdict}")
            report.add(verdict.as_row())
        return report
