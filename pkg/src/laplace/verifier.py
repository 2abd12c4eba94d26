from dataclasses import replace
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.laplace.pairs import PairSetup, TransformPair
from src.laplace.quadrature import CompactSupport, QuadratureSpec, TailBound, laplace_forward
from src.utils.config import DEFAULTS, resolve_workers
from src.utils.logger import setup_logger
from src.utils.parallel import parallel_map
from src.verification.report import VerificationReport, VerificationRow, compare, error_row
from src.wright.core import WrightParams, mainardi_tail_cutoff, mittag_leffler, wright_eval

# (pair, grid point, quadrature spec, rel_tol, abs_tol, pointwise rel_tol)
PointTask = Tuple[TransformPair, float, QuadratureSpec, float, float, float]


def evaluate_setup(setup: PairSetup, point: float, spec: QuadratureSpec) -> Tuple[float, float]:
    """Both sides of a pair at one grid point: (computed side, reference side)."""
    if setup.pointwise:
        return setup.time_function(point), setup.image_function(point)
    point_spec = spec.with_bound(setup.bound)
    if setup.abs_tol is not None:
        point_spec = replace(point_spec, abs_tol=max(point_spec.abs_tol, setup.abs_tol))
    result = laplace_forward(setup.time_function, point, point_spec, setup.chart)
    return result.value, setup.image_function(point)


def _verify_point(task: PointTask) -> VerificationRow:
    pair, point, spec, rel_tol, abs_tol, pointwise_rel_tol = task
    params = dict(pair.param_dict)
    try:
        setup = pair.setup()
        params['t' if setup.pointwise else 's'] = point
        lhs, rhs = evaluate_setup(setup, point, spec)
        if setup.pointwise:
            return compare(pair.name, params, lhs, rhs, pointwise_rel_tol)
        return compare(pair.name, params, lhs, rhs, rel_tol, abs_tol)
    except Exception as e:
        params.setdefault('s', point)
        return error_row(pair.name, params, e)


def _second_kind_point(task: Tuple[float, float, float, QuadratureSpec, float]) -> VerificationRow:
    sigma, beta, s, spec, rel_tol = task
    name = 'second_kind_transform'
    params = {'sigma': sigma, 'beta': beta, 's': s}
    try:
        p = WrightParams(-sigma, beta)
        cutoff = mainardi_tail_cutoff(sigma)

        def time_function(t: float) -> float:
            return wright_eval(p, -t).value if t <= cutoff else 0.0

        lhs = laplace_forward(time_function, s, spec.with_bound(CompactSupport(cutoff))).value
        rhs = mittag_leffler(sigma, beta + sigma, -s).value
        return compare(name, params, lhs, rhs, rel_tol)
    except Exception as e:
        return error_row(name, params, e)


def _combined_bound(a: float, first: TailBound, b: float, second: TailBound) -> TailBound:
    """Envelope of a·f + b·g for t ≥ 1 from the envelopes of f and g."""
    return TailBound(
        amplitude=abs(a) * first.amplitude + abs(b) * second.amplitude,
        rate=max(first.rate, second.rate),
        power=max(first.power, second.power),
        degree=max(first.degree, second.degree),
        shift=max(first.shift, second.shift),
    )


class PairVerifier:
    """Checks transform pairs by forward quadrature of their time sides."""

    def __init__(self, config: Optional[Dict[str, Any]] = None, workers: Optional[int] = None):
        """
        Initialize the PairVerifier.

        Args:
            config (Optional[Dict[str, Any]]): Loaded configuration, defaults when None
            workers (Optional[int]): Process-pool width, defaults to resolve_workers(config)
        """
        self.config = config or DEFAULTS
        self.logger = setup_logger('PairVerifier')
        self.spec = QuadratureSpec.from_config(self.config)
        section = self.config.get('verification', DEFAULTS['verification'])
        self.rel_tol = float(section.get('pair_rel_tol', DEFAULTS['verification']['pair_rel_tol']))
        self.abs_tol = float(section.get('pair_abs_tol', DEFAULTS['verification']['pair_abs_tol']))
        self.pointwise_rel_tol = float(section.get('pointwise_rel_tol',
                                                   DEFAULTS['verification']['pointwise_rel_tol']))
        self.seed = int(section.get('linearity_seed', DEFAULTS['verification']['linearity_seed']))
        self.workers = workers if workers is not None else resolve_workers(self.config)

    def _tasks(self, pairs: Iterable[TransformPair]) -> List[PointTask]:
        return [(pair, point, self.spec, self.rel_tol, self.abs_tol, self.pointwise_rel_tol)
                for pair in pairs for point in pair.grid]

    def verify_pair(self, pair: TransformPair) -> VerificationReport:
        """
        Verify one pair over its grid.

        Args:
            pair (TransformPair): Pair to check

        Returns:
            VerificationReport: One row per grid point
        """
        return self.verify_pairs([pair], suite=pair.name)

    def verify_pairs(self, pairs: Sequence[TransformPair], suite: str = 'laplace',
                     progress: bool = False) -> VerificationReport:
        """
        Verify many pairs; grid points are evaluated independently.

        Failures at single points become ERROR rows and the run continues.

        Args:
            pairs (Sequence[TransformPair]): Pairs to check
            suite (str): Report name
            progress (bool): Show a progress bar

        Returns:
            VerificationReport: Rows in manifest and grid order
        """
        tasks = self._tasks(pairs)
        self.logger.info(f"Verifying {len(pairs)} transform pairs at {len(tasks)} grid points")
        report = VerificationReport(suite)
        report.extend(parallel_map(_verify_point, tasks, workers=self.workers,
                                   desc='laplace pairs', progress=progress))
        for row in report.failures:
            self.logger.warning(f"Pair {row.name} failed at {row.params}: "
                                f"rel_err={row.rel_err:.3e} {row.note}".rstrip())
        return report

    def second_kind_transform_check(self, sigma: float, beta: float,
                                    s_grid: Sequence[float]) -> VerificationReport:
        """
        Check that W_{-σ,β}(-t) transforms into E_{σ,β+σ}(-s).

        The time side is integrated up to the argument where the function
        has decayed below significance.

        Args:
            sigma (float): σ in (0, 1)
            beta (float): β ≥ 0
            s_grid (Sequence[float]): Laplace variables

        Returns:
            VerificationReport: One row per s
        """
        tasks = [(float(sigma), float(beta), float(s), self.spec, self.rel_tol) for s in s_grid]
        report = VerificationReport('second_kind_transform')
        report.extend(parallel_map(_second_kind_point, tasks, workers=self.workers))
        return report

    def linearity_check(self, first: PairSetup, second: PairSetup,
                        s_grid: Sequence[float], trials: int = 3) -> VerificationReport:
        """
        L{a f + b g} = a L{f} + b L{g} for seeded random a, b.

        Both setups must integrate in t directly (no chart) and carry a TailBound.

        Args:
            first (PairSetup): Supplies f
            second (PairSetup): Supplies g
            s_grid (Sequence[float]): Laplace variables
            trials (int): Random coefficient pairs per s

        Returns:
            VerificationReport: One row per (trial, s)
        """
        rng = np.random.default_rng(self.seed)
        report = VerificationReport('laplace_linearity')
        for trial in range(trials):
            a, b = rng.uniform(-2.0, 2.0, size=2)
            bound = _combined_bound(a, first.bound, b, second.bound)
            for s in s_grid:
                params = {'trial': trial, 'a': float(a), 'b': float(b), 's': float(s)}
                try:
                    combined = laplace_forward(
                        lambda t: a * first.time_function(t) + b * second.time_function(t),
                        s, self.spec.with_bound(bound)).value
                    separate = (a * laplace_forward(first.time_function, s,
                                                    self.spec.with_bound(first.bound)).value
                                + b * laplace_forward(second.time_function, s,
                                                      self.spec.with_bound(second.bound)).value)
                    report.add(compare('laplace_linearity', params, combined, separate,
                                       self.rel_tol, self.abs_tol))
                except Exception as e:
                    self.logger.error(f"Error in linearity check at s={s:g}: {str(e)}")
                    report.add(error_row('laplace_linearity', params, e))
        return report
