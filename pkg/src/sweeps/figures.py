import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from src.kernels.series import SeriesSettings
from src.utils.config import DEFAULTS, resolve_workers
from src.utils.errors import DomainError, ManifestError, SeriesConvergenceError
from src.utils.logger import setup_logger
from src.utils.manifest import read_manifest
from src.utils.parallel import parallel_map
from src.wright.registry import lookup

CURVE_COLUMNS = ['sweep_var', 'value', 'result', 'terms_used', 'converged']


@dataclass(frozen=True)
class SweepSpec:
    """
    One curve: a registered function evaluated along a grid of one parameter.

    ``grid`` is (start, stop, step); the stop value is included when it lies
    on the grid.
    """
    name: str
    target: str
    fixed: Tuple[Tuple[str, float], ...]
    sweep_var: str
    grid: Tuple[float, float, float]
    output: str

    def __post_init__(self):
        start, stop, step = self.grid
        if not all(math.isfinite(v) for v in self.grid):
            raise ManifestError(f"Sweep {self.name}: grid values must be finite")
        if step <= 0 or start >= stop:
            raise ManifestError(f"Sweep {self.name}: grid needs step > 0 and start < stop, "
                                f"got {self.grid}")
        try:
            entry = lookup(self.target)
        except DomainError as e:
            raise ManifestError(f"Sweep {self.name}: {str(e)}") from e
        covered = sorted([k for k, _ in self.fixed] + [self.sweep_var])
        if covered != sorted(entry.params):
            raise ManifestError(f"Sweep {self.name}: fixed parameters and sweep variable must cover "
                                f"exactly {', '.join(entry.params)} of {entry.name}")

    @property
    def values(self) -> np.ndarray:
        start, stop, step = self.grid
        count = int(math.floor((stop - start) / step + 1.0e-9)) + 1
        return np.round(start + step * np.arange(count), 12)

    def point(self, value: float) -> Dict[str, float]:
        params = dict(self.fixed)
        params[self.sweep_var] = float(value)
        return params


@dataclass(frozen=True)
class CurvePoint:
    sweep_value: float
    result: float
    terms_used: int
    converged: bool


@dataclass
class CurveResult:
    """Outcome of one curve of a sweep manifest."""
    name: str
    status: str
    path: Optional[Path] = None
    points: List[CurvePoint] = field(default_factory=list)
    message: str = ''

    @property
    def failed_points(self) -> int:
        return sum(1 for p in self.points if not p.converged)


@dataclass(frozen=True)
class Morphology:
    minimum_location: float
    minimum_value: float
    interior_minima: int
    start_value: float
    end_value: float


def _evaluate_point(task: Tuple[str, Dict[str, float], float, Optional[SeriesSettings]]) -> CurvePoint:
    target, params, value, settings = task
    try:
        result = lookup(target)(params, settings)
        return CurvePoint(value, result.value, result.terms_used, result.converged)
    except SeriesConvergenceError as e:
        partial = e.partial
        if partial is None:
            return CurvePoint(value, math.nan, 0, False)
        return CurvePoint(value, partial.value, partial.terms_used, False)
    except (DomainError, OverflowError):
        return CurvePoint(value, math.nan, 0, False)


def run_sweep(spec: SweepSpec, settings: Optional[SeriesSettings] = None,
              workers: Optional[int] = 1) -> List[CurvePoint]:
    """
    Evaluate a sweep point by point.

    Points that fail to converge keep their partial value and are marked
    unconverged; the sweep continues.

    Args:
        spec (SweepSpec): Curve definition
        settings (Optional[SeriesSettings]): Series stopping rule
        workers (Optional[int]): Process-pool width, None for resolve_workers()

    Returns:
        List[CurvePoint]: One point per grid value, in grid order
    """
    tasks = [(spec.target, spec.point(v), float(v), settings) for v in spec.values]
    return parallel_map(_evaluate_point, tasks, workers=workers)


def curve_frame(spec: SweepSpec, points: Sequence[CurvePoint]) -> pd.DataFrame:
    return pd.DataFrame({
        'sweep_var': [spec.sweep_var] * len(points),
        'value': [p.sweep_value for p in points],
        'result': [p.result for p in points],
        'terms_used': [p.terms_used for p in points],
        'converged': [p.converged for p in points],
    }, columns=CURVE_COLUMNS)


def write_curve(spec: SweepSpec, points: Sequence[CurvePoint], output_dir: Union[str, Path]) -> Path:
    """Write a curve as CSV with 17 significant digits and LF line endings."""
    path = Path(output_dir) / spec.output
    path.parent.mkdir(parents=True, exist_ok=True)
    curve_frame(spec, points).to_csv(path, index=False, float_format='%.17g', lineterminator='\n')
    return path


def analyze_morphology(points: Sequence[CurvePoint], lower: Optional[float] = None) -> Morphology:
    """
    Shape summary of a curve.

    Args:
        points (Sequence[CurvePoint]): Curve in grid order
        lower (Optional[float]): Ignore points with sweep value <= lower

    Returns:
        Morphology: Global minimum, count of interior local minima and end values
    """
    kept = [p for p in points if lower is None or p.sweep_value > lower]
    x = np.array([p.sweep_value for p in kept], dtype=float)
    y = np.array([p.result for p in kept], dtype=float)
    if len(y) == 0 or not np.all(np.isfinite(y)):
        raise DomainError("Morphology needs a non-empty curve of finite values")

    i = int(np.argmin(y))
    inner = y[1:-1]
    interior = int(np.sum((inner < y[:-2]) & (inner < y[2:]))) if len(y) > 2 else 0
    return Morphology(float(x[i]), float(y[i]), interior, float(y[0]), float(y[-1]))


def parse_sweep_entry(entry: Dict[str, Any]) -> SweepSpec:
    """
    Build a SweepSpec from one manifest entry.

    Args:
        entry (Dict[str, Any]): Mapping with name, target, fixed, sweep_var, grid and output

    Returns:
        SweepSpec: Validated curve definition
    """
    try:
        name = str(entry['name'])
        fixed = entry.get('fixed') or {}
        if not isinstance(fixed, dict):
            raise ManifestError(f"Sweep {name}: 'fixed' must be a mapping")
        grid = tuple(float(v) for v in entry['grid'])
        if len(grid) != 3:
            raise ManifestError(f"Sweep {name}: grid must be [start, stop, step]")
        return SweepSpec(
            name=name,
            target=str(entry['target']),
            fixed=tuple((str(k), float(v)) for k, v in fixed.items()),
            sweep_var=str(entry['sweep_var']),
            grid=grid,
            output=str(entry.get('output', f"{name}.csv")),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ManifestError(f"Malformed sweep entry {entry!r}: {str(e)}") from e


class SweepRunner:
    """Runs the curves of a sweep manifest and writes one CSV per curve."""

    def __init__(self, config: Optional[Dict[str, Any]] = None, workers: Optional[int] = None):
        """
        Initialize the SweepRunner.

        Args:
            config (Optional[Dict[str, Any]]): Loaded configuration, defaults when None
            workers (Optional[int]): Process-pool width
        """
        self.config = config or DEFAULTS
        self.settings = SeriesSettings.from_config(self.config)
        self.workers = workers if workers is not None else resolve_workers(self.config)
        self.logger = setup_logger('SweepRunner')

    def run_spec(self, spec: SweepSpec, output_dir: Union[str, Path]) -> CurveResult:
        points = run_sweep(spec, self.settings, self.workers)
        path = write_curve(spec, points, output_dir)
        result = CurveResult(spec.name, 'ok', path, points)
        if result.failed_points:
            result.status = 'partial'
            self.logger.warning(f"Sweep {spec.name}: {result.failed_points} of {len(points)} "
                                f"points did not converge")
        self.logger.info(f"Sweep {spec.name} written to {path}")
        return result

    def run_manifest(self, manifest_path: Union[str, Path],
                     output_dir: Union[str, Path]) -> List[CurveResult]:
        """
        Run every curve of a manifest.

        An unreadable manifest raises ManifestError. An invalid curve is
        reported with status 'invalid' and the remaining curves still run.

        Args:
            manifest_path (Union[str, Path]): YAML file with a top-level 'sweeps' list
            output_dir (Union[str, Path]): Directory for the CSV files

        Returns:
            List[CurveResult]: One result per manifest entry
        """
        entries = read_manifest(manifest_path, 'sweeps')
        self.logger.info(f"Running {len(entries)} sweeps from {manifest_path}")
        results = []
        for entry in entries:
            try:
                spec = parse_sweep_entry(entry)
            except ManifestError as e:
                self.logger.error(f"Error in sweep entry: {str(e)}")
                results.append(CurveResult(str(entry.get('name', '?')), 'invalid', message=str(e)))
                continue
            try:
                results.append(self.run_spec(spec, output_dir))
            except Exception as e:
                self.logger.error(f"Error running sweep {spec.name}: {str(e)}")
                raise
        return results


def summary_frame(results: Sequence[CurveResult]) -> pd.DataFrame:
    return pd.DataFrame({
        'curve': [r.name for r in results],
        'status': [r.status for r in results],
        'points': [len(r.points) for r in results],
        'unconverged': [r.failed_points for r in results],
        'output': [str(r.path) if r.path else r.message for r in results],
    })
