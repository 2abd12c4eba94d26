import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

import pandas as pd

from src.utils.logger import setup_logger

REPORT_COLUMNS = ['name', 'params', 'lhs', 'rhs', 'abs_err', 'rel_err', 'pass', 'verdict']

PASS = 'PASS'
FAIL = 'FAIL'
ERROR = 'ERROR'
INCONCLUSIVE = 'INCONCLUSIVE'
# informational rows always pass
INFO = 'INFO'


def format_params(params: Dict[str, Any]) -> str:
    """Render parameters as 'key=value;key=value' with 17 significant digits."""
    parts = []
    for key, value in params.items():
        if isinstance(value, float):
            value = f"{value:.17g}"
        parts.append(f"{key}={value}")
    return ';'.join(parts)


@dataclass
class VerificationRow:
    name: str
    params: str
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    passed: bool
    verdict: str = ''
    note: str = ''

    def as_record(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'params': self.params,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'abs_err': self.abs_err,
            'rel_err': self.rel_err,
            'pass': self.passed,
            'verdict': self.verdict or (PASS if self.passed else FAIL),
        }


def compare(name: str, params: Dict[str, Any], lhs: float, rhs: float,
            rel_tol: float, abs_tol: float = 0.0) -> VerificationRow:
    """
    Compare two evaluations of the same quantity.

    Passes when the relative error is within rel_tol or the absolute error
    within abs_tol (for targets that vanish).

    Args:
        name (str): Identity name
        params (Dict[str, Any]): Evaluation point
        lhs (float): Computed side
        rhs (float): Reference side
        rel_tol (float): Relative tolerance
        abs_tol (float): Absolute tolerance

    Returns:
        VerificationRow: Comparison row
    """
    lhs, rhs = float(lhs), float(rhs)
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(rhs) if rhs != 0 else (0.0 if abs_err == 0 else math.inf)
    passed = math.isfinite(abs_err) and (rel_err <= rel_tol or abs_err <= abs_tol)
    return VerificationRow(name, format_params(params), lhs, rhs, abs_err, rel_err, passed)


def error_row(name: str, params: Dict[str, Any], error: Exception) -> VerificationRow:
    return VerificationRow(name, format_params(params), math.nan, math.nan, math.nan, math.nan,
                           False, ERROR, f"{type(error).__name__}: {error}")


@dataclass
class VerificationReport:
    """Rows of one verification suite, with pass/fail aggregated over all of them."""
    suite: str
    rows: List[VerificationRow] = field(default_factory=list)

    def add(self, row: VerificationRow) -> None:
        self.rows.append(row)

    def extend(self, rows: Iterable[VerificationRow]) -> None:
        self.rows.extend(rows)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> List[VerificationRow]:
        return [row for row in self.rows if not row.passed]

    def _max(self, attr: str) -> float:
        values = [getattr(row, attr) for row in self.rows if math.isfinite(getattr(row, attr))]
        return max(values) if values else math.nan

    @property
    def max_abs_err(self) -> float:
        return self._max('abs_err')

    @property
    def max_rel_err(self) -> float:
        return self._max('rel_err')

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.as_record() for row in self.rows], columns=REPORT_COLUMNS)

    def summary(self) -> pd.DataFrame:
        """One line per identity name: points checked, points passed, worst relative error."""
        frame = self.to_frame()
        if frame.empty:
            return pd.DataFrame(columns=['name', 'points', 'passed', 'max_rel_err'])
        grouped = frame.groupby('name', sort=False)
        return pd.DataFrame({
            'points': grouped.size(),
            'passed': grouped['pass'].sum(),
            'max_rel_err': grouped['rel_err'].max(),
        }).reset_index()


class ReportWriter:
    """Writes verification reports as CSV files."""

    def __init__(self, output_dir: str):
        """
        Initialize the ReportWriter.

        Args:
            output_dir (str): Directory to save reports
        """
        self.output_dir = Path(output_dir)
        self.output_dir.mkdir(parents=True, exist_ok=True)
        self.logger = setup_logger('ReportWriter')

    def write(self, report: VerificationReport, filename: Optional[str] = None) -> Path:
        """
        Write a report as CSV with 17 significant digits and LF line endings.

        Args:
            report (VerificationReport): Report to write
            filename (Optional[str]): File name, defaults to verify_<suite>.csv

        Returns:
            Path: Path to the written file
        """
        try:
            output_path = self.output_dir / (filename or f"verify_{report.suite}.csv")
            report.to_frame().to_csv(output_path, index=False, float_format='%.17g',
                                     lineterminator='\n')
            self.logger.info(f"Verification report written: {output_path} "
                             f"({len(report.rows)} rows, {len(report.failures)} failing)")
            return output_path
        except Exception as e:
            self.logger.error(f"Error writing verification report: {str(e)}")
            raise
