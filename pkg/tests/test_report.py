import math

import pandas as pd
import pytest

from src.verification.report import (ERROR, FAIL, PASS, REPORT_COLUMNS, ReportWriter, VerificationReport,
                                     compare, error_row, format_params)


@pytest.fixture
def report():
    """A report with one passing, one failing and one error row."""
    rep = VerificationReport('unit')
    rep.add(compare('identity_a', {'x': 0.1}, 1.0, 1.0 + 1e-12, rel_tol=1e-10))
    rep.add(compare('identity_a', {'x': 0.2}, 1.0, 1.1, rel_tol=1e-10))
    rep.add(error_row('identity_b', {'x': 0.3}, ZeroDivisionError('boom')))
    return rep


def test_format_params():
    """Test parameter rendering with 17 significant digits."""
    assert format_params({'alpha': 0.1, 'n': 2, 'sign': '-'}) == 'alpha=0.10000000000000001;n=2;sign=-'


def test_compare_relative_and_absolute():
    """Test the relative test, the absolute fallback for vanishing targets and NaN."""
    assert compare('c', {}, 1.0, 1.0 + 1e-9, rel_tol=1e-8).passed
    assert not compare('c', {}, 1.0, 1.1, rel_tol=1e-8).passed
    zero = compare('c', {}, 1e-13, 0.0, rel_tol=1e-8, abs_tol=1e-12)
    assert zero.passed
    assert zero.rel_err == math.inf
    assert not compare('c', {}, math.nan, 1.0, rel_tol=1.0).passed


def test_error_row():
    """Test error rows carry the exception and fail."""
    row = error_row('e', {'s': 1.0}, ValueError('bad'))
    assert not row.passed
    assert row.verdict == ERROR
    assert row.note == 'ValueError: bad'
    assert math.isnan(row.lhs)


def test_report_aggregates(report):
    """Test pass/fail aggregation and worst errors."""
    assert not report.passed
    assert len(report.failures) == 2
    assert report.max_rel_err == pytest.approx(0.1 / 1.1)
    assert report.max_abs_err == pytest.approx(0.1)
    records = report.to_frame()
    assert list(records.columns) == REPORT_COLUMNS
    assert list(records['verdict']) == [PASS, FAIL, ERROR]


def test_summary_groups_by_name(report):
    """Test the per-identity summary table."""
    summary = report.summary()
    assert list(summary['name']) == ['identity_a', 'identity_b']
    assert list(summary['points']) == [2, 1]
    assert list(summary['passed']) == [1, 0]
    assert VerificationReport('empty').summary().empty


def test_writer_output(report, tmp_path):
    """Test the CSV file name, columns and line endings."""
    path = ReportWriter(str(tmp_path / 'reports')).write(report)
    assert path.name == 'verify_unit.csv'
    assert b'\r\n' not in path.read_bytes()
    frame = pd.read_csv(path)
    assert list(frame.columns) == REPORT_COLUMNS
    assert len(frame) == 3
    assert frame['params'].iloc[0] == 'x=0.10000000000000001'
    custom = ReportWriter(str(tmp_path)).write(report, filename='custom.csv')
    assert custom.exists()


if __name__ == '__main__':
    pytest.main(['-v'])
