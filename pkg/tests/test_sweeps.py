from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from src.sweeps.figures import (CURVE_COLUMNS, CurvePoint, SweepRunner, SweepSpec, analyze_morphology,
                                parse_sweep_entry, run_sweep, summary_frame, write_curve)
from src.utils.errors import DomainError, ManifestError
from src.utils.manifest import read_manifest
from src.wright.core import wright

FIGURES = Path(__file__).resolve().parents[1] / 'manifests' / 'figures.yaml'


@pytest.fixture
def small_spec():
    """W_{alpha,1}(1) over alpha in {0, 0.5, 1}."""
    return SweepSpec(name='small', target='wright', fixed=(('beta', 1.0), ('t', 1.0)),
                     sweep_var='alpha', grid=(0.0, 1.0, 0.5), output='small.csv')


def write_manifest(path, text):
    path.write_text(text)
    return path


def test_grid_includes_stop(small_spec):
    """Test grid construction with and without the stop value on the grid."""
    assert list(small_spec.values) == [0.0, 0.5, 1.0]
    spec = SweepSpec('g', 'wright', (('beta', 1.0), ('t', 1.0)), 'alpha', (0.0, 5.0, 0.05), 'g.csv')
    assert len(spec.values) == 101
    assert spec.values[-1] == 5.0
    assert spec.values[3] == 0.15
    off = SweepSpec('o', 'wright', (('beta', 1.0), ('t', 1.0)), 'alpha', (0.0, 1.0, 0.3), 'o.csv')
    assert list(off.values) == [0.0, 0.3, 0.6, 0.9]


@pytest.mark.parametrize('kwargs', [
    {'grid': (0.0, 1.0, 0.0)},
    {'grid': (1.0, 0.0, 0.1)},
    {'grid': (0.0, np.inf, 0.1)},
    {'target': 'bessel'},
    {'fixed': (('beta', 1.0),)},
    {'fixed': (('beta', 1.0), ('t', 1.0), ('sigma', 0.5))},
])
def test_spec_validation(kwargs):
    """Test rejected grids, targets and parameter coverage."""
    base = dict(name='bad', target='wright', fixed=(('beta', 1.0), ('t', 1.0)), sweep_var='alpha',
                grid=(0.0, 1.0, 0.5), output='bad.csv')
    base.update(kwargs)
    with pytest.raises(ManifestError):
        SweepSpec(**base)


def test_run_sweep_values(small_spec):
    """Test every point matches a direct evaluation."""
    points = run_sweep(small_spec, workers=1)
    assert [p.sweep_value for p in points] == [0.0, 0.5, 1.0]
    assert points[0].result == pytest.approx(np.e, rel=1e-14)
    for p in points:
        assert p.converged
        assert p.result == pytest.approx(wright(p.sweep_value, 1.0, 1.0), rel=1e-15)


def test_write_curve_format(small_spec, tmp_path):
    """Test the curve CSV columns, precision and line endings."""
    points = run_sweep(small_spec, workers=1)
    path = write_curve(small_spec, points, tmp_path)
    raw = path.read_bytes()
    assert b'\r' not in raw
    frame = pd.read_csv(path, float_precision='round_trip')
    assert list(frame.columns) == CURVE_COLUMNS
    assert (frame['sweep_var'] == 'alpha').all()
    assert frame['result'].iloc[0] == np.e
    assert raw.splitlines()[1].startswith(b'alpha,0,2.7182818284590451')


def test_curve_output_is_reproducible(small_spec, tmp_path):
    """Test two runs of the same sweep write byte-identical files."""
    first = write_curve(small_spec, run_sweep(small_spec, workers=1), tmp_path / 'first')
    second = write_curve(small_spec, run_sweep(small_spec, workers=1), tmp_path / 'second')
    assert first.read_bytes() == second.read_bytes()


def test_morphology_of_parabola():
    """Test minimum location, count of interior minima and end values."""
    xs = np.linspace(0.0, 3.0, 31)
    points = [CurvePoint(float(x), float((x - 1.0) ** 2), 1, True) for x in xs]
    shape = analyze_morphology(points)
    assert shape.minimum_location == pytest.approx(1.0)
    assert shape.interior_minima == 1
    assert shape.start_value == pytest.approx(1.0)
    assert shape.end_value == pytest.approx(4.0)
    assert analyze_morphology(points, lower=1.5).interior_minima == 0


def test_morphology_rejects_bad_curves():
    """Test empty and non-finite curves."""
    with pytest.raises(DomainError):
        analyze_morphology([])
    with pytest.raises(DomainError):
        analyze_morphology([CurvePoint(0.0, float('nan'), 0, False)])


def test_parse_entry():
    """Test manifest entries, including the default output name."""
    spec = parse_sweep_entry({'name': 'c1', 'target': 'dW_dalpha', 'fixed': {'beta': 1, 't': 2},
                              'sweep_var': 'alpha', 'grid': [0, 5, 0.05]})
    assert spec.output == 'c1.csv'
    assert spec.fixed == (('beta', 1.0), ('t', 2.0))
    for entry in ({'name': 'x'},
                  {'name': 'x', 'target': 'wright', 'fixed': [1], 'sweep_var': 'alpha', 'grid': [0, 1, 0.5]},
                  {'name': 'x', 'target': 'wright', 'fixed': {'beta': 1, 't': 1}, 'sweep_var': 'alpha',
                   'grid': [0, 1]}):
        with pytest.raises(ManifestError):
            parse_sweep_entry(entry)


def test_figure_manifest_is_valid():
    """Test the shipped figure manifest parses into 18 curves over alpha in [0, 5]."""
    specs = [parse_sweep_entry(entry) for entry in read_manifest(FIGURES, 'sweeps')]
    assert len(specs) == 18
    assert {spec.target for spec in specs} == {'dW_dalpha', 'dW_dbeta'}
    assert all(len(spec.values) == 101 for spec in specs)
    assert len({spec.output for spec in specs}) == 18


def test_runner_continues_past_invalid_entry(tmp_path):
    """Test an invalid curve is reported while the others are written."""
    manifest = write_manifest(tmp_path / 'm.yaml', """
sweeps:
  - {name: good, target: wright, fixed: {beta: 1.0, t: 1.0}, sweep_var: alpha, grid: [0.0, 1.0, 0.5]}
  - {name: bad, target: nope, fixed: {beta: 1.0, t: 1.0}, sweep_var: alpha, grid: [0.0, 1.0, 0.5]}
""")
    results = SweepRunner(workers=1).run_manifest(manifest, tmp_path / 'out')
    assert [r.status for r in results] == ['ok', 'invalid']
    assert (tmp_path / 'out' / 'good.csv').exists()
    assert not (tmp_path / 'out' / 'bad.csv').exists()
    summary = summary_frame(results)
    assert list(summary['status']) == ['ok', 'invalid']
    assert summary['points'].tolist() == [3, 0]


def test_runner_marks_unconverged_points(tmp_path):
    """Test a tiny term budget gives a partial curve with the partial values kept."""
    manifest = write_manifest(tmp_path / 'm.yaml', """
sweeps:
  - {name: tight, target: wright, fixed: {beta: 1.0, t: 5.0}, sweep_var: alpha, grid: [0.5, 1.0, 0.5]}
""")
    runner = SweepRunner({'series': {'max_terms': 3}}, workers=1)
    [result] = runner.run_manifest(manifest, tmp_path)
    assert result.status == 'partial'
    assert result.failed_points == 2
    assert all(np.isfinite(p.result) for p in result.points)


def test_empty_and_broken_manifests(tmp_path):
    """Test an empty manifest runs nothing and a broken one raises."""
    empty = write_manifest(tmp_path / 'empty.yaml', '')
    assert SweepRunner(workers=1).run_manifest(empty, tmp_path) == []
    broken = write_manifest(tmp_path / 'broken.yaml', 'sweeps: [unclosed\n')
    with pytest.raises(ManifestError):
        SweepRunner(workers=1).run_manifest(broken, tmp_path)


if __name__ == '__main__':
    pytest.main(['-v'])
