import copy

import pytest

from src.utils.config import DEFAULT_CONFIG_PATH, DEFAULTS
from src.utils.errors import DomainError
from src.verification.report import VerificationReport, compare
from src.verification.suites import SUITES, SuiteRunner, manifest_path


@pytest.fixture
def limit_config(tmp_path):
    """Configuration pointing the manifests directory at a temporary folder."""
    config = copy.deepcopy(DEFAULTS)
    config['paths']['manifests_dir'] = str(tmp_path)
    (tmp_path / 'limits.yaml').write_text(
        "limits:\n"
        "  - name: hyp_bessel_j0\n"
        "    builder: hyp_bessel\n"
        "    cases:\n"
        "      - {t: 1.0, beta: 0.0}\n"
    )
    return config


def test_manifest_path_resolution(tmp_path):
    """Test relative directories hang off the repository root and absolute ones are kept."""
    assert manifest_path(DEFAULTS, 'pairs.yaml') == DEFAULT_CONFIG_PATH.parent / 'manifests' / 'pairs.yaml'
    assert manifest_path(DEFAULTS, 'pairs.yaml').exists()
    custom = {'paths': {'manifests_dir': str(tmp_path)}}
    assert manifest_path(custom, 'limits.yaml') == tmp_path / 'limits.yaml'
    assert manifest_path({}, 'limits.yaml').exists()


def test_unknown_suite_raises():
    """Test an unknown suite name is rejected."""
    with pytest.raises(DomainError):
        SuiteRunner(workers=1).run('everything')


def test_limits_suite_reads_configured_manifest(limit_config):
    """Test the limits suite runs the cases of the configured manifest."""
    report = SuiteRunner(limit_config, workers=1).run('limits')
    assert report.suite == 'limits'
    assert len(report.rows) == len(DEFAULTS['lamborn']['orders']) + 1
    assert report.passed, report.to_frame().to_string()


def test_all_concatenates_parts(monkeypatch):
    """Test 'all' runs every other suite in order."""
    calls = []

    def fake(part):
        def run(self):
            calls.append(part)
            report = VerificationReport(part)
            report.add(compare(f"{part}_check", {}, 1.0, 1.0, rel_tol=0.0))
            return report
        return run

    for part in SUITES[:-1]:
        monkeypatch.setattr(SuiteRunner, part, fake(part))
    report = SuiteRunner(workers=1).run('all')
    assert calls == list(SUITES[:-1])
    assert report.suite == 'all'
    assert [row.name for row in report.rows] == [f"{part}_check" for part in SUITES[:-1]]
    assert report.passed


if __name__ == '__main__':
    pytest.main(['-v'])
