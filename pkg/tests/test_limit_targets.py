import math
from pathlib import Path

import pytest
from scipy import special

from src.limits import targets
from src.limits.targets import LIMIT_BUILDERS, LimitCase, LimitVerifier, load_limit_manifest
from src.utils.config import DEFAULTS
from src.utils.errors import DomainError, ManifestError
from src.verification.report import ERROR, INFO, PASS

MANIFEST = Path(__file__).resolve().parents[1] / 'manifests' / 'limits.yaml'
TAIL_CUT = DEFAULTS['lamborn']['tail_cut']


@pytest.fixture
def verifier():
    """In-process limit verifier with the default orders."""
    return LimitVerifier(DEFAULTS, workers=1)


def test_repository_manifest_loads():
    """Test that the shipped manifest names only known builders."""
    cases = load_limit_manifest(MANIFEST)
    assert len(cases) > 15
    assert {case.builder for case in cases} <= set(LIMIT_BUILDERS)


def test_targets_are_known_values():
    """Test a few targets against independent values."""
    _, target = targets.exp_limit(1.0, -1, TAIL_CUT)
    assert target == pytest.approx(math.exp(-1.0))
    _, target = targets.j0_limit(1.0, TAIL_CUT)
    assert target == pytest.approx(1.0 / math.sqrt(2.0))
    _, target = targets.hyp_bessel(2.0, 0.0, TAIL_CUT)
    assert target == pytest.approx(float(special.j0(2.0)), rel=1e-14)
    _, target = targets.third_f(1.0, TAIL_CUT)
    assert target == pytest.approx(math.exp(-1.0) / 3.0)


def test_shifted_limit_range():
    """Test the shift parameter range."""
    with pytest.raises(DomainError):
        targets.wright_shifted(1.0, 1.0, 1.0, 0.9, 1, TAIL_CUT)


def test_verify_hypergeometric_case(verifier):
    """Test rows per order and the convergence row."""
    case = LimitCase('hyp_bessel_j0', 'hyp_bessel', (('t', 1.0), ('beta', 0.0)))
    report = verifier.verify([case])
    assert len(report.rows) == len(verifier.orders) + 1
    assert [row.as_record()['verdict'] for row in report.rows[:-1]] == [INFO, INFO, PASS]
    assert report.rows[-1].name == 'hyp_bessel_j0_convergence'
    assert report.passed


def test_verify_kernel_case(verifier):
    """Test a kernel-integral limit towards exp(-1)."""
    case = LimitCase('exp_limit', 'exp_limit', (('lam', 1.0), ('sign', -1)))
    report = verifier.verify([case])
    assert report.passed, report.to_frame().to_string()
    assert report.rows[-1].rel_err < 1.0


def test_failing_case_becomes_error_row(verifier):
    """Test a case that cannot be built gives an ERROR row."""
    bad = LimitCase('wright_shifted', 'wright_shifted',
                    (('alpha', 1.0), ('beta', 1.0), ('lam', 1.0), ('rho', 0.9), ('sign', 1)))
    report = verifier.verify([bad])
    assert len(report.rows) == 1
    assert report.rows[0].verdict == ERROR
    assert not report.passed


def test_manifest_and_config_errors(tmp_path):
    """Test unknown builders, nameless entries and a single order."""
    with pytest.raises(ManifestError):
        LimitCase('x', 'nope', ())
    nameless = tmp_path / 'limits.yaml'
    nameless.write_text('limits:\n  - {cases: [{lam: 1.0}]}\n')
    with pytest.raises(ManifestError):
        load_limit_manifest(nameless)
    with pytest.raises(ManifestError):
        LimitVerifier({'lamborn': {'orders': [101]}}, workers=1)


if __name__ == '__main__':
    pytest.main(['-v'])
