import pytest

from src.laplace import pairs
from src.laplace.pairs import TransformPair
from src.laplace.quadrature import QuadratureSpec
from src.laplace.verifier import PairVerifier, evaluate_setup
from src.utils.config import DEFAULTS
from src.verification.report import ERROR


@pytest.fixture
def verifier():
    """In-process verifier with the default configuration."""
    return PairVerifier(DEFAULTS, workers=1)


def test_verify_wright_scaling(verifier):
    """Test W_{1,1}(-t) against (1/s) exp(-1/s)."""
    pair = TransformPair('wright_scaling', 'wright_scaling',
                         (('alpha', 1.0), ('beta', 1.0), ('lam', 1.0), ('sign', -1)), (1.0, 2.0))
    report = verifier.verify_pair(pair)
    assert len(report.rows) == 2
    assert report.passed
    assert 's=2' in report.rows[1].params


def test_verify_mainardi_pair(verifier):
    """Test a pair integrated through the inverse-power chart."""
    pair = TransformPair('mainardi_f_inverse', 'mainardi_f_inverse',
                         (('sigma', 0.5), ('lam', 1.0)), (1.0,))
    report = verifier.verify_pairs([pair])
    assert report.passed, report.to_frame().to_string()


def test_verify_erfc_pair(verifier):
    """Test a closed-form pair through the square-root chart."""
    setup = pairs.half_erfc(1.0)
    lhs, rhs = evaluate_setup(setup, 1.0, QuadratureSpec())
    assert lhs == pytest.approx(rhs, rel=1e-8)


def test_pointwise_pair_uses_t(verifier):
    """Test pointwise identities record t instead of s."""
    pair = TransformPair('half_pointwise', 'half_pointwise', (('lam', 1.0),), (1.0,))
    report = verifier.verify_pair(pair)
    assert report.passed
    assert 't=1' in report.rows[0].params


def test_broken_pair_gives_error_row(verifier):
    """Test that a pair failing to build becomes an ERROR row and the run continues."""
    broken = TransformPair('broken', 'wright_hyperbolic',
                           (('alpha', 1.0), ('beta', 1.0), ('lam', 1.0), ('rho', 0.5), ('kind', 'tanh')),
                           (2.0,))
    good = TransformPair('half_pointwise', 'half_pointwise', (('lam', 1.0),), (2.0,))
    report = verifier.verify_pairs([broken, good])
    assert len(report.rows) == 2
    assert report.rows[0].verdict == ERROR
    assert 'DomainError' in report.rows[0].note
    assert report.rows[1].passed
    assert not report.passed


def test_second_kind_transform(verifier):
    """Test W_{-sigma,beta}(-t) against E_{sigma,beta+sigma}(-s)."""
    report = verifier.second_kind_transform_check(0.5, 0.5, [1.0, 2.0])
    assert len(report.rows) == 2
    assert report.passed, report.to_frame().to_string()


def test_linearity(verifier):
    """Test linearity of the forward transform with seeded coefficients."""
    report = verifier.linearity_check(pairs.wright_scaling(1.0, 1.0, 1.0, -1),
                                      pairs.bessel_j0_form(1.0), [3.0], trials=2)
    assert len(report.rows) == 2
    assert report.passed


def test_tolerances_from_config():
    """Test verifier tolerances come from the verification section."""
    config = {'verification': {'pair_rel_tol': 1e-3}}
    verifier = PairVerifier(config, workers=1)
    assert verifier.rel_tol == 1e-3
    assert verifier.abs_tol == DEFAULTS['verification']['pair_abs_tol']


if __name__ == '__main__':
    pytest.main(['-v'])
