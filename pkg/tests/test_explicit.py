import math

import pytest
from scipy import special

from src.laplace import explicit
from src.utils.errors import DomainError
from src.wright.core import mittag_leffler

Z_VALUES = [-3.0, -0.5, 0.5, 1.0, 2.0, 5.0]


@pytest.mark.parametrize('beta', [0.5, 1.0, 1.5, 2.5])
@pytest.mark.parametrize('z', Z_VALUES)
def test_ml_explicit_matches_series(beta, z):
    """Test the incomplete-gamma form of E_{1,beta+1} against its series."""
    expected = mittag_leffler(1.0, beta + 1.0, z).value
    assert explicit.ml_explicit(beta, z) == pytest.approx(expected, rel=1e-10)


def test_ml_explicit_reference_values():
    """Test E_{1,3/2}(1) = e erf(1) and the value at zero."""
    assert explicit.ml_explicit(0.5, 1.0) == pytest.approx(math.e * math.erf(1.0), rel=1e-13)
    assert explicit.ml_explicit(2.0, 0.0) == pytest.approx(0.5)


def test_ml_explicit_domain():
    """Test beta > 0 and finite inputs."""
    with pytest.raises(DomainError):
        explicit.ml_explicit(0.0, 1.0)
    with pytest.raises(DomainError):
        explicit.ml_explicit(1.0, math.nan)


@pytest.mark.parametrize('n', [0, 1, 2, 3])
@pytest.mark.parametrize('z', [0.5, 1.0, 2.0, 5.0])
def test_half_integer_ladder(n, z):
    """Test the half-integer incomplete gamma ladder and E_{1,n+3/2}."""
    expected = special.gammainc(n + 0.5, z) * math.gamma(n + 0.5)
    assert explicit.half_integer_incomplete_gamma(n, z) == pytest.approx(expected, rel=1e-11)
    assert explicit.ml_half_integer(n, z) == pytest.approx(mittag_leffler(1.0, n + 1.5, z).value, rel=1e-10)


@pytest.mark.parametrize('z', [0.5, 1.0, 2.0, 5.0])
def test_named_forms(z):
    """Test the elementary forms of E_{1,1}, E_{1,2}, E_{1,3/2} and E_{1,5/2}."""
    assert explicit.ml_one_one(z) == pytest.approx(mittag_leffler(1.0, 1.0, z).value, rel=1e-13)
    assert explicit.ml_one_two(z) == pytest.approx(mittag_leffler(1.0, 2.0, z).value, rel=1e-13)
    assert explicit.ml_one_three_halves(z) == pytest.approx(mittag_leffler(1.0, 1.5, z).value, rel=1e-12)
    assert explicit.ml_one_five_halves(z) == pytest.approx(mittag_leffler(1.0, 2.5, z).value, rel=1e-10)


def test_named_forms_domain():
    """Test the z > 0 requirement of the error-function forms."""
    assert explicit.ml_one_two(0.0) == 1.0
    with pytest.raises(DomainError):
        explicit.ml_one_three_halves(0.0)
    with pytest.raises(DomainError):
        explicit.ml_half_integer(1, -1.0)
    with pytest.raises(DomainError):
        explicit.half_integer_incomplete_gamma(-1, 1.0)


if __name__ == '__main__':
    pytest.main(['-v'])
