import math

import pytest

from src.laplace.quadrature import (CompactSupport, IdentityChart, InversePowerChart, QuadratureSpec,
                                    SqrtChart, TailBound, laplace_forward)
from src.utils.errors import DomainError, TailBoundError


@pytest.fixture
def spec():
    """Default quadrature settings with a plain exponential envelope."""
    return QuadratureSpec().with_bound(TailBound())


@pytest.mark.parametrize('s', [0.5, 1.0, 3.0])
def test_laplace_of_constant_and_exponential(spec, s):
    """Test L[1] = 1/s and L[exp(-t)] = 1/(s+1)."""
    assert laplace_forward(lambda t: 1.0, s, spec).value == pytest.approx(1.0 / s, rel=1e-9)
    assert laplace_forward(lambda t: math.exp(-t), s, spec).value == pytest.approx(1.0 / (s + 1.0), rel=1e-9)


def test_laplace_of_cosine(spec):
    """Test L[cos t] = s / (s^2 + 1)."""
    s = 2.0
    assert laplace_forward(math.cos, s, spec).value == pytest.approx(s / (s * s + 1.0), rel=1e-9)


def test_sqrt_chart_removes_endpoint_singularity():
    """Test L[t^(-1/2)] = sqrt(pi/s) through t = u^2."""
    s = 1.5
    spec = QuadratureSpec().with_bound(TailBound(degree=-0.5))
    result = laplace_forward(lambda t: 1.0 / math.sqrt(t), s, spec, SqrtChart())
    assert result.value == pytest.approx(math.sqrt(math.pi / s), rel=1e-9)


def test_compact_support():
    """Test an indicator of [0, 1] integrates only up to its support."""
    s = 2.0
    spec = QuadratureSpec().with_bound(CompactSupport(1.0))
    result = laplace_forward(lambda t: 1.0, s, spec)
    assert result.upper == 1.0
    assert result.value == pytest.approx(-math.expm1(-s) / s, rel=1e-12)


def test_growing_integrand_with_envelope():
    """Test L[exp(t)] = 1/(s-1) using an envelope that grows."""
    s = 3.0
    spec = QuadratureSpec().with_bound(TailBound(shift=1.0))
    assert laplace_forward(math.exp, s, spec).value == pytest.approx(0.5, rel=1e-9)


def test_truncation_point_bounds_tail():
    """Test the chosen truncation is the first geometric grid point below target."""
    bound = TailBound()
    target = 1e-11
    upper = bound.truncation(1.0, target)
    assert bound.tail(upper, 1.0) < target
    assert bound.tail(upper / 1.25, 1.0) >= target


def test_tail_bound_failure():
    """Test that an integrand growing faster than e^(st) has no truncation point."""
    bound = TailBound(rate=1.0, power=1.0)
    with pytest.raises(TailBoundError):
        bound.truncation(0.5, 1e-10)


def test_tail_bound_validation():
    """Test rejected envelopes."""
    with pytest.raises(DomainError):
        TailBound(amplitude=0.0)
    with pytest.raises(DomainError):
        TailBound(power=1.5)
    with pytest.raises(DomainError):
        CompactSupport(0.0)


def test_laplace_variable_must_be_positive(spec):
    """Test s <= 0 is rejected."""
    with pytest.raises(DomainError):
        laplace_forward(lambda t: 1.0, 0.0, spec)


def test_charts_map_to_time():
    """Test the charts' time map and Jacobian."""
    assert IdentityChart().to_time(2.0) == (2.0, 1.0)
    assert SqrtChart().to_time(3.0) == (9.0, 6.0)
    chart = InversePowerChart(lam=2.0, sigma=0.5, x_max=40.0)
    x, h = 1.3, 1e-6
    t, jacobian = chart.to_time(x)
    assert t == pytest.approx((2.0 / x) ** 2)
    numeric = abs(chart.to_time(x + h)[0] - chart.to_time(x - h)[0]) / (2.0 * h)
    assert jacobian == pytest.approx(numeric, rel=1e-7)
    lower, upper = chart.bounds(16.0)
    assert lower == pytest.approx(0.5)
    assert upper == 40.0
    with pytest.raises(DomainError):
        InversePowerChart(lam=1.0, sigma=1.0, x_max=10.0)


def test_spec_from_config():
    """Test reading the quadrature section of a configuration."""
    spec = QuadratureSpec.from_config({'quadrature': {'abs_tol': 1e-12, 'max_subdivisions': 50}})
    assert spec.abs_tol == 1e-12
    assert spec.max_subdivisions == 50
    with pytest.raises(DomainError):
        QuadratureSpec(abs_tol=0.0)


if __name__ == '__main__':
    pytest.main(['-v'])
