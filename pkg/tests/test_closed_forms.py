import math

import pytest

from src.utils.errors import DomainError
from src.wright import closed_forms
from src.wright.core import WrightParams, mainardi_f, mainardi_m, wright
from src.wright.derivatives import dW_dalpha, dW_dbeta

ORDERS = [0.0, 0.5, 1.0, 2.0]
ARGUMENTS = [0.5, 1.0, 3.0, 6.0]


@pytest.mark.parametrize('beta', ORDERS)
@pytest.mark.parametrize('t', ARGUMENTS)
def test_bessel_reduction_matches_series(beta, t):
    """Test the Bessel closed form of W_{1,beta+1}(-+t^2/4) on both branches."""
    for sign, x in (('-', -t * t / 4.0), ('+', t * t / 4.0)):
        assert closed_forms.bessel_reduction(beta, t, sign) == pytest.approx(
            wright(1.0, beta + 1.0, x), rel=1e-10, abs=1e-12)


@pytest.mark.parametrize('beta', [0.0, 0.5, 1.0, 1.5])
@pytest.mark.parametrize('t', [0.5, 2.0, 4.0])
def test_beta_derivative_closed_form(beta, t):
    """Test the Bessel form of the beta-derivative against the dW/dbeta series."""
    p = WrightParams(1.0, beta + 1.0)
    for sign, x in (('-', -t * t / 4.0), ('+', t * t / 4.0)):
        assert closed_forms.closed_form_dWbeta_bessel(beta, t, sign) == pytest.approx(
            dW_dbeta(p, x).value, rel=1e-8, abs=1e-10)


def test_derivative_in_x_variable():
    """Test the x = t^2/4 form agrees with the t form."""
    x = 2.25
    assert closed_forms.dW_dx_bessel_form(0.5, x, '+') == pytest.approx(
        closed_forms.closed_form_dWbeta_bessel(0.5, 3.0, '+'), rel=1e-15)


@pytest.mark.parametrize('beta', [0, 1])
@pytest.mark.parametrize('x', [0.25, 0.5, 1.0, 2.0, 4.0])
def test_closed_sums_match_series(beta, x):
    """Test the closed alpha- and beta-derivative sums at alpha = 1."""
    p = WrightParams(1.0, float(beta))
    assert closed_forms.alpha_derivative_closed_sum(beta, x) == pytest.approx(dW_dalpha(p, x).value, rel=1e-9)
    assert closed_forms.beta_derivative_closed_sum(beta, x) == pytest.approx(dW_dbeta(p, x).value, rel=1e-9)


def test_closed_sums_only_for_integer_beta():
    """Test the beta restriction of the closed sums."""
    with pytest.raises(DomainError):
        closed_forms.alpha_derivative_closed_sum(0.5, 1.0)
    with pytest.raises(DomainError):
        closed_forms.beta_derivative_closed_sum(2, 1.0)


@pytest.mark.parametrize('t', [0.5, 1.0, 2.0, 3.0])
def test_mainardi_closed_forms(t):
    """Test the sigma = 1/2 and sigma = 1/3 closed forms."""
    assert closed_forms.mainardi_m_half(t) == pytest.approx(mainardi_m(0.5, t).value, rel=1e-11)
    assert closed_forms.mainardi_m_third(t) == pytest.approx(mainardi_m(1.0 / 3.0, t).value, rel=1e-10)
    assert closed_forms.mainardi_f_third(t) == pytest.approx(mainardi_f(1.0 / 3.0, t).value, rel=1e-10)


def test_closed_form_argument_checks():
    """Test rejected signs and arguments."""
    with pytest.raises(DomainError):
        closed_forms.bessel_reduction(1.0, 1.0, sign='*')
    with pytest.raises(DomainError):
        closed_forms.bessel_reduction(1.0, 0.0)
    with pytest.raises(DomainError):
        closed_forms.closed_form_dWbeta_bessel(-1.0, 1.0)
    with pytest.raises(DomainError):
        closed_forms.mainardi_m_third(-1.0)
    assert math.isfinite(closed_forms.digamma_bessel_sum(1.0))


if __name__ == '__main__':
    pytest.main(['-v'])
