import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.kernels.series import SeriesSettings, sum_finite, sum_series
from src.utils.errors import DomainError, SeriesConvergenceError
from src.utils.summation import CompensatedSum, compensated_sum, two_sum

finite_floats = st.floats(min_value=-1e300, max_value=1e300, allow_nan=False, allow_infinity=False)


@given(u=finite_floats, v=finite_floats)
def test_two_sum_is_error_free(u, v):
    """Test that the rounded sum plus its error equals the exact sum."""
    s, t = two_sum(u, v)
    assert Fraction(s) + Fraction(t) == Fraction(u) + Fraction(v)


def test_compensated_sum_recovers_lost_bits():
    """Test a sum where naive accumulation loses the small term."""
    values = [1e16, 1.0, -1e16]
    assert sum(values) == 0.0
    assert compensated_sum(values) == 1.0


@given(st.lists(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False), max_size=50))
def test_compensated_sum_matches_fsum(values):
    """Test agreement with math.fsum."""
    assert compensated_sum(values) == pytest.approx(math.fsum(values), rel=1e-15, abs=1e-9)


def test_compensated_sum_accumulator():
    """Test the running accumulator interface."""
    acc = CompensatedSum()
    acc.extend([0.1] * 10)
    assert float(acc) == pytest.approx(1.0, rel=1e-16)


def test_sum_series_geometric():
    """Test a geometric series and its diagnostics."""
    result = sum_series(lambda k: (0.5 ** k, 0.5 ** k))
    assert result.value == pytest.approx(2.0, rel=1e-13)
    assert result.converged
    assert result.terms_used > 40
    assert result.last_term_magnitude <= 1e-13 * 2.0


def test_sum_series_exponential():
    """Test the exponential series at a negative argument."""
    x = -5.0
    result = sum_series(lambda k: (x ** k / math.factorial(k), abs(x) ** k / math.factorial(k)))
    assert result.value == pytest.approx(math.exp(x), rel=1e-10)
    assert result.max_term_magnitude == pytest.approx(5.0 ** 5 / 120.0)
    assert result.cancellation_digits > 2.0


def test_sum_series_non_convergence_keeps_partial():
    """Test that exhausting max_terms raises with the partial result attached."""
    settings = SeriesSettings(max_terms=10)
    with pytest.raises(SeriesConvergenceError) as info:
        sum_series(lambda k: (1.0, 1.0), settings, label='ones')
    partial = info.value.partial
    assert partial.value == 10.0
    assert partial.terms_used == 10
    assert not partial.converged
    assert 'ones' in str(info.value)



def test_sum_series_skips_structural_zeros():
    """Test a leading run of zero terms without envelopes does not stop the sum."""
    def term(k):
        if k < 5:
            return 0.0, None
        return 0.5 ** (k - 5), 0.5 ** (k - 5)

    result = sum_series(term)
    assert result.value == pytest.approx(2.0, rel=1e-13)
    assert result.converged
    assert result.terms_used > 45


def test_sum_series_flags_cancellation():
    """Test a sum far smaller than its largest term comes back unconverged."""
    terms = [1e12, -1e12, 1.0]

    def term(k):
        value = terms[k] if k < len(terms) else 0.0
        return value, abs(value)

    result = sum_series(term)
    assert result.value == 1.0
    assert not result.converged
    assert result.cancellation_digits == pytest.approx(12.0)
    assert sum_series(term, SeriesSettings(max_cancellation_digits=13.0)).converged
    assert sum_series(lambda k: (0.0, 0.0)).cancellation_digits == 0.0


def test_settings_validation():
    """Test rejected stopping rules."""
    with pytest.raises(DomainError):
        SeriesSettings(rel_tol=-1.0)
    with pytest.raises(DomainError):
        SeriesSettings(rel_tol=0.0, abs_tol=0.0)
    with pytest.raises(DomainError):
        SeriesSettings(max_terms=0)
    with pytest.raises(DomainError):
        SeriesSettings(max_cancellation_digits=0.0)


def test_settings_from_config():
    """Test reading the series section of a configuration."""
    settings = SeriesSettings.from_config({'series': {'rel_tol': 1e-8, 'max_terms': 50}})
    assert settings.rel_tol == 1e-8
    assert settings.max_terms == 50
    assert settings.consecutive_small_terms == SeriesSettings().consecutive_small_terms
    relaxed = SeriesSettings.from_config({'series': {'max_cancellation_digits': 6}})
    assert relaxed.max_cancellation_digits == 6.0


def test_sum_finite_reverse():
    """Test a terminating sum in both directions."""
    values = [1.0, 2.0, 3.0]
    forward = sum_finite(values)
    backward = sum_finite(values, reverse=True)
    assert forward.value == backward.value == 6.0
    assert forward.terms_used == 3
    assert forward.last_term_magnitude == 3.0


if __name__ == '__main__':
    pytest.main(['-v'])
