import math

import pytest

from src.utils.errors import DomainError
from src.wright.registry import FUNCTIONS, canonical_name, describe_functions, lookup


def test_every_function_is_registered():
    """Test the sixteen command-line functions."""
    assert len(FUNCTIONS) == 16
    for name in ('wright', 'mittag-leffler', 'mainardi-m', 'mainardi-f', 'dW/dalpha',
                 'd2E/dbeta2', 'dF/dsigma', 'd2M/dsigma2'):
        assert name in FUNCTIONS


def test_lookup_accepts_underscore_names():
    """Test sweep-style names map onto the slash names."""
    assert canonical_name(' dW_dalpha ') == 'dW/dalpha'
    assert lookup('dW_dalpha') is FUNCTIONS['dW/dalpha']
    assert lookup('mainardi-m').params == ('sigma', 't')
    with pytest.raises(DomainError):
        lookup('bessel')


def test_entry_evaluation():
    """Test calling entries with parameter mappings."""
    assert lookup('wright')({'alpha': 1.0, 'beta': 1.0, 't': -1.0}).value == pytest.approx(
        0.22389077914123567, rel=1e-13)
    assert lookup('mittag-leffler')({'alpha': 1.0, 'beta': 1.0, 't': 1.0}).value == pytest.approx(math.e)
    assert lookup('mainardi-m')({'sigma': 0.5, 't': 0.0}).value == pytest.approx(1.0 / math.sqrt(math.pi))
    assert lookup('dW_dalpha')({'alpha': 5.0, 'beta': 1.0, 't': 2.0}).value == pytest.approx(-0.028438, rel=1e-4)


def test_entry_parameter_checks():
    """Test missing and unexpected parameters."""
    entry = lookup('wright')
    with pytest.raises(DomainError, match=r"missing \['t'\]"):
        entry({'alpha': 1.0, 'beta': 1.0})
    with pytest.raises(DomainError, match=r"unexpected \['sigma'\]"):
        entry({'alpha': 1.0, 'beta': 1.0, 't': 1.0, 'sigma': 0.5})


def test_describe_lists_names_and_domains():
    """Test the help text lists every function with its domain."""
    text = describe_functions()
    lines = text.splitlines()
    assert len(lines) == len(FUNCTIONS)
    for name, entry in FUNCTIONS.items():
        assert name in text
        assert entry.domain in text


if __name__ == '__main__':
    pytest.main(['-v'])
