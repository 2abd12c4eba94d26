import math

import pytest

from src.utils.config import DEFAULTS
from src.verification.identities import IdentitySuite, central_difference, second_difference
from src.verification.report import ERROR, INFO


@pytest.fixture
def suite():
    """Identity suite running sweeps in-process."""
    return IdentitySuite(DEFAULTS, workers=1)


def assert_all_pass(rows):
    failing = [(row.name, row.params, row.rel_err, row.note) for row in rows if not row.passed]
    assert not failing, failing


def test_difference_helpers():
    """Test the finite-difference helpers on a cubic."""
    f = lambda x: x ** 3
    assert central_difference(f, 2.0) == pytest.approx(12.0, rel=1e-7)
    assert second_difference(f, 2.0) == pytest.approx(12.0, rel=1e-6)


def test_difference_helpers_are_fourth_order():
    """Test the stencils are exact on a quartic and a quintic up to rounding."""
    assert central_difference(lambda x: x ** 4, 2.0) == pytest.approx(32.0, rel=1e-10)
    assert second_difference(lambda x: x ** 5, 2.0) == pytest.approx(160.0, rel=1e-8)


def test_bessel_reductions(suite):
    """Test every Bessel reduction row passes on both branches."""
    rows = suite.bessel_reductions()
    assert len(rows) == 4 * 20 * 2
    assert_all_pass(rows)


def test_explicit_mittag_leffler(suite):
    """Test the explicit Mittag-Leffler forms."""
    assert_all_pass(suite.explicit_mittag_leffler())


def test_finite_differences(suite):
    """Test the derivative series against finite differences."""
    rows = suite.finite_differences()
    assert {row.name for row in rows} >= {'dW_dalpha_finite_difference', 'd2M_dsigma2_finite_difference'}
    assert_all_pass(rows)


def test_sigma_differences_at_three_quarters(suite):
    """Test the steepest sigma rows, where a three-point stencil falls short."""
    rows = [row for row in suite.finite_differences()
            if row.name.startswith('dF_dsigma') and row.params.startswith('sigma=0.75;')]
    assert len(rows) == 3
    assert_all_pass(rows)


def test_closed_sums_and_order_derivatives(suite):
    """Test the closed sums at alpha = 1 and the Bessel order derivatives."""
    assert_all_pass(suite.closed_sums())
    rows = suite.order_derivatives()
    assert sum(1 for row in rows if row.name == 'order_derivative_x_form') == 8
    assert_all_pass(rows)


def test_mainardi_structure(suite):
    """Test F = sigma t M, the sigma-derivative relations, closed forms and unit mass."""
    rows = suite.mainardi_structure()
    assert {'mainardi_unit_mass', 'mainardi_third_airy_f'} <= {row.name for row in rows}
    assert_all_pass(rows)


def test_hypergeometric_and_kernel(suite):
    """Test hypergeometric identities and the delta kernel rows."""
    assert_all_pass(suite.hypergeometric_identities())
    rows = suite.delta_kernel()
    assert sum(1 for row in rows if row.name == 'lamborn_kernel_mass') == len(suite.orders)
    assert_all_pass(rows)


def test_figure_morphology(suite):
    """Test the shape checks of the derivative sweeps."""
    rows = suite.figure_morphology()
    names = {row.name for row in rows}
    assert {'figure_single_minimum', 'figure_decay', 'figure_minimum_location',
            'figure_depth_increases', 'figure_beta_minimum_shallower'} <= names
    assert any(row.verdict == INFO for row in rows)
    assert_all_pass(rows)


def test_checked_turns_exceptions_into_error_rows(suite):
    """Test a failing evaluation becomes an ERROR row."""
    row = suite._checked('broken', {'x': 1.0}, lambda: math.log(-1.0), lambda: 1.0, rel_tol=1e-8)
    assert row.verdict == ERROR
    assert not row.passed
    assert 'ValueError' in row.note


if __name__ == '__main__':
    pytest.main(['-v'])
