"""
Tests for Eulerian series and partial theta sums.
"""
import pytest

from app.models import PartialThetaSpec, QMonomial
from app.services.eulerian import (
    chi0,
    chi1,
    kl_generic_lhs_A,
    kl_generic_lhs_B,
    kl_generic_rhs_A,
    kl_generic_rhs_B,
    kl_lhs_A,
    kl_lhs_B,
    partial_theta,
)
from app.services.series import equal_to_order, quotient_to_order
from app.services.theta import eta

ORDER = 30


@pytest.mark.unit
class TestPartialTheta:
    """Test one-sided theta sums."""

    def test_alternating_sum(self):
        result = partial_theta(PartialThetaSpec(3, 3), ORDER)
        assert dict(result.items()) == {0: 1, 3: -1, 9: 1, 18: -1, 30: 1}

    def test_constant_offset_and_non_alternating(self):
        result = partial_theta(PartialThetaSpec(6, 8, 1, alternating=False), ORDER)
        assert dict(result.items()) == {1: 1, 8: 1, 21: 1}

    def test_offset_beyond_order_is_zero(self):
        assert partial_theta(PartialThetaSpec(2, 2, 40), ORDER).is_zero

    @pytest.mark.parametrize('A,B', [(0, 2), (-2, 0), (2, 1)])
    def test_invalid_specs(self, A, B):
        with pytest.raises(ValueError):
            PartialThetaSpec(A, B)


@pytest.mark.unit
class TestMockTheta:
    """Test the third order mock theta functions chi0 and chi1."""

    def test_chi0_leading_coefficients(self):
        assert chi0(ORDER).coeffs[:6] == (1, 1, 1, 2, 1, 3)

    def test_chi1_leading_coefficients(self):
        assert chi1(ORDER).coeffs[:4] == (1, 2, 2, 3)

    def test_results_are_exact_to_order(self):
        assert chi0(ORDER).order == ORDER
        assert equal_to_order(chi1(20), chi1(ORDER), 20)

    @pytest.mark.slow
    @pytest.mark.parametrize('series', [chi0, chi1, kl_lhs_A, kl_lhs_B], ids=['chi0', 'chi1', 'klA', 'klB'])
    def test_nonnegative_integral_coefficients(self, series):
        """Intermediate arithmetic is rational; the sums are not."""
        result = series(100)
        assert result.order == 100
        assert result.is_integral()
        assert all(c >= 0 for c in result.coeffs)


@pytest.mark.integration
class TestKimLovejoyForms:
    """Test the Eulerian forms that evaluate to false theta quotients."""

    def test_form_A(self):
        rhs = quotient_to_order(lambda n: partial_theta(PartialThetaSpec(3, 3), n), eta(1), ORDER)
        assert equal_to_order(kl_lhs_A(ORDER), rhs, ORDER)

    def test_form_B(self):
        def false_theta(n):
            return partial_theta(PartialThetaSpec(6, 4), n) + partial_theta(PartialThetaSpec(6, 8, 1), n)
        rhs = quotient_to_order(false_theta, eta(2), ORDER)
        assert equal_to_order(kl_lhs_B(ORDER), rhs, ORDER)

    def test_generic_forms_reduce_at_one(self):
        one = QMonomial(1, 0)
        assert equal_to_order(kl_generic_lhs_A(one, ORDER), kl_lhs_A(ORDER), ORDER)
        assert equal_to_order(kl_generic_lhs_B(one, ORDER), kl_lhs_B(ORDER), ORDER)

    @pytest.mark.parametrize('a', [QMonomial(1, 0), QMonomial(-1, 0), QMonomial(-1, 1)], ids=str)
    def test_generic_triple_sum_forms(self, a):
        assert equal_to_order(kl_generic_lhs_A(a, 20), kl_generic_rhs_A(a, 20), 20)
        assert equal_to_order(kl_generic_lhs_B(a, 20), kl_generic_rhs_B(a, 20), 20)

    @pytest.mark.parametrize('a', [QMonomial(1, 2), QMonomial(1, -1), QMonomial(-1, 3)], ids=str)
    def test_generic_forms_reject_unsupported_a(self, a):
        with pytest.raises(ValueError, match="Generic-a forms"):
            kl_generic_lhs_A(a, ORDER)

    def test_generic_forms_at_minus_one_leading_terms(self):
        a = QMonomial(-1, 0)
        assert kl_generic_lhs_A(a, 8).coeffs[:4] == (1, 1, -2, 2)
        assert kl_generic_rhs_A(a, 8).coeffs[:4] == (1, 1, -2, 2)
        assert kl_generic_lhs_B(a, 8).coeffs[:4] == (1, 1, -3, 5)
        assert kl_generic_rhs_B(a, 8).coeffs[:4] == (1, 1, -3, 5)
