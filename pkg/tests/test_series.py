"""
Unit tests for truncated Laurent series arithmetic.

Tests cover:
- Construction and canonical zero
- Order bookkeeping for add, mul, invert and div
- Precision helpers for composite expressions
- Printing and JSON schema
"""
from fractions import Fraction

import pytest

from app.models import QMonomial
from app.services.series import (
    DivideByZeroSeries,
    InsufficientOrder,
    QSeries,
    div,
    equal_to_order,
    format_series,
    invert,
    monomial_times,
    mul,
    power,
    product_to_order,
    quotient_to_order,
    shift,
)
from tests.conftest import brute_pochhammer, series


@pytest.mark.unit
class TestConstruction:
    """Test series construction and normalization."""

    def test_leading_zeros_are_stripped(self):
        s = QSeries([0, 0, 3, 1], -1, 5)
        assert s.valuation == 1
        assert s.coefficient(1) == 3
        assert s.coefficient(0) == 0

    def test_canonical_zero(self):
        z = QSeries([0, 0], 4, 10)
        assert z.is_zero
        assert z.valuation == 0
        assert z.order == 10
        assert z == QSeries.zero(10)

    def test_zero_below_order_minus_one_keeps_invariant(self):
        for z in (QSeries.zero(-5), QSeries([0, 0], 2, -5), QSeries.zero(3).shift(-8)):
            assert z.order == -5
            assert z.valuation == -4
            assert z.order >= z.valuation - 1
        assert QSeries.zero(-1).valuation == 0
        assert QSeries.from_dict(QSeries.zero(-5).to_dict()) == QSeries.zero(-5)

    def test_terms_above_order_are_dropped(self):
        s = QSeries([1, 1, 1, 1], 0, 1)
        assert s.coeffs == (1, 1)

    def test_coefficient_above_order_raises(self):
        with pytest.raises(InsufficientOrder):
            series([1, 2, 3]).coefficient(3)

    def test_from_terms(self):
        s = QSeries.from_terms({-2: 1, 3: Fraction(1, 2), 9: 7}, 5)
        assert s.valuation == -2
        assert dict(s.items()) == {-2: 1, 3: Fraction(1, 2)}

    def test_default_order_comes_from_config(self, app_ctx):
        assert QSeries.zero().order == app_ctx.config['DEFAULT_ORDER']


@pytest.mark.unit
class TestArithmetic:
    """Test ring operations and their precision."""

    def test_add_takes_minimum_order(self):
        a = series([1, 1, 1], 0, 2)
        b = series([1] * 6, 0, 5)
        assert (a + b).order == 2
        assert (a + b).coeffs == (2, 2, 2)

    def test_add_operand_entirely_above_order(self):
        total = series([1], 0, 2) + series([1, 1], 5, 8)
        assert total == series([1], 0, 2)

    def test_cancellation_to_zero(self):
        a = series([1, 2, 3])
        assert (a - a).is_zero

    def test_scalar_operations(self):
        a = series([1, 2])
        assert (a * 3).coeffs == (3, 6)
        assert (2 - a).coeffs == (1, -2)
        assert (a / 2).coeffs == (Fraction(1, 2), 1)

    def test_mul_order_formula(self):
        """order(ab) = min(N_a + v_b, N_b + v_a)."""
        a = QSeries([1, 1], -2, 5)
        b = QSeries([1, 0, 1], 1, 8)
        product = a * b
        assert product.valuation == -1
        assert product.order == min(5 + 1, 8 - 2)

    def test_mul_with_zero_keeps_precision(self):
        zero = QSeries.zero(4)
        a = QSeries([1], -3, 10)
        assert (zero * a).order == 1
        assert (zero * a).is_zero

    def test_inverse_of_one_minus_q(self):
        inv = invert(series([1, -1], 0, 10))
        assert inv.coeffs == tuple([Fraction(1)] * 11)

    def test_inverse_keeps_relative_precision(self):
        a = QSeries([2, 1], 3, 10)
        inv = invert(a)
        assert inv.valuation == -3
        assert inv.order == 10 - 6
        assert (a * inv).coeffs[0] == 1

    def test_inverse_of_zero_raises(self):
        with pytest.raises(DivideByZeroSeries):
            invert(QSeries.zero(5))

    def test_division_is_exact_rational(self):
        quotient = series([1], 0, 6) / series([3, 1], 0, 6)
        assert quotient.coefficient(0) == Fraction(1, 3)
        assert quotient.coefficient(1) == Fraction(-1, 9)
        assert not quotient.is_integral()

    def test_power_matches_repeated_product(self):
        a = series([1, -1, 2], 0, 8)
        assert power(a, 3) == a * a * a
        assert (a ** -2) * (a * a) == QSeries.one(8)

    def test_power_rejects_non_integer(self):
        with pytest.raises(TypeError):
            power(series([1, 1]), 1.5)

    def test_shift(self):
        s = series([1, 2], 0, 5).shift(-3)
        assert s.valuation == -3
        assert s.order == 2


def random_series(rng, length=6):
    """Series with a nonzero leading coefficient and random valuation in [-3, 3]."""
    coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(length)]
    coeffs[0] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    return series(coeffs, rng.randint(-3, 3))


@pytest.mark.unit
class TestRingProperties:
    """Test the ring laws on seeded random series to their guaranteed order."""

    TRIALS = 200

    def test_addition_is_associative(self, rng):
        for _ in range(self.TRIALS):
            a, b, c = (random_series(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)

    def test_multiplication_distributes(self, rng):
        for _ in range(self.TRIALS):
            a, b, c = (random_series(rng) for _ in range(3))
            lhs, rhs = a * (b + c), a * b + a * c
            assert equal_to_order(lhs, rhs, min(lhs.order, rhs.order))

    def test_series_times_inverse_is_one(self, rng):
        for _ in range(self.TRIALS):
            a = random_series(rng)
            product = mul(a, invert(a))
            assert product.valuation == 0
            assert equal_to_order(product, QSeries.one(product.order), product.order)

    def test_shift_round_trip(self, rng):
        for _ in range(self.TRIALS):
            a, k = random_series(rng), rng.randint(-7, 7)
            assert shift(shift(a, k), -k) == a

    def test_division_undoes_multiplication(self, rng):
        for _ in range(self.TRIALS):
            a, b = random_series(rng), random_series(rng)
            quotient = div(mul(a, b), b)
            assert quotient.valuation == a.valuation
            assert equal_to_order(quotient, a, quotient.order)


@pytest.mark.unit
class TestComparison:
    """Test coefficientwise comparison."""

    def test_equal(self):
        assert equal_to_order(series([1, 2, 3]), series([1, 2, 3, 4]), 2)

    def test_first_mismatch(self):
        result = equal_to_order(series([1, 2, 3]), series([1, 5, 3]), 2)
        assert not result
        assert (result.exponent, result.lhs, result.rhs) == (1, 2, 5)
        assert result.mismatch('case').case == 'case'

    def test_insufficient_order_raises(self):
        with pytest.raises(InsufficientOrder):
            equal_to_order(series([1, 2]), series([1, 2, 3]), 2)


@pytest.mark.unit
class TestPrecisionHelpers:
    """Test product and quotient helpers that deepen their factors."""

    def test_product_with_negative_valuation(self):
        """q^-5 * (q)_inf must see the product to order N + 5."""
        pole = lambda n: QSeries.monomial(-5, 1, n)
        poch = lambda n: brute_pochhammer(1, 1, n + 1, max(n, 0))
        result = product_to_order([pole, poch], 10)
        assert result.order == 10
        expected = brute_pochhammer(1, 1, 16, 15).shift(-5)
        assert equal_to_order(result, expected, 10)

    def test_quotient_is_exact_to_order(self):
        den = lambda n: QSeries([1, -1], 2, n)
        num = lambda n: QSeries.one(n)
        result = quotient_to_order(num, den, 10)
        assert result.order == 10
        assert result.valuation == -2
        assert all(c == 1 for c in result.coeffs)

    def test_quotient_by_vanishing_series_raises(self):
        with pytest.raises(DivideByZeroSeries):
            quotient_to_order(lambda n: QSeries.one(n), lambda n: QSeries.zero(n), 5)

    def test_monomial_times(self):
        result = monomial_times(QMonomial(-1, 3), lambda n: series([1, 1, 1, 1, 1, 1], 0, n), 5)
        assert result.valuation == 3
        assert result.coefficient(3) == -1
        assert result.order == 5


@pytest.mark.unit
class TestOutput:
    """Test printing and JSON serialization."""

    def test_human_format(self):
        s = QSeries([1, 2, 3], -1, 1)
        assert format_series(s) == 'q^-1 + 2 + 3q + O(q^2)'

    def test_human_format_caps_terms(self):
        s = series([1] * 30, 0, 29)
        text = format_series(s, limit=20)
        assert '… (+10 more)' in text

    def test_negative_and_fractional_terms(self):
        s = QSeries([Fraction(-1, 2), 0, -1], 0, 2)
        assert format_series(s) == '-1/2 - q^2 + O(q^3)'

    def test_json_schema(self):
        s = QSeries([Fraction(1, 3), -2], -1, 3)
        payload = s.to_dict()
        assert payload == {'valuation': -1, 'order': 3, 'coeffs': ['1/3', '-2/1', '0/1', '0/1', '0/1']}
        assert QSeries.from_json(s.to_json()) == s

    def test_malformed_json_payload(self):
        with pytest.raises(ValueError, match="Malformed"):
            QSeries.from_dict({'valuation': 0})
