"""
Unit tests for value records.
"""
from fractions import Fraction

import pytest

from app.models import (
    HeckeParams3,
    Mismatch,
    QMonomial,
    ShiftDecomposition,
    ThetaArg,
    VerificationReport,
)
from app.utils.serialization import format_rational, parse_rational
from tests.conftest import series


class TestQMonomial:
    """Tests for signed q-powers."""

    def test_group_law(self):
        x, y = QMonomial(-1, 3), QMonomial(-1, -5)
        assert x * y == QMonomial(1, -2)
        assert x / y == QMonomial(1, 8)
        assert x ** 3 == QMonomial(-1, 9)
        assert x ** -2 == QMonomial(1, -6)
        assert -x == QMonomial(1, 3)
        assert x.inverse().shifted(4) == QMonomial(-1, 1)

    def test_str(self):
        assert str(QMonomial(1, 0)) == '1'
        assert str(QMonomial(-1, 1)) == '-q'
        assert str(QMonomial(1, -4)) == 'q^-4'

    def test_integral_fraction_exponent_is_accepted(self):
        assert QMonomial(1, Fraction(6, 2)).exp == 3

    def test_invalid_values(self):
        with pytest.raises(ValueError, match="sign must be"):
            QMonomial(2, 1)
        with pytest.raises(ValueError, match="must be an integer"):
            QMonomial(1, Fraction(1, 2))
        with pytest.raises(TypeError):
            QMonomial(1, 1.0)


class TestParameterRecords:
    """Tests for theta and Hecke parameter validation."""

    def test_theta_modulus(self):
        with pytest.raises(ValueError, match="modulus must be positive"):
            ThetaArg(QMonomial(1, 1), 0)

    def test_triple_params(self):
        p = HeckeParams3(1, 2, 1, 2, 2, 1)
        assert str(p) == '1,2,1,2,2,1'
        with pytest.raises(ValueError):
            HeckeParams3(1, 2, 1, 2, 2, 0)


class TestReports:
    """Tests for verification reports and decompositions."""

    def test_passed_must_match_mismatch(self):
        with pytest.raises(ValueError, match="passed must hold"):
            VerificationReport('x', 10, True, Mismatch(1, Fraction(0), Fraction(1)))
        with pytest.raises(ValueError):
            VerificationReport('x', 10, False)

    def test_mismatch_json(self):
        mismatch = Mismatch(3, Fraction(1, 2), Fraction(-2), 'case a')
        data = mismatch.to_dict()
        assert data == {'case': 'case a', 'exponent': 3, 'lhs': '1/2', 'rhs': '-2/1'}
        assert Mismatch.from_dict(data) == mismatch

    def test_shift_decomposition_total(self):
        decomposition = ShiftDecomposition(series([1, 1]), (series([0, 2]), series([3, 0])), (series([1, 1]),))
        assert decomposition.total().coeffs == (3, 2)

    def test_rational_helpers(self):
        assert format_rational(4) == '4/1'
        assert parse_rational(' -3/6 ') == Fraction(-1, 2)
        assert parse_rational(5) == 5
        with pytest.raises(ValueError, match="Invalid rational"):
            parse_rational('1/0')
