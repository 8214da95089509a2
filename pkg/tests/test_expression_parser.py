"""
Tests for the expression parser, printer and evaluator.
"""
import pickle
from fractions import Fraction

import pytest

from app.models import QMonomial
from app.services.expression_evaluator import EvaluationError, evaluate
from app.services.expression_parser import (
    INF,
    BinOp,
    Call,
    Monomial,
    Neg,
    Number,
    ParseError,
    Power,
    parse,
    to_source,
)
from app.services.series import QSeries, QSeriesError, equal_to_order

ORDER = 30


@pytest.mark.unit
class TestParse:
    """Test the grammar and the tree it produces."""

    def test_monomial_folds_exponent(self):
        assert parse('q^-3') == Monomial(-3)
        assert parse('q') == Monomial(1)

    def test_precedence(self):
        expected = BinOp('+', Number(Fraction(1)), BinOp('*', Number(Fraction(2)), Monomial(3)))
        assert parse('1 + 2 * q^3') == expected

    def test_unary_minus_binds_looser_than_power(self):
        assert parse('-q^2') == Neg(Monomial(2))
        assert parse('-(1 - q)^2') == Neg(Power(BinOp('-', Number(Fraction(1)), Monomial(1)), 2))

    def test_left_associative(self):
        tree = parse('1 - q - q^2')
        assert tree == BinOp('-', BinOp('-', Number(Fraction(1)), Monomial(1)), Monomial(2))

    def test_call_with_parameters(self):
        tree = parse('f(1,2,1; q, -q^2)')
        assert tree == Call('f', (1, 2, 1), (QMonomial(1, 1), QMonomial(-1, 2)))

    def test_call_coerces_unit_monomials(self):
        assert parse('m(-1, 3, 1)') == Call('m', (), (QMonomial(-1, 0), 3, QMonomial(1, 0)))

    def test_infinite_pochhammer(self):
        assert parse('poch(q, inf, 2)') == Call('poch', (), (QMonomial(1, 1), INF, 2))

    def test_spans(self):
        tree = parse('J(1) * chi0()')
        assert tree.span == (0, 13)
        assert tree.left.span == (0, 4)
        assert tree.right.span == (7, 13)


@pytest.mark.unit
class TestParseErrors:
    """Test error offsets and expectations."""

    def test_unclosed_call(self):
        with pytest.raises(ParseError) as info:
            parse('m(q^7, 15, q^9')
        assert info.value.offset == 14
        assert ')' in info.value.expected

    def test_missing_operand(self):
        with pytest.raises(ParseError) as info:
            parse('1 +')
        assert info.value.offset == 3

    def test_unknown_primitive(self):
        with pytest.raises(ParseError, match="Unknown primitive 'foo'") as info:
            parse('2 * foo(1)')
        assert info.value.offset == 4

    def test_wrong_arity(self):
        with pytest.raises(ParseError, match="Wrong arguments for J"):
            parse('J(1, 2, 3)')

    def test_wrong_argument_kind(self):
        with pytest.raises(ParseError, match="wrong kind") as info:
            parse('J(q)')
        assert 'integer' in info.value.expected

    def test_negative_count_rejected(self):
        with pytest.raises(ParseError, match="wrong kind"):
            parse('poch(q, -2)')

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as info:
            parse('2 $ 3')
        assert info.value.offset == 2

    def test_offsets_are_bytes(self):
        with pytest.raises(ParseError) as info:
            parse('\u00a0\u00a0$')
        assert info.value.offset == 4

    def test_trailing_input(self):
        with pytest.raises(ParseError, match="trailing input"):
            parse('q q')

    def test_is_a_series_error_and_pickles(self):
        with pytest.raises(QSeriesError) as info:
            parse('(q')
        restored = pickle.loads(pickle.dumps(info.value))
        assert (restored.offset, restored.expected) == (info.value.offset, info.value.expected)


@pytest.mark.unit
class TestPrinter:
    """Test that printing and reparsing gives the same tree."""

    @pytest.mark.parametrize('text', [
        '1 - (q - q^2)',
        '-q^2',
        '(-q)^2',
        '(q)^3',
        '--q',
        '2^3 * q^-1',
        '1 / (1 - q) / J(2)',
        'f(1,2,1; q, q) - J(1)^2',
        'g(1,2,1,2,2,1; q, q^2, -1) * chi1()',
        'poch(-q^3, inf, 2) + m(q^-1, 3, -q)',
        'ptheta(3, 3) / J(1)',
    ])
    def test_roundtrip(self, text):
        tree = parse(text)
        assert parse(to_source(tree)) == tree

    def test_canonical_form(self):
        assert to_source(parse('1+2*q^3')) == '1 + 2 * q^3'
        assert to_source(parse('f(1, 2, 1;q,q)')) == 'f(1,2,1; q, q)'


@pytest.mark.integration
class TestEvaluate:
    """Test evaluation of parsed expressions."""

    def test_geometric_series(self):
        result = evaluate(parse('1/(1-q)'), 10)
        assert result.coeffs == tuple([Fraction(1)] * 11)

    def test_negative_power_matches_quotient(self):
        assert evaluate(parse('(1-q)^-2'), 15) == evaluate(parse('1/((1-q)*(1-q))'), 15)

    def test_f121_is_eta_squared(self):
        assert evaluate(parse('f(1,2,1; q, q) - J(1)^2'), ORDER).is_zero

    def test_vanishing_theta(self):
        assert evaluate(parse('jt(q, 1)'), ORDER).is_zero

    def test_triple_sum_against_mock_theta(self):
        lhs = evaluate(parse('g(1,2,1,2,2,1; q, q^2, q^2)'), ORDER)
        rhs = evaluate(parse('J(1)^2 * chi0()'), ORDER)
        assert equal_to_order(lhs, rhs, ORDER)

    def test_laurent_result(self):
        result = evaluate(parse('q^-2 * J(1)'), 10)
        assert result.valuation == -2
        assert result.order == 10

    def test_default_order(self, app_ctx):
        assert evaluate(parse('J(1)')).order == app_ctx.config['DEFAULT_ORDER']

    def test_constant(self):
        assert evaluate(parse('7'), 5) == QSeries.constant(7, 5)

    @pytest.mark.parametrize('text', [
        '1/(q-q^2)',
        'J(1)/q^3',
        '(q^-2 + 1)^-1',
        'm(q^7, 15, q^9) * q^-4',
        'f(4,4,1; -q^-2, q^-1)',
        '1/chi0() - J(1)',
        'q^-3 * J(2) / (1 + q)',
    ])
    def test_deeper_order_agrees_below_shallower(self, text):
        expr = parse(text)
        shallow, deep = evaluate(expr, 15), evaluate(expr, 30)
        assert shallow.order == 15
        assert equal_to_order(shallow, deep, 15)


@pytest.mark.integration
class TestEvaluationErrors:
    """Test that evaluation failures carry the span of the failing node."""

    def test_division_by_vanishing_series(self):
        with pytest.raises(EvaluationError) as info:
            evaluate(parse('1/jt(q, 1)'), 10)
        assert info.value.span == (0, 10)

    def test_non_truncating_product(self):
        with pytest.raises(EvaluationError) as info:
            evaluate(parse('J(1) + poch(1, inf)'), 10)
        assert info.value.span == (7, 19)

    def test_appell_pole(self):
        with pytest.raises(EvaluationError, match="denominator vanishes"):
            evaluate(parse('m(-q, 2, -q)'), 10)

    def test_error_pickles(self):
        with pytest.raises(EvaluationError) as info:
            evaluate(parse('1/jt(q, 1)'), 10)
        restored = pickle.loads(pickle.dumps(info.value))
        assert restored.span == info.value.span
