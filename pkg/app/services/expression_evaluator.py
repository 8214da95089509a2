"""
Evaluate parsed expressions to truncated q-series.

An expression compiles to a builder (order -> QSeries); products and quotients
go through the precision helpers so the result is exact to the requested order.
"""
import logging
from typing import Callable, Dict, Optional

from app.models import HeckeParams2, HeckeParams3, PartialThetaSpec, QMonomial
from app.services.appell_lerch import appell
from app.services.eulerian import chi0, chi1, kl_lhs_A, kl_lhs_B, partial_theta
from app.services.expression_parser import BinOp, Call, Expr, Monomial, Neg, Number, Power, Span
from app.services.hecke import double_sum, triple_sum
from app.services.series import (
    Builder,
    QSeries,
    QSeriesError,
    product_to_order,
    quotient_to_order,
    resolve_order,
)
from app.services.theta import eta, pochhammer, theta

logger = logging.getLogger(__name__)


class EvaluationError(QSeriesError):
    """Raised when a subexpression cannot be evaluated; carries its source span."""

    def __init__(self, message: str, span: Span):
        self.span = span
        self.reason = message
        super().__init__(f"{message} (at {span[0]}..{span[1]})")

    def __reduce__(self):
        return (EvaluationError, (self.reason, self.span))


def _guarded(build: Builder, span: Span) -> Builder:
    def run(order: int) -> QSeries:
        try:
            return build(order)
        except EvaluationError:
            raise
        except (QSeriesError, ValueError, ZeroDivisionError) as e:
            raise EvaluationError(str(e), span) from e
    return run


def _poch(x: QMonomial, count, modulus: int = 1) -> Builder:
    return lambda order: pochhammer(x, count, order, modulus=modulus)


def _ptheta(A: int, B: int, C: int = 0) -> Builder:
    spec = PartialThetaSpec(A, B, C)
    return lambda order: partial_theta(spec, order)


def _big_j(*args: int) -> Builder:
    if len(args) == 1:
        return eta(args[0])
    return theta(QMonomial(1, args[0]), args[1])


PRIMITIVE_BUILDERS: Dict[str, Callable[..., Builder]] = {
    'J': _big_j,
    'JB': lambda a, m: theta(QMonomial(-1, a), m),
    'jt': lambda x, m: theta(x, m),
    'm': lambda x, M, z: appell(x, M, z),
    'f': lambda params, x, y: double_sum(HeckeParams2(*params), x, y),
    'g': lambda params, x, y, z: triple_sum(HeckeParams3(*params), x, y, z),
    'chi0': lambda: chi0,
    'chi1': lambda: chi1,
    'klA': lambda: kl_lhs_A,
    'klB': lambda: kl_lhs_B,
    'ptheta': _ptheta,
    'poch': _poch,
}


def _call_builder(expr: Call) -> Builder:
    make = PRIMITIVE_BUILDERS[expr.name]
    if expr.params:
        return make(expr.params, *expr.args)
    return make(*expr.args)


def compile_expr(expr: Expr) -> Builder:
    """Turn an expression tree into a builder; construction errors carry the node span."""
    try:
        build = _compile(expr)
    except EvaluationError:
        raise
    except (QSeriesError, ValueError) as e:
        raise EvaluationError(str(e), expr.span) from e
    return _guarded(build, expr.span)


def _compile(expr: Expr) -> Builder:
    if isinstance(expr, Number):
        value = expr.value
        return lambda order: QSeries.constant(value, order)
    if isinstance(expr, Monomial):
        exp = expr.exp
        return lambda order: QSeries.monomial(exp, 1, order)
    if isinstance(expr, Neg):
        inner = compile_expr(expr.operand)
        return lambda order: -inner(order)
    if isinstance(expr, Power):
        return _power(compile_expr(expr.base), expr.exponent)
    if isinstance(expr, BinOp):
        left, right = compile_expr(expr.left), compile_expr(expr.right)
        if expr.op == '+':
            return lambda order: left(order) + right(order)
        if expr.op == '-':
            return lambda order: left(order) - right(order)
        if expr.op == '*':
            return lambda order: product_to_order([left, right], order)
        return lambda order: quotient_to_order(left, right, order)
    if isinstance(expr, Call):
        return _call_builder(expr)
    raise TypeError(f"Unknown expression node {type(expr).__name__}")


def _power(base: Builder, exponent: int) -> Builder:
    if exponent == 0:
        return lambda order: QSeries.one(order)
    positive = (lambda order: product_to_order([base] * abs(exponent), order))
    if exponent > 0:
        return positive
    return lambda order: quotient_to_order(lambda n: QSeries.one(n), positive, order)


def evaluate(expr: Expr, order: Optional[int] = None) -> QSeries:
    """Evaluate ``expr`` exactly through q^order."""
    order = resolve_order(order)
    logger.debug(f"Evaluating expression to order {order}")
    return compile_expr(expr)(order)
