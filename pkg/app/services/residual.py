"""
Residual of the conjectured Appell-Lerch form of g_{1,3,1,3,3,1}(q, q, q).

The residual is the triple sum minus the four Appell-Lerch terms with z = -1.
No closed form is known for it, so it is computed, checked for stability
across orders and emitted; it is never asserted equal to anything.
"""
import logging
import time
from typing import List, Optional, Tuple

from app.models import HeckeParams3, QMonomial, ResidualReport
from app.services.appell_lerch import appell
from app.services.hecke import triple_sum
from app.services.series import Builder, QSeries, equal_to_order, monomial_times, product_to_order
from app.services.theta import theta

logger = logging.getLogger(__name__)

Q = QMonomial.q
MINUS_ONE = QMonomial(-1, 0)

G131331 = HeckeParams3(1, 3, 1, 3, 3, 1)

# (coefficient, q-power, Jbar_{a,8} index a, m(x, q^56, -1) argument)
APPELL_TERMS: List[Tuple[int, int, int, QMonomial]] = [
    (3, 0, 3, QMonomial(-1, 27)),
    (3, -2, 3, QMonomial(-1, 13)),
    (-3, -7, 1, QMonomial(-1, -1)),
    (-3, -16, 1, QMonomial(-1, -15)),
]


def _appell_term(coefficient: int, power: int, bar_index: int, x: QMonomial, order: int) -> QSeries:
    factors: List[Builder] = [
        theta(Q(1), 2),
        theta(QMonomial(-1, bar_index), 8),
        appell(x, 56, MINUS_ONE),
    ]
    return monomial_times(Q(power), lambda n: product_to_order(factors, n), order) * coefficient


def appell_approximation(order: int) -> QSeries:
    """The four Appell-Lerch terms of the conjectured form."""
    total = QSeries.zero(order)
    for coefficient, power, bar_index, x in APPELL_TERMS:
        total = total + _appell_term(coefficient, power, bar_index, x, order)
    return total


def conjecture_residual(order: int) -> QSeries:
    return triple_sum(G131331, Q(1), Q(1), Q(1))(order) - appell_approximation(order)


def residual_stability(low: int, high: int) -> Tuple[bool, QSeries]:
    """
    Recompute the residual at ``high`` and compare it with the ``low`` result.

    Returns:
        (agrees through q^low, residual at order high)
    """
    if high < low:
        raise ValueError(f"Stability check needs high >= low, got {low} and {high}")
    coarse = conjecture_residual(low)
    fine = conjecture_residual(high)
    stable = bool(equal_to_order(coarse, fine, low))
    logger.info(f"Residual through q^{low} {'stable' if stable else 'UNSTABLE'} at order {high}")
    return stable, fine


def residual_report(order: int, stability_order: Optional[int] = None) -> ResidualReport:
    """Residual at ``order``, its integrality and, optionally, a stability check at a higher order."""
    started = time.perf_counter()
    series = conjecture_residual(order)
    details = {'order': order}
    if stability_order is not None:
        if stability_order < order:
            raise ValueError(f"Stability order {stability_order} is below the residual order {order}")
        stable = bool(equal_to_order(series, conjecture_residual(stability_order), order))
        details.update({'stability_order': stability_order, 'stable': stable})
    integral = series.is_integral()
    if not integral:
        logger.info("Residual has non-integral coefficients")
    return ResidualReport(series, integral, time.perf_counter() - started, details)
