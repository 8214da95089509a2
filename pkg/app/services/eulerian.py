"""
Eulerian (q-hypergeometric) series and partial theta sums.

Each Eulerian sum below has an n-th summand of valuation >= n, so summing
n = 0 .. order is complete.
"""
import logging
import math
from typing import Callable

from app.models import HeckeParams3, PartialThetaSpec, QMonomial
from app.services.hecke import triple_sum
from app.services.series import QSeries, invert, monomial_times, product_to_order, quotient_to_order
from app.services.theta import pochhammer
from app.utils.lattice import parabola_range

logger = logging.getLogger(__name__)

Q = QMonomial.q


def _eulerian_sum(summand: Callable[[int, int], QSeries], order: int) -> QSeries:
    """sum_{n=0}^{order} summand(n, order)."""
    total = QSeries.zero(order)
    for n in range(max(order, -1) + 1):
        total = total + summand(n, order)
    return total


def chi0(order: int) -> QSeries:
    """sum_{n>=0} q^n / (q^{n+1}; q)_n."""
    def summand(n: int, order: int) -> QSeries:
        return invert(pochhammer(Q(n + 1), n, order - n)).shift(n)
    return _eulerian_sum(summand, order)


def chi1(order: int) -> QSeries:
    """sum_{n>=0} q^n / (q^{n+1}; q)_{n+1}."""
    def summand(n: int, order: int) -> QSeries:
        return invert(pochhammer(Q(n + 1), n + 1, order - n)).shift(n)
    return _eulerian_sum(summand, order)


def kl_lhs_A(order: int) -> QSeries:
    """sum_{n>=0} (q; q)_{2n} q^n / (q; q)_n^2."""
    def summand(n: int, order: int) -> QSeries:
        budget = order - n
        return (pochhammer(Q(1), 2 * n, budget) / pochhammer(Q(1), n, budget) ** 2).shift(n)
    return _eulerian_sum(summand, order)


def kl_lhs_B(order: int) -> QSeries:
    """sum_{n>=0} (q; q^2)_n q^n / (q; q)_n."""
    def summand(n: int, order: int) -> QSeries:
        budget = order - n
        return (pochhammer(Q(1), n, budget, modulus=2) / pochhammer(Q(1), n, budget)).shift(n)
    return _eulerian_sum(summand, order)


def partial_theta(spec: PartialThetaSpec, order: int) -> QSeries:
    """sum_{r>=0} (+-1)^r q^((A r^2 + B r)/2 + C); zero series when order < C."""
    # (A r^2 + B r)/2 = A C(r,2) + ((A + B)/2) r
    terms = {}
    for r in parabola_range(spec.A, (spec.A + spec.B) // 2, order - spec.C, lower=0):
        sign = -1 if spec.alternating and r % 2 else 1
        exponent = spec.exponent(r)
        terms[exponent] = terms.get(exponent, 0) + sign
    return QSeries.from_terms(terms, order)


# ---- generic-a Kim-Lovejoy forms --------------------------------------

def _check_generic_a(a: QMonomial) -> None:
    if a == QMonomial(1, 0):
        return
    if a.sign == -1 and a.exp in (-1, 0, 1):
        return
    raise ValueError(f"Generic-a forms support a = 1 or a = -q^e with |e| <= 1, got {a}")


def kl_generic_lhs_A(a: QMonomial, order: int) -> QSeries:
    """sum_{n>=0} (q)_{2n} q^n / ((aq)_n (q/a)_n)."""
    _check_generic_a(a)
    aq, q_over_a = a.shifted(1), a.inverse().shifted(1)

    def summand(n: int, order: int) -> QSeries:
        budget = order - n
        den = pochhammer(aq, n, budget) * pochhammer(q_over_a, n, budget)
        return (pochhammer(Q(1), 2 * n, budget) / den).shift(n)
    return _eulerian_sum(summand, order)


def kl_generic_lhs_B(a: QMonomial, order: int) -> QSeries:
    """sum_{n>=0} (q; q^2)_n (q)_n q^n / ((aq)_n (q/a)_n)."""
    _check_generic_a(a)
    aq, q_over_a = a.shifted(1), a.inverse().shifted(1)

    def summand(n: int, order: int) -> QSeries:
        budget = order - n
        num = pochhammer(Q(1), n, budget, modulus=2) * pochhammer(Q(1), n, budget)
        den = pochhammer(aq, n, budget) * pochhammer(q_over_a, n, budget)
        return (num / den).shift(n)
    return _eulerian_sum(summand, order)


def _generic_rhs(a: QMonomial, params: HeckeParams3, first: tuple, second_shift: int,
                 second: tuple, order: int) -> QSeries:
    # a enters only through the z argument of both triple sums
    _check_generic_a(a)
    aq, q_over_a = a.shifted(1), a.inverse().shifted(1)

    def triple_pair(n: int) -> QSeries:
        head = triple_sum(params, *first)(n)
        tail = monomial_times(Q(second_shift), triple_sum(params, *second), n)
        return head + tail

    def infinite_products(n: int) -> QSeries:
        return product_to_order([
            lambda m: pochhammer(Q(1), math.inf, m),
            lambda m: pochhammer(aq, math.inf, m),
            lambda m: pochhammer(q_over_a, math.inf, m),
        ], n)

    return quotient_to_order(triple_pair, infinite_products, order)


def kl_generic_rhs_A(a: QMonomial, order: int) -> QSeries:
    """(g_{1,7,1,1,1,1}(q^2, q^3, aq) + q^4 g_{1,7,1,1,1,1}(q^6, q^7, aq^2)) / (q, aq, q/a)_inf."""
    params = HeckeParams3(1, 7, 1, 1, 1, 1)
    return _generic_rhs(a, params, (Q(2), Q(3), a.shifted(1)), 4, (Q(6), Q(7), a.shifted(2)), order)


def kl_generic_rhs_B(a: QMonomial, order: int) -> QSeries:
    """(g_{1,5,1,1,1,1}(q^2, q^2, aq) + q^3 g_{1,5,1,1,1,1}(q^5, q^5, aq^2)) / (q, aq, q/a)_inf."""
    params = HeckeParams3(1, 5, 1, 1, 1, 1)
    return _generic_rhs(a, params, (Q(2), Q(2), a.shifted(1)), 3, (Q(5), Q(5), a.shifted(2)), order)
