"""
Theta functions, eta products and q-Pochhammer symbols.

j(x; q^M) is evaluated from its bilateral sum after reducing the argument with
the elliptic transformation, so a nonzero theta always has an exactly known
valuation. Product forms are kept only as oracles.
"""
import logging
import math
import time
from typing import Iterable, List, Sequence, Tuple, Union

from app.models import QMonomial, ThetaArg, VerificationReport
from app.services.series import (
    Builder,
    QSeries,
    QSeriesError,
    equal_to_order,
    monomial_times,
    product_to_order,
    quotient_to_order,
)
from app.utils.lattice import binomial2, parabola_range

logger = logging.getLogger(__name__)

# A factor of a theta quotient: a ThetaArg for j(x; q^M), or an int m for J_m.
Factor = Union[ThetaArg, int]


class NonTruncating(QSeriesError):
    """Raised when an infinite product has no finite truncation."""
    pass


class UnsupportedCyclotomic(QSeriesError):
    """Raised for j-identities that need roots of unity beyond -1."""
    pass


class ThetaZeroError(QSeriesError):
    """Raised when a theta function in a denominator vanishes identically."""
    pass


def theta_vanishes(arg: ThetaArg) -> bool:
    """j(x; q^M) = 0 exactly when x = q^(Mk) for an integer k."""
    return arg.x.sign == 1 and arg.x.exp % arg.modulus == 0


def j_elliptic_normalize(arg: ThetaArg) -> Tuple[ThetaArg, int, int]:
    """
    Reduce the exponent of x into [0, M).

    Returns (normalized, sign, shift) with
    j(x; q^M) = sign * q**shift * j(normalized; q^M).
    """
    M = arg.modulus
    n, rem = divmod(arg.x.exp, M)
    sign = arg.x.sign_power(n) * (-1 if n % 2 else 1)
    shift = -M * binomial2(n) - n * rem
    return ThetaArg(QMonomial(arg.x.sign, rem), M), sign, shift


def jtheta_direct(arg: ThetaArg, order: int) -> QSeries:
    """The bilateral sum taken as is, without normalizing the argument first."""
    M, eps, e = arg.modulus, arg.x.sign, arg.x.exp
    terms = {}
    for n in parabola_range(M, e, order):
        exponent = M * binomial2(n) + e * n
        sign = -1 if n % 2 else 1
        if eps < 0 and n % 2:
            sign = -sign
        terms[exponent] = terms.get(exponent, 0) + sign
    return QSeries.from_terms(terms, order)


def jtheta(arg: ThetaArg, order: int) -> QSeries:
    """j(x; q^M) = sum_n (-1)^n q^(M C(n,2)) x^n, exact to ``order``."""
    normalized, sign, shift = j_elliptic_normalize(arg)
    if theta_vanishes(normalized):
        return QSeries.zero(order)
    return jtheta_direct(normalized, order - shift).shift(shift) * sign


def theta(x: QMonomial, modulus: int = 1) -> Builder:
    arg = ThetaArg(x, modulus)
    return lambda order: jtheta(arg, order)


def big_j(a: int, m: int, order: int) -> QSeries:
    """J_{a,m} = j(q^a; q^m)."""
    return jtheta(ThetaArg(QMonomial(1, a), m), order)


def big_j_bar(a: int, m: int, order: int) -> QSeries:
    """J-bar_{a,m} = j(-q^a; q^m)."""
    return jtheta(ThetaArg(QMonomial(-1, a), m), order)


def _binomial_product(factors: Iterable[Tuple[int, int]], order: int) -> QSeries:
    """
    Product of (1 - eps q^d) over (eps, d) pairs, exact to ``order``.

    Factors with d < 0 are rewritten as -eps q^d (1 - eps q^-d); d = 0 gives the
    scalar 1 - eps. Factors with d beyond the remaining budget are skipped.
    """
    scalar, offset, positive = 1, 0, []
    for eps, d in factors:
        if d == 0:
            scalar *= 1 - eps
        elif d < 0:
            scalar *= -eps
            offset += d
            positive.append((eps, -d))
        else:
            positive.append((eps, d))
    budget = order - offset
    if scalar == 0 or budget < 0:
        return QSeries.zero(order)
    coeffs = [0] * (budget + 1)
    coeffs[0] = scalar
    for eps, d in positive:
        for k in range(budget, d - 1, -1):
            coeffs[k] -= eps * coeffs[k - d]
    return QSeries(coeffs, offset, order)


def _progression_factors(eps: int, start: int, step: int, order: int) -> List[Tuple[int, int]]:
    """Factors (1 - eps q^(start + step*i)), i >= 0, that can reach ``order``."""
    negatives = 0
    i = 0
    while start + step * i < 0:
        negatives += start + step * i
        i += 1
    limit = order - negatives
    factors = []
    i = 0
    while start + step * i <= limit:
        factors.append((eps, start + step * i))
        i += 1
    return factors


def eta_product(m: int, order: int) -> QSeries:
    """J_m = (q^m; q^m)_inf."""
    if m < 1:
        raise ValueError(f"Eta product index must be positive, got {m}")
    return _binomial_product(((1, m * i) for i in range(1, order // m + 1)) if order >= m else (), order)


def eta(m: int) -> Builder:
    return lambda order: eta_product(m, order)


def pochhammer(x: QMonomial, n: Union[int, float], order: int, modulus: int = 1) -> QSeries:
    """
    (x; q^M)_n = prod_{i=0}^{n-1} (1 - x q^(M i)).

    ``n`` may be ``math.inf`` provided the product truncates, i.e. x.exp >= 1
    or x = -q^e with e >= 0.

    Raises:
        NonTruncating: infinite product with an argument that does not truncate
    """
    if modulus < 1:
        raise ValueError(f"Pochhammer base modulus must be positive, got {modulus}")
    if n == math.inf:
        if not (x.exp >= 1 or (x.sign == -1 and x.exp >= 0)):
            raise NonTruncating(f"({x}; q^{modulus})_inf does not truncate")
        return _binomial_product(_progression_factors(x.sign, x.exp, modulus, order), order)
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValueError(f"Pochhammer length must be a nonnegative integer or inf, got {n!r}")
    return _binomial_product(((x.sign, x.exp + modulus * i) for i in range(n)), order)


def jtheta_product_form(arg: ThetaArg, order: int) -> QSeries:
    """(x; q^M)_inf (q^M/x; q^M)_inf (q^M; q^M)_inf, the triple-product side."""
    M, eps, e = arg.modulus, arg.x.sign, arg.x.exp
    factors = (_progression_factors(eps, e, M, order)
               + _progression_factors(eps, M - e, M, order)
               + _progression_factors(1, M, M, order))
    # the progressions' negative parts shift each other's budget
    negatives = sum(d for _, d in factors if d < 0)
    if negatives:
        budget = order - negatives
        factors = (_progression_factors(eps, e, M, budget)
                   + _progression_factors(eps, M - e, M, budget)
                   + _progression_factors(1, M, M, budget))
    return _binomial_product(factors, order)


def _factor_builder(factor: Factor) -> Builder:
    if isinstance(factor, ThetaArg):
        return lambda order: jtheta(factor, order)
    return eta(factor)


def theta_quotient(numerators: Sequence[Factor],
                   denominators: Sequence[Factor],
                   order: int,
                   prefactor: QMonomial = QMonomial(),
                   scalar=1) -> QSeries:
    """
    scalar * prefactor * prod(numerators) / prod(denominators), exact to ``order``.

    Raises:
        ThetaZeroError: if a denominator theta vanishes identically
    """
    for factor in denominators:
        if isinstance(factor, ThetaArg) and theta_vanishes(factor):
            raise ThetaZeroError(f"j({factor.x}; q^{factor.modulus}) vanishes in a denominator")
    num_builders = [_factor_builder(f) for f in numerators]
    den_builders = [_factor_builder(f) for f in denominators]

    def num(n: int) -> QSeries:
        return product_to_order(num_builders, n) if num_builders else QSeries.one(n)

    def den(n: int) -> QSeries:
        return product_to_order(den_builders, n) if den_builders else QSeries.one(n)

    def body(n: int) -> QSeries:
        return quotient_to_order(num, den, n) if den_builders else num(n)

    return monomial_times(prefactor, body, order) * scalar


def j_mod_inc(arg: ThetaArg, n: int, order: int) -> QSeries:
    """
    Right side of j(x; q) = J_1 j(x, qx, ..., q^(n-1) x; q^n) / J_n^n, in base q^M.
    """
    if n < 1:
        raise ValueError(f"j_mod_inc needs n >= 1, got {n}")
    M = arg.modulus
    thetas = [ThetaArg(arg.x.shifted(M * i), M * n) for i in range(n)]
    return theta_quotient([M] + thetas, [M * n] * n, order)


def j_mod_dec(arg: ThetaArg, n: int, order: int) -> QSeries:
    """
    Right side of j(x^n; q^n) as a product of j(zeta x; q) for n <= 2.

    For n = 2: j(x^2; q^2) = J_2 j(x; q) j(-x; q) / J_1^2 (base q^M in general).

    Raises:
        UnsupportedCyclotomic: for n > 2
    """
    M = arg.modulus
    if n == 1:
        return jtheta(arg, order)
    if n == 2:
        return theta_quotient([2 * M, arg, ThetaArg(-arg.x, M)], [M, M], order)
    raise UnsupportedCyclotomic(f"j_mod_dec for n={n} needs primitive {n}-th roots of unity")


def j_inversion_forms(arg: ThetaArg, order: int) -> Tuple[QSeries, QSeries]:
    """j(q^M/x; q^M) and -x j(1/x; q^M); both equal j(x; q^M)."""
    M = arg.modulus
    reflected = jtheta(ThetaArg(arg.x.inverse().shifted(M), M), order)
    inverted = monomial_times(-arg.x, theta(arg.x.inverse(), M), order)
    return reflected, inverted


def h1_theorem_sides(x: QMonomial, y: QMonomial, order: int) -> Tuple[QSeries, QSeries]:
    """j(-x)j(y) + j(x)j(-y) and 2 j(xy; q^2) j(q y/x; q^2)."""
    lhs = (product_to_order([theta(-x), theta(y)], order)
           + product_to_order([theta(x), theta(-y)], order))
    rhs = product_to_order([theta(x * y, 2), theta((y / x).shifted(1), 2)], order) * 2
    return lhs, rhs


def h1_theorem_check(x: QMonomial, y: QMonomial, order: int) -> VerificationReport:
    started = time.perf_counter()
    lhs, rhs = h1_theorem_sides(x, y, order)
    comparison = equal_to_order(lhs, rhs, order)
    return VerificationReport(
        name=f'h1-theorem[{x},{y}]',
        order_checked=order,
        passed=comparison.equal,
        first_mismatch=comparison.mismatch(f'x={x}, y={y}'),
        wall_time=time.perf_counter() - started,
    )


def _arg(sign: int, a: int, m: int) -> ThetaArg:
    return ThetaArg(QMonomial(sign, a), m)


# (label, theta factors, (eta numerators, eta denominators), scalar)
PRODUCT_REARRANGEMENTS = [
    ('Jbar_{0,1} = 2 J_2^2/J_1', [_arg(-1, 0, 1)], ([2, 2], [1]), 2),
    ('Jbar_{1,2} = J_2^5/(J_1^2 J_4^2)', [_arg(-1, 1, 2)], ([2] * 5, [1, 1, 4, 4]), 1),
    ('J_{1,2} = J_1^2/J_2', [_arg(1, 1, 2)], ([1, 1], [2]), 1),
    ('Jbar_{1,3} = J_2 J_3^2/(J_1 J_6)', [_arg(-1, 1, 3)], ([2, 3, 3], [1, 6]), 1),
    ('J_{1,4} = J_1 J_4/J_2', [_arg(1, 1, 4)], ([1, 4], [2]), 1),
    ('J_{1,6} = J_1 J_6^2/(J_2 J_3)', [_arg(1, 1, 6)], ([1, 6, 6], [2, 3]), 1),
    ('Jbar_{1,6} = J_2^2 J_3 J_12/(J_1 J_4 J_6)', [_arg(-1, 1, 6)], ([2, 2, 3, 12], [1, 4, 6]), 1),
]


def rearrangement_sides(index: int, order: int) -> Tuple[QSeries, QSeries]:
    """Theta side and eta side of PRODUCT_REARRANGEMENTS[index]."""
    _, thetas, (num, den), scalar = PRODUCT_REARRANGEMENTS[index]
    return theta_quotient(thetas, [], order), theta_quotient(num, den, order, scalar=scalar)


def product_rearrangements(order: int) -> List[Tuple[str, QSeries, QSeries]]:
    """The standard theta-to-eta rearrangements as (label, theta side, eta side)."""
    return [(rule[0],) + rearrangement_sides(i, order) for i, rule in enumerate(PRODUCT_REARRANGEMENTS)]
