"""
Appell-Lerch plus theta closed forms for Hecke-type double sums.

For positive a, b, c with ac < b^2 and a | b, c | b:

    f_{a,b,c}(x, y, q) = h_{a,b,c}(x, y, q, -1, -1) - theta_{a,b,c}(x, y, q) / (Jbar_{0,b^2/a-c} Jbar_{0,b^2/c-a})

Every expansion returns an ExpansionResult with total = appell_part - theta_part.
The (4,4,1), (3,3,1), (1,2,1) and (1,3,1) cases are also available in their
hand-simplified forms.
"""
import logging
from fractions import Fraction
from typing import Iterator, List, Tuple

from app.models import AppellArgs, ExpansionResult, HeckeParams2, QMonomial, ThetaArg
from app.services.appell_lerch import appell, appell_admissible, PoleError
from app.services.series import QSeries, QSeriesError, product_to_order, quotient_to_order
from app.services.theta import (
    Factor,
    ThetaZeroError,
    theta,
    theta_quotient,
    theta_vanishes,
)
from app.utils.lattice import binomial2

logger = logging.getLogger(__name__)

MINUS_ONE = QMonomial(-1, 0)


class PreconditionError(QSeriesError):
    """Raised when a closed form's parameter conditions do not hold."""
    pass


def _theta_times_appell(theta_x: QMonomial, theta_modulus: int, args: AppellArgs, order: int) -> QSeries:
    """j(x; q^a) m(args); the product is zero when the theta vanishes."""
    if not appell_admissible(args):
        if theta_vanishes(ThetaArg(args.z, args.modulus)):
            raise ThetaZeroError(f"m({args.x}, q^{args.modulus}, {args.z}): j(z) vanishes")
        raise PoleError(f"m({args.x}, q^{args.modulus}, {args.z}) has a pole")
    if theta_vanishes(ThetaArg(theta_x, theta_modulus)):
        return QSeries.zero(order)
    return product_to_order([theta(theta_x, theta_modulus), appell(args.x, args.modulus, args.z)], order)


def _sum(parts: List[QSeries], order: int) -> QSeries:
    total = QSeries.zero(order)
    for part in parts:
        total = total + part
    return total


# ---- generic theorem --------------------------------------------------

def _check_params(p: HeckeParams2) -> None:
    a, b, c = p.as_tuple()
    if a * c >= b * b:
        raise PreconditionError(f"({p}): needs ac < b^2")
    if b % a or b % c:
        raise PreconditionError(f"({p}): needs a | b and c | b")


def _moduli(p: HeckeParams2) -> Tuple[int, int, int, int, int]:
    a, b, c = p.as_tuple()
    M1 = b * b // a - c
    M0 = b * b // c - a
    ratio = b * b // (a * c) - 1
    P = b * ratio
    Q = (b * b // a) * ratio
    return M1, M0, P, Q, b ** 3 * (b - a) // (2 * a * a * c)


def _h_args(p: HeckeParams2, x: QMonomial, y: QMonomial,
            z1: QMonomial, z0: QMonomial) -> Tuple[AppellArgs, AppellArgs]:
    a, b, c = p.as_tuple()
    ba, bc = b // a, b // c
    M1, M0 = _moduli(p)[:2]
    first = -(((-y) * ((-x) ** -ba)).shifted(a * binomial2(ba + 1) - c))
    second = -(((-x) * ((-y) ** -bc)).shifted(c * binomial2(bc + 1) - a))
    return AppellArgs(first, M1, z1), AppellArgs(second, M0, z0)


def appell_h(p: HeckeParams2, x: QMonomial, y: QMonomial,
             z1: QMonomial, z0: QMonomial, order: int) -> QSeries:
    """h_{a,b,c}(x, y, q, z1, z0) = j(x; q^a) m(..., z1) + j(y; q^c) m(..., z0)."""
    _check_params(p)
    first, second = _h_args(p, x, y, z1, z0)
    return (_theta_times_appell(x, p.a, first, order)
            + _theta_times_appell(y, p.c, second, order))


def _theta_abc_terms(p: HeckeParams2, x: QMonomial, y: QMonomial
                     ) -> Iterator[Tuple[Tuple[int, int, int], QMonomial, List[Factor], List[Factor]]]:
    a, b, c = p.as_tuple()
    ba, bc = b // a, b // c
    M1, M0, P, Q, K = _moduli(p)
    mx, my = -x, -y
    for d in range(bc):
        for e in range(ba):
            for f in range(ba):
                prefactor = (mx ** f).shifted(
                    M1 * binomial2(d + 1) + M0 * binomial2(e + f + 1) + a * binomial2(f))
                numerators = [
                    ThetaArg(y.shifted(M1 * (d + 1) + b * f), b * b // a),
                    ThetaArg(((mx ** ba) * y.inverse()).shifted(P * (e + f + 1) - M1 * (d + 1) + K), Q),
                    P, P, P,
                    ThetaArg(((mx ** (1 - ba)) * (my ** (1 - bc))).shifted(
                        M0 * (e + 1) + M1 * (d + 1) - c * binomial2(bc) - a * binomial2(ba)), P),
                ]
                denominators = [
                    ThetaArg((mx * (my ** -bc)).shifted(M0 * (e + 1) - c * binomial2(bc)), P),
                    ThetaArg(((mx ** -ba) * my).shifted(M1 * (d + 1) - a * binomial2(ba)), P),
                ]
                yield (d, e, f), prefactor, numerators, denominators


def theta_abc(p: HeckeParams2, x: QMonomial, y: QMonomial, order: int) -> QSeries:
    """The finite theta sum over d < b/c and e, f < b/a."""
    _check_params(p)
    parts = []
    for index, prefactor, numerators, denominators in _theta_abc_terms(p, x, y):
        try:
            parts.append(theta_quotient(numerators, denominators, order, prefactor=prefactor))
        except ThetaZeroError as e:
            raise ThetaZeroError(f"theta_{{{p}}} term (d,e,f)={index}: {e}") from e
    return _sum(parts, order)


def thm_main_admissible(p: HeckeParams2, x: QMonomial, y: QMonomial) -> bool:
    """True when thm_main_expansion is defined at (p, x, y)."""
    a, b, c = p.as_tuple()
    if a * c >= b * b or b % a or b % c:
        return False
    if not all(appell_admissible(args) for args in _h_args(p, x, y, MINUS_ONE, MINUS_ONE)):
        return False
    for _, _, _, denominators in _theta_abc_terms(p, x, y):
        if any(isinstance(f, ThetaArg) and theta_vanishes(f) for f in denominators):
            return False
    return True


def thm_main_expansion(p: HeckeParams2, x: QMonomial, y: QMonomial, order: int) -> ExpansionResult:
    """
    Closed form of f_{a,b,c}(x, y, q) with z1 = z0 = -1.

    Raises:
        PreconditionError: ac >= b^2 or a, c do not divide b
        ThetaZeroError: a denominator theta vanishes (index attached)
        PoleError: an Appell-Lerch argument hits a pole
    """
    _check_params(p)
    M1, M0 = _moduli(p)[:2]
    appell_part = appell_h(p, x, y, MINUS_ONE, MINUS_ONE, order)
    theta_part = quotient_to_order(
        lambda n: theta_abc(p, x, y, n),
        lambda n: theta_quotient([ThetaArg(MINUS_ONE, M1), ThetaArg(MINUS_ONE, M0)], [], n),
        order,
    )
    logger.debug(f"thm_main_expansion({p}; {x}, {y}) evaluated to order {order}")
    return ExpansionResult.combine(appell_part, theta_part)


# ---- hard-coded specializations ---------------------------------------

def h441(x: QMonomial, y: QMonomial, order: int) -> QSeries:
    """j(x; q^4) m(-q^3 y/x, q^3, -1) + j(y; q) m(q^6 x/y^4, q^12, -1)."""
    return (_theta_times_appell(x, 4, AppellArgs(-(y / x).shifted(3), 3, MINUS_ONE), order)
            + _theta_times_appell(y, 1, AppellArgs((x * y ** -4).shifted(6), 12, MINUS_ONE), order))


def h331(x: QMonomial, y: QMonomial, order: int) -> QSeries:
    """j(x; q^3) m(-q^2 y/x, q^2, -1) + j(y; q) m(-q^3 x/y^3, q^6, -1)."""
    return (_theta_times_appell(x, 3, AppellArgs(-(y / x).shifted(2), 2, MINUS_ONE), order)
            + _theta_times_appell(y, 1, AppellArgs(-(x * y ** -3).shifted(3), 6, MINUS_ONE), order))


def f441_expansion(x: QMonomial, y: QMonomial, order: int) -> ExpansionResult:
    parts = []
    for d in range(4):
        numerators = [
            ThetaArg(y.shifted(3 + 3 * d), 4),
            ThetaArg(-(x / y).shifted(9 - 3 * d), 12),
            12, 12, 12,
            ThetaArg(-(y ** -3).shifted(9 + 3 * d), 12),
        ]
        denominators = [
            ThetaArg(MINUS_ONE, 3),
            ThetaArg(MINUS_ONE, 12),
            ThetaArg(-(x * y ** -4).shifted(6), 12),
            ThetaArg((y / x).shifted(3 + 3 * d), 12),
        ]
        try:
            parts.append(theta_quotient(numerators, denominators, order,
                                        prefactor=QMonomial.q(3 * binomial2(d + 1))))
        except ThetaZeroError as e:
            raise ThetaZeroError(f"f441 theta term d={d}: {e}") from e
    return ExpansionResult.combine(h441(x, y, order), _sum(parts, order))


def f331_expansion(x: QMonomial, y: QMonomial, order: int) -> ExpansionResult:
    parts = []
    for d in range(3):
        numerators = [
            ThetaArg(y.shifted(2 + 2 * d), 3),
            ThetaArg(-(x / y).shifted(4 - 2 * d), 6),
            6, 6, 6,
            ThetaArg((y ** -2).shifted(5 + 2 * d), 6),
        ]
        denominators = [
            ThetaArg(QMonomial(-1, 2), 8),
            ThetaArg(QMonomial(-1, 6), 24),
            ThetaArg((x * y ** -3).shifted(3), 6),
            ThetaArg((y / x).shifted(2 + 2 * d), 6),
        ]
        try:
            parts.append(theta_quotient(numerators, denominators, order,
                                        prefactor=QMonomial.q(d * (d + 1)), scalar=Fraction(1, 4)))
        except ThetaZeroError as e:
            raise ThetaZeroError(f"f331 theta term d={d}: {e}") from e
    return ExpansionResult.combine(h331(x, y, order), _sum(parts, order))


def f121_expansion(x: QMonomial, y: QMonomial, order: int) -> ExpansionResult:
    """
    j(y) m(q^2 x/y^2, q^3, -1) + j(x) m(q^2 y/x^2, q^3, -1)
    - y J_3^3 j(-x/y) j(q^2 xy; q^3) / (Jbar_{0,3} j(-q y^2/x; q^3) j(-q x^2/y; q^3)).
    """
    appell_part = (_theta_times_appell(y, 1, AppellArgs((x * y ** -2).shifted(2), 3, MINUS_ONE), order)
                   + _theta_times_appell(x, 1, AppellArgs((y * x ** -2).shifted(2), 3, MINUS_ONE), order))
    theta_part = theta_quotient(
        [3, 3, 3, ThetaArg(-(x / y), 1), ThetaArg((x * y).shifted(2), 3)],
        [ThetaArg(MINUS_ONE, 3), ThetaArg(-(y * y / x).shifted(1), 3), ThetaArg(-(x * x / y).shifted(1), 3)],
        order,
        prefactor=y,
    )
    return ExpansionResult.combine(appell_part, theta_part)


def f131_expansion(x: QMonomial, y: QMonomial, order: int) -> ExpansionResult:
    """
    j(y) m(-q^5 x/y^3, q^8, q^2 y/x) + j(x) m(-q^5 y/x^3, q^8, x/(q^2 y))
    + q^5 x^2 y J_{2,4} J_{8,16} j(q^7 xy; q^8) j(q^22 x^2 y^2; q^16) / (j(-q^5 x^2; q^8) j(-q^9 y^2; q^8)).
    """
    appell_part = (
        _theta_times_appell(y, 1, AppellArgs(-(x * y ** -3).shifted(5), 8, (y / x).shifted(2)), order)
        + _theta_times_appell(x, 1, AppellArgs(-(y * x ** -3).shifted(5), 8, (x / y).shifted(-2)), order)
    )
    added = theta_quotient(
        [ThetaArg(QMonomial.q(2), 4), ThetaArg(QMonomial.q(8), 16),
         ThetaArg((x * y).shifted(7), 8), ThetaArg((x * x * y * y).shifted(22), 16)],
        [ThetaArg(-(x * x).shifted(5), 8), ThetaArg(-(y * y).shifted(9), 8)],
        order,
        prefactor=(x * x * y).shifted(5),
    )
    return ExpansionResult.combine(appell_part, -added)


# ---- reduction helpers ------------------------------------------------

def h_parts_cancel(family: str, m: int, order: int) -> QSeries:
    """
    h(-q^(w+m), q^(2+m)) - q^-m h(-q^(w-m), q^(2-m)) with w = 4 for '441', w = 3 for '331'.

    The combination vanishes identically.
    """
    if family == '441':
        h, w = h441, 4
    elif family == '331':
        h, w = h331, 3
    else:
        raise ValueError(f"Unknown reduction family {family!r}")
    first = h(QMonomial(-1, w + m), QMonomial(1, 2 + m), order)
    second = h(QMonomial(-1, w - m), QMonomial(1, 2 - m), order + m).shift(-m)
    return first - second
