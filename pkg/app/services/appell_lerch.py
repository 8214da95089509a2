"""
Appell-Lerch sums m(x, q^M, z) for signed q-power arguments.

    m(x, q, z) = 1/j(z; q) * sum_r (-1)^r q^C(r,2) z^r / (1 - q^(r-1) x z)

Each summand's denominator is expanded as a geometric series in q; the bilateral
sum is then divided by j(z; q^M).
"""
import logging
from fractions import Fraction
from typing import Dict, Tuple

from app.models import AppellArgs, QMonomial, ThetaArg
from app.services.series import Builder, QSeries, QSeriesError, quotient_to_order
from app.services.theta import ThetaZeroError, jtheta, theta_quotient, theta_vanishes
from app.utils.lattice import binomial2, parabola_range

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class PoleError(QSeriesError):
    """Raised when a summand denominator 1 - q^(M(r-1)) x z vanishes identically."""
    pass


def _has_pole(args: AppellArgs) -> bool:
    sigma = args.x.sign * args.z.sign
    return sigma == 1 and (args.x.exp + args.z.exp) % args.modulus == 0


def appell_admissible(args: AppellArgs) -> bool:
    """True when m(x, q^M, z) is defined: j(z; q^M) != 0 and no summand has a pole."""
    return not theta_vanishes(ThetaArg(args.z, args.modulus)) and not _has_pole(args)


def _check(args: AppellArgs) -> None:
    if theta_vanishes(ThetaArg(args.z, args.modulus)):
        raise ThetaZeroError(f"m({args.x}, q^{args.modulus}, {args.z}): j(z; q^{args.modulus}) vanishes")
    if _has_pole(args):
        raise PoleError(f"m({args.x}, q^{args.modulus}, {args.z}): a summand denominator vanishes")


def _bilateral_part(args: AppellArgs, budget: int, margin: int) -> QSeries:
    """sum_r (-1)^r q^(M C(r,2)) z^r / (1 - q^(M(r-1)) x z) to ``budget``."""
    M, x, z = args.modulus, args.x, args.z
    sigma = x.sign * z.sign
    terms: Dict[int, Fraction] = {}

    def put(exponent: int, coef) -> None:
        terms[exponent] = terms.get(exponent, 0) + coef

    count = 0
    for r in parabola_range(M, z.exp, budget, margin=margin):
        base = M * binomial2(r) + z.exp * r
        sign = (-1 if r % 2 else 1) * z.sign_power(r)
        E = M * (r - 1) + x.exp + z.exp
        if E == 0:
            put(base, sign * HALF)
            count += 1
            continue
        if E > 0:
            start, step, coef = base, E, sign
        else:
            start, step, coef = base - E, -E, -sign * sigma
        if start > budget:
            continue
        exponent = start
        while exponent <= budget:
            put(exponent, coef)
            coef *= sigma
            exponent += step
        count += 1
    logger.debug(f"m({x}, q^{M}, {z}): {count} bilateral terms below q^{budget}")
    return QSeries.from_terms(terms, budget)


def appell_m(args: AppellArgs, order: int, margin: int = 2) -> QSeries:
    """
    Evaluate m(x, q^M, z) exactly to ``order``.

    Raises:
        ThetaZeroError: j(z; q^M) vanishes
        PoleError: 1 - q^(M(r-1)) x z vanishes for some r
    """
    _check(args)
    z_theta = ThetaArg(args.z, args.modulus)
    return quotient_to_order(
        lambda n: _bilateral_part(args, n, margin),
        lambda n: jtheta(z_theta, n),
        order,
    )


def appell(x: QMonomial, modulus: int, z: QMonomial, margin: int = 2) -> Builder:
    args = AppellArgs(x, modulus, z)
    return lambda order: appell_m(args, order, margin)


def appell_flip(args: AppellArgs) -> Tuple[AppellArgs, QMonomial]:
    """m(x, q, z) = x^-1 m(x^-1, q, z^-1); returns the new arguments and x^-1."""
    return AppellArgs(args.x.inverse(), args.modulus, args.z.inverse()), args.x.inverse()


def appell_x_step(args: AppellArgs) -> Tuple[int, QMonomial, AppellArgs]:
    """
    m(x, q^M, z) = 1 - q^-M x m(q^-M x, q^M, z).

    Returns (1, -q^-M x, shifted arguments) so that
    m(args) = constant + factor * m(shifted).
    """
    M = args.modulus
    factor = -args.x.shifted(-M)
    return 1, factor, AppellArgs(args.x.shifted(-M), M, args.z)


def appell_z_change(x: QMonomial, modulus: int, z1: QMonomial, z0: QMonomial, order: int) -> QSeries:
    """
    m(x, q^M, z1) - m(x, q^M, z0) as the theta quotient

        z0 J_M^3 j(z1/z0) j(x z0 z1) / (j(z0) j(z1) j(x z0) j(x z1)),  all in base q^M.
    """
    M = modulus
    return theta_quotient(
        [M, M, M, ThetaArg(z1 / z0, M), ThetaArg(x * z0 * z1, M)],
        [ThetaArg(z0, M), ThetaArg(z1, M), ThetaArg(x * z0, M), ThetaArg(x * z1, M)],
        order,
        prefactor=z0,
    )
