"""
Hecke-type double sums f_{a,b,c}(x, y, q) and triple sums g_{a,b,c,d,e,f}(x, y, z, q).

    f = (sum_{r,s >= 0} - sum_{r,s < 0}) (-1)^(r+s) x^r y^s q^(a C(r,2) + b rs + c C(s,2))
    g = (sum_{r,s,t >= 0} + sum_{r,s,t < 0}) (-1)^(r+s+t) x^r y^s z^t q^(...)

Both are evaluated by octant enumeration. The sg-weighted box sums are kept as
oracles, and the shift and flip functional equations are exposed as explicit
decompositions.
"""
import logging
import time
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from app.models import (
    HeckeParams2,
    HeckeParams3,
    QMonomial,
    ShiftDecomposition,
    VerificationReport,
)
from app.services.series import Builder, QSeries, equal_to_order, monomial_times
from app.services.theta import theta
from app.utils.lattice import (
    QuadraticForm,
    binomial2,
    coverage_box,
    finite_range,
    line_points,
    octant_points,
    sg2,
    sg3,
)

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


def _point_sign(signs: Sequence[int], point: Point) -> int:
    """prod signs[i]**point[i] for signs in {1, -1}."""
    result = 1
    for s, n in zip(signs, point):
        if s < 0 and n % 2:
            result = -result
    return result


def _alternating_signs(*monomials: QMonomial) -> Tuple[int, ...]:
    # (-1)^n x^n contributes (-x.sign)^n
    return tuple(-m.sign for m in monomials)


def _octant_sum(form: QuadraticForm, signs: Sequence[int], order: int,
                negative_weight: int) -> Dict[int, int]:
    terms: Dict[int, int] = {}
    count = 0
    for negative, weight in ((False, 1), (True, negative_weight)):
        for point, exponent in octant_points(form, order, negative=negative):
            terms[exponent] = terms.get(exponent, 0) + weight * _point_sign(signs, point)
            count += 1
    logger.debug(f"octant sum over {form.diag}: {count} lattice points below q^{order}")
    return terms


def hecke_f(p: HeckeParams2, x: QMonomial, y: QMonomial, order: int) -> QSeries:
    """f_{a,b,c}(x, y, q) exact to ``order``."""
    form = QuadraticForm.double(p.a, p.b, p.c, (x.exp, y.exp))
    return QSeries.from_terms(_octant_sum(form, _alternating_signs(x, y), order, -1), order)


def hecke_g(p: HeckeParams3, x: QMonomial, y: QMonomial, z: QMonomial, order: int) -> QSeries:
    """g_{a,b,c,d,e,f}(x, y, z, q) exact to ``order``; both octants enter with +."""
    form = QuadraticForm.triple(*p.as_tuple(), (x.exp, y.exp, z.exp))
    return QSeries.from_terms(_octant_sum(form, _alternating_signs(x, y, z), order, 1), order)


def double_sum(p: HeckeParams2, x: QMonomial, y: QMonomial) -> Builder:
    return lambda order: hecke_f(p, x, y, order)


def triple_sum(p: HeckeParams3, x: QMonomial, y: QMonomial, z: QMonomial) -> Builder:
    return lambda order: hecke_g(p, x, y, z, order)


def hecke_f_box(p: HeckeParams2, x: QMonomial, y: QMonomial, order: int) -> QSeries:
    """Oracle: sum over the box [-B, B]^2 with sg(r, s) weights."""
    form = QuadraticForm.double(p.a, p.b, p.c, (x.exp, y.exp))
    bound = coverage_box(form, order)
    signs = _alternating_signs(x, y)
    terms: Dict[int, Fraction] = {}
    for r in range(-bound, bound + 1):
        for s in range(-bound, bound + 1):
            weight = sg2(r, s)
            if not weight:
                continue
            exponent = form.value((r, s))
            if exponent <= order:
                terms[exponent] = terms.get(exponent, 0) + weight * _point_sign(signs, (r, s))
    return QSeries.from_terms(terms, order)


def hecke_g_box(p: HeckeParams3, x: QMonomial, y: QMonomial, z: QMonomial, order: int) -> QSeries:
    """Oracle: sum over the box [-B, B]^3 restricted to sg(r) = sg(s) = sg(t)."""
    form = QuadraticForm.triple(*p.as_tuple(), (x.exp, y.exp, z.exp))
    bound = coverage_box(form, order)
    signs = _alternating_signs(x, y, z)
    terms: Dict[int, int] = {}
    span = range(-bound, bound + 1)
    for r in span:
        for s in span:
            for t in span:
                if not sg3(r, s, t):
                    continue
                exponent = form.value((r, s, t))
                if exponent <= order:
                    terms[exponent] = terms.get(exponent, 0) + _point_sign(signs, (r, s, t))
    return QSeries.from_terms(terms, order)


# ---- double-sum functional equations ----------------------------------

def f_flip(p: HeckeParams2, x: QMonomial, y: QMonomial) -> Tuple[QMonomial, Tuple[QMonomial, QMonomial]]:
    """
    f(x, y) = -q^(a+b+c)/(xy) f(q^(2a+b)/x, q^(2c+b)/y).

    Returns (prefactor, (x', y')).
    """
    a, b, c = p.as_tuple()
    prefactor = QMonomial(-x.sign * y.sign, a + b + c - x.exp - y.exp)
    return prefactor, (QMonomial(x.sign, 2 * a + b - x.exp), QMonomial(y.sign, 2 * c + b - y.exp))


def _theta_line(mon: QMonomial, theta_x: QMonomial, modulus: int, order: int) -> QSeries:
    return monomial_times(mon, theta(theta_x, modulus), order)


def f_shift(p: HeckeParams2, x: QMonomial, y: QMonomial, l: int, k: int, order: int) -> ShiftDecomposition:
    """
    Shift by (l, k):

        f(x, y) = (-x)^l (-y)^k q^(a C(l,2) + b l k + c C(k,2)) f(q^(al+bk) x, q^(bl+ck) y)
                  + sum_{m=0}^{l-1} (-x)^m q^(a C(m,2)) j(q^(mb) y; q^c)
                  + sum_{m=0}^{k-1} (-y)^m q^(c C(m,2)) j(q^(mb) x; q^a)

    Negative l or k use the reversed-range convention.
    """
    a, b, c = p.as_tuple()
    prefactor = ((-x) ** l) * ((-y) ** k) * QMonomial.q(a * binomial2(l) + b * l * k + c * binomial2(k))
    new_x, new_y = x.shifted(a * l + b * k), y.shifted(b * l + c * k)
    shifted = monomial_times(prefactor, double_sum(p, new_x, new_y), order)

    first = QSeries.zero(order)
    for m, weight in finite_range(l):
        mon = ((-x) ** m).shifted(a * binomial2(m))
        first = first + _theta_line(mon, y.shifted(m * b), c, order) * weight
    second = QSeries.zero(order)
    for m, weight in finite_range(k):
        mon = ((-y) ** m).shifted(c * binomial2(m))
        second = second + _theta_line(mon, x.shifted(m * b), a, order) * weight
    return ShiftDecomposition(shifted, (first, second), ())


# ---- triple-sum functional equations ----------------------------------

def g_flip(p: HeckeParams3, x: QMonomial, y: QMonomial, z: QMonomial) -> Tuple[QMonomial, Tuple[QMonomial, ...]]:
    """
    g(x, y, z) = -q^(a+...+f)/(xyz) g(q^(2a+b+d)/x, q^(b+2c+e)/y, q^(d+e+2f)/z).
    """
    a, b, c, d, e, f = p.as_tuple()
    prefactor = QMonomial(-x.sign * y.sign * z.sign, a + b + c + d + e + f - x.exp - y.exp - z.exp)
    return prefactor, (
        QMonomial(x.sign, 2 * a + b + d - x.exp),
        QMonomial(y.sign, b + 2 * c + e - y.exp),
        QMonomial(z.sign, d + e + 2 * f - z.exp),
    )


def g_shift(p: HeckeParams3, x: QMonomial, y: QMonomial, z: QMonomial,
            R: int, S: int, T: int, order: int) -> ShiftDecomposition:
    """
    Shift of g by (R, S, T).

    ``shifted`` is the g term at the moved arguments, ``added`` holds the three
    single-index sums of double sums f, ``subtracted`` the three double-index
    sums of theta functions. Negative R, S, T use the reversed-range convention.
    """
    a, b, c, d, e, f = p.as_tuple()
    form = QuadraticForm.triple(a, b, c, d, e, f, (0, 0, 0))
    prefactor = (((-x) ** R) * ((-y) ** S) * ((-z) ** T)).shifted(form.value((R, S, T)))
    moved = (x.shifted(a * R + b * S + d * T), y.shifted(b * R + c * S + e * T), z.shifted(d * R + e * S + f * T))
    shifted = monomial_times(prefactor, triple_sum(p, *moved), order)

    def f_sum(count: int, mon: QMonomial, quad: int, inner: HeckeParams2, first_arg, second_arg) -> QSeries:
        total = QSeries.zero(order)
        for n, weight in finite_range(count):
            lead = (mon ** n).shifted(quad * binomial2(n))
            total = total + monomial_times(lead, double_sum(inner, first_arg(n), second_arg(n)), order) * weight
        return total

    added = (
        f_sum(R, -x, a, HeckeParams2(c, e, f), lambda r: y.shifted(b * r), lambda r: z.shifted(d * r)),
        f_sum(S, -y, c, HeckeParams2(a, d, f), lambda s: x.shifted(b * s), lambda s: z.shifted(e * s)),
        f_sum(T, -z, f, HeckeParams2(a, b, c), lambda t: x.shifted(d * t), lambda t: y.shifted(e * t)),
    )

    def theta_sum(outer_count: int, outer: QMonomial, outer_quad: int,
                  inner_count: int, inner: QMonomial, inner_quad: int,
                  cross: int, theta_of, modulus: int) -> QSeries:
        total = QSeries.zero(order)
        for u, wu in finite_range(outer_count):
            for v, wv in finite_range(inner_count):
                lead = ((outer ** u) * (inner ** v)).shifted(
                    outer_quad * binomial2(u) + inner_quad * binomial2(v) + cross * u * v)
                total = total + _theta_line(lead, theta_of(u, v), modulus, order) * (wu * wv)
        return total

    subtracted = (
        theta_sum(R, -x, a, T, -z, f, d, lambda r, t: y.shifted(b * r + e * t), c),
        theta_sum(S, -y, c, T, -z, f, e, lambda s, t: x.shifted(b * s + d * t), a),
        theta_sum(R, -x, a, S, -y, c, b, lambda r, s: z.shifted(d * r + e * s), f),
    )
    return ShiftDecomposition(shifted, added, subtracted)


def _lattice_series(pieces: Iterable[Tuple[int, Iterable[Tuple[Point, int]]]],
                    signs: Sequence[int], order: int) -> QSeries:
    terms: Dict[int, int] = {}
    for weight, points in pieces:
        for point, exponent in points:
            terms[exponent] = terms.get(exponent, 0) + weight * _point_sign(signs, point)
    return QSeries.from_terms(terms, order)


def generic_shift_sides(p: HeckeParams3, x: QMonomial, y: QMonomial, z: QMonomial,
                        R: int, S: int, T: int, order: int) -> Tuple[QSeries, QSeries]:
    """
    Both sides of the finite rearrangement behind the triple-sum shift.

    With c_{r,s,t} = (-1)^(r+s+t) x^r y^s z^t q^Q(r,s,t), the sum of c over the cone
    sg(r)=sg(s)=sg(t) minus the same sum of c_{r+R,s+S,t+T} equals three one-index
    sums of signed cones minus three two-index sums over full lines. Every piece
    is enumerated directly from the quadratic form.
    """
    form = QuadraticForm.triple(*p.as_tuple(), (x.exp, y.exp, z.exp))
    signs = _alternating_signs(x, y, z)
    offset = (R, S, T)

    def cone(f: QuadraticForm):
        yield from octant_points(f, order)
        yield from octant_points(f, order, negative=True)

    def moved_cone():
        for point, exponent in cone(form.shifted(offset)):
            yield tuple(n + o for n, o in zip(point, offset)), exponent

    lhs = _lattice_series([(1, cone(form)), (-1, moved_cone())], signs, order)

    def signed_cones(axis: int, count: int):
        for v, weight in finite_range(count):
            sub = form.fix(axis, v)
            for negative, w in ((False, weight), (True, -weight)):
                def points(sub=sub, negative=negative, v=v):
                    for point, exponent in octant_points(sub, order, negative=negative):
                        yield point[:axis] + (v,) + point[axis:], exponent
                yield w, points()

    def full_lines(first: int, count1: int, second: int, count2: int):
        free = ({0, 1, 2} - {first, second}).pop()
        for u, wu in finite_range(count1):
            for v, wv in finite_range(count2):
                fixed = {first: u, second: v}
                # fix the larger axis first so indices stay valid
                sub = form
                for axis in sorted(fixed, reverse=True):
                    sub = sub.fix(axis, fixed[axis])

                def points(sub=sub, fixed=fixed):
                    for n, exponent in line_points(sub.diag[0], sub.lin[0], sub.const, order):
                        point = [0, 0, 0]
                        point[free] = n
                        for axis, val in fixed.items():
                            point[axis] = val
                        yield tuple(point), exponent
                yield -wu * wv, points()

    pieces = []
    for axis, count in enumerate(offset):
        pieces.extend(signed_cones(axis, count))
    pieces.extend(full_lines(0, R, 2, T))
    pieces.extend(full_lines(1, S, 2, T))
    pieces.extend(full_lines(0, R, 1, S))
    rhs = _lattice_series(pieces, signs, order)
    return lhs, rhs


def generic_shift_check(p: HeckeParams3, x: QMonomial, y: QMonomial, z: QMonomial,
                        R: int, S: int, T: int, order: int) -> VerificationReport:
    started = time.perf_counter()
    lhs, rhs = generic_shift_sides(p, x, y, z, R, S, T, order)
    comparison = equal_to_order(lhs, rhs, order)
    return VerificationReport(
        name=f'generic-shift[{p};R={R},S={S},T={T}]',
        order_checked=order,
        passed=comparison.equal,
        first_mismatch=comparison.mismatch(f'x={x}, y={y}, z={z}'),
        wall_time=time.perf_counter() - started,
    )
