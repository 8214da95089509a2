"""
Identities among Hecke-type double sums f_{a,b,c}(x, y, q).

Covers the flip and shift functional equations, the vanishing of f_{1,1,1}
off the diagonal, the f_{1,7,1}/f_{4,4,1} and f_{1,5,1}/f_{3,3,1} symmetry
shifts, the reduction of the a_k and b_k combinations and their evaluations.
"""
import random
from typing import List

from app.models import HeckeParams2, QMonomial
from app.services.hecke import double_sum, f_flip, f_shift
from app.services.identities.base import (
    BaseIdentity,
    IdentityCase,
    J,
    draw,
    minus,
    mult,
    plus,
    property_rng,
    property_samples,
    q_times,
    quot,
    random_monomial,
    register,
    scale,
    times,
    zero,
)

Q = QMonomial.q

F111 = HeckeParams2(1, 1, 1)
F151 = HeckeParams2(1, 5, 1)
F171 = HeckeParams2(1, 7, 1)
F331 = HeckeParams2(3, 3, 1)
F441 = HeckeParams2(4, 4, 1)


def _random_params(rng: random.Random) -> HeckeParams2:
    return HeckeParams2(rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3))


def a_k(k: int):
    """f_{4,4,1}(-q^(4+k), q^(2+k)) - q^-k f_{4,4,1}(-q^(4-k), q^(2-k))."""
    return minus(double_sum(F441, QMonomial(-1, 4 + k), Q(2 + k)),
                 q_times(-k, double_sum(F441, QMonomial(-1, 4 - k), Q(2 - k))))


def b_k(k: int):
    """f_{3,3,1}(-q^(3+k), q^(2+k)) - q^-k f_{3,3,1}(-q^(3-k), q^(2-k))."""
    return minus(double_sum(F331, QMonomial(-1, 3 + k), Q(2 + k)),
                 q_times(-k, double_sum(F331, QMonomial(-1, 3 - k), Q(2 - k))))


@register
class FFlipIdentity(BaseIdentity):
    NAME = 'f-flip'
    SOURCE = 'f(x, y) = -q^(a+b+c)/(xy) f(q^(2a+b)/x, q^(2c+b)/y)'
    GROUP = 'double'

    FIXED = [
        (F151, Q(4), Q(4)),
        (HeckeParams2(1, 2, 1), Q(1), Q(1)),
        (F441, QMonomial(-1, 4), Q(2)),
    ]

    def cases(self) -> List[IdentityCase]:
        rng = property_rng(self.NAME)
        batch = list(self.FIXED) + draw(
            rng,
            lambda r: (_random_params(r), random_monomial(r, -3, 3), random_monomial(r, -3, 3)),
            lambda s: s not in self.FIXED,
            property_samples(),
        )
        result = []
        for p, x, y in batch:
            prefactor, (x2, y2) = f_flip(p, x, y)
            result.append(IdentityCase(f'({p}; {x}, {y})', double_sum(p, x, y),
                                       times(prefactor, double_sum(p, x2, y2))))
        return result


@register
class FShiftIdentity(BaseIdentity):
    """Shift by (l, k), negative shifts included."""

    NAME = 'f-shift'
    SOURCE = 'f(x, y) = (-x)^l (-y)^k q^(...) f(q^(al+bk) x, q^(bl+ck) y) + theta corrections'
    GROUP = 'double'

    FIXED = [
        (F111, Q(2), Q(5), 1, -1),
        (F151, Q(0), Q(0), 1, 1),
        (HeckeParams2(1, 2, 1), Q(1), Q(1), 0, 0),
    ]

    def cases(self) -> List[IdentityCase]:
        rng = property_rng(self.NAME)
        batch = list(self.FIXED) + draw(
            rng,
            lambda r: (_random_params(r), random_monomial(r, -3, 3), random_monomial(r, -3, 3),
                       r.randint(-2, 2), r.randint(-2, 2)),
            lambda s: s not in self.FIXED,
            property_samples(),
        )
        return [
            IdentityCase(
                f'({p}; {x}, {y}), l={l}, k={k}',
                double_sum(p, x, y),
                lambda n, p=p, x=x, y=y, l=l, k=k: f_shift(p, x, y, l, k, n).total(),
            )
            for p, x, y, l, k in batch
        ]


@register
class F111ZeroIdentity(BaseIdentity):
    NAME = 'prop-f111-zero'
    SOURCE = 'f_{1,1,1}(q^m, q^n, q) = 0 for m != n'
    GROUP = 'double'

    PAIRS = [(2, 3), (0, 1), (1, 0), (-1, 2), (3, -2), (4, 1), (-3, -1), (5, 2), (1, 6), (-2, 4)]

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(f'm={m}, n={k}', double_sum(F111, Q(m), Q(k)), zero())
            for m, k in self.PAIRS
        ]


@register
class SymmetryShift171Identity(BaseIdentity):
    NAME = 'prop-symmetry-shift-171'
    SOURCE = ('f_{1,7,1}(q^(2+t), q^(3+t)) + q^(4+t) f_{1,7,1}(q^(6+t), q^(7+t)) '
              '= f_{4,4,1}(-q^(4+t), q^(2+t)) - q^-t f_{4,4,1}(-q^(4-t), q^(2-t))')
    GROUP = 'double'

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(
                f't={t}',
                plus(double_sum(F171, Q(2 + t), Q(3 + t)),
                     q_times(4 + t, double_sum(F171, Q(6 + t), Q(7 + t)))),
                minus(double_sum(F441, QMonomial(-1, 4 + t), Q(2 + t)),
                      q_times(-t, double_sum(F441, QMonomial(-1, 4 - t), Q(2 - t)))),
            )
            for t in range(-3, 4)
        ]


@register
class SymmetryShift151Identity(BaseIdentity):
    NAME = 'prop-symmetry-shift-151'
    SOURCE = ('f_{1,5,1}(q^(2+t), q^(2+t)) + q^(3+t) f_{1,5,1}(q^(5+t), q^(5+t)) '
              '= f_{3,3,1}(-q^(3+t), q^(2+t)) - q^-t f_{3,3,1}(-q^(3-t), q^(2-t))')
    GROUP = 'double'

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(
                f't={t}',
                plus(double_sum(F151, Q(2 + t), Q(2 + t)),
                     q_times(3 + t, double_sum(F151, Q(5 + t), Q(5 + t)))),
                minus(double_sum(F331, QMonomial(-1, 3 + t), Q(2 + t)),
                      q_times(-t, double_sum(F331, QMonomial(-1, 3 - t), Q(2 - t)))),
            )
            for t in range(-3, 4)
        ]


@register
class F441ReduceIdentity(BaseIdentity):
    NAME = 'prop-f441-reduce'
    SOURCE = 'a_{4m+k} = a_k q^(-2m^2-2m-mk), k in {0,1,2,3}'
    GROUP = 'double'

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(f'm={m}, k={k}', a_k(4 * m + k),
                         q_times(-2 * m * m - 2 * m - m * k, a_k(k)))
            for m in range(-2, 3)
            for k in range(4)
        ]


@register
class F331ReduceIdentity(BaseIdentity):
    NAME = 'prop-f331-reduce'
    SOURCE = 'b_{3m+k} = b_k q^(-(3/2)m^2-(3/2)m-mk), k in {0,1,2}'
    GROUP = 'double'

    def cases(self) -> List[IdentityCase]:
        # m(m+1) is even, so the exponent is an integer
        return [
            IdentityCase(f'm={m}, k={k}', b_k(3 * m + k),
                         q_times(-3 * m * (m + 1) // 2 - m * k, b_k(k)))
            for m in range(-2, 3)
            for k in range(3)
        ]


def _j1_squared():
    return mult(J(1), J(1))


def _j1_cubed_over_j2():
    return quot(mult(J(1), J(1), J(1)), J(2))


class _LemmaEvaluation(BaseIdentity):
    """Closed evaluation of one a_k or b_k combination."""

    GROUP = 'double'
    FAMILY = 'a'
    K = 0

    def evaluation(self):
        return zero()

    def cases(self) -> List[IdentityCase]:
        combination = a_k if self.FAMILY == 'a' else b_k
        return [IdentityCase(f'{self.FAMILY}_{self.K}', combination(self.K), self.evaluation())]


@register
class LemmaA0Identity(_LemmaEvaluation):
    NAME = 'lemma-a0'
    SOURCE = 'a_0 = 0'
    K = 0


@register
class LemmaA1Identity(_LemmaEvaluation):
    NAME = 'lemma-a1'
    SOURCE = 'a_1 = -q^-1 J_1^2'
    K = 1

    def evaluation(self):
        return scale(-1, q_times(-1, _j1_squared()))


@register
class LemmaA2Identity(_LemmaEvaluation):
    NAME = 'lemma-a2'
    SOURCE = 'a_2 = 0'
    K = 2


@register
class LemmaA3Identity(_LemmaEvaluation):
    NAME = 'lemma-a3'
    SOURCE = 'a_3 = q^-3 J_1^2'
    K = 3

    def evaluation(self):
        return q_times(-3, _j1_squared())


@register
class LemmaB0Identity(_LemmaEvaluation):
    NAME = 'lemma-b0'
    SOURCE = 'b_0 = 0'
    FAMILY = 'b'
    K = 0


@register
class LemmaB1Identity(_LemmaEvaluation):
    NAME = 'lemma-b1'
    SOURCE = 'b_1 = -q^-1 J_1^3/J_2'
    FAMILY = 'b'
    K = 1

    def evaluation(self):
        return scale(-1, q_times(-1, _j1_cubed_over_j2()))


@register
class LemmaB2Identity(_LemmaEvaluation):
    NAME = 'lemma-b2'
    SOURCE = 'b_2 = q^-2 J_1^3/J_2'
    FAMILY = 'b'
    K = 2

    def evaluation(self):
        return q_times(-2, _j1_cubed_over_j2())
