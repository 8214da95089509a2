"""
Appell-Lerch plus theta closed forms checked against direct enumeration.
"""
import random
from typing import List, Tuple

from app.models import HeckeParams2, QMonomial
from app.services.closed_forms import (
    f121_expansion,
    f131_expansion,
    f331_expansion,
    f441_expansion,
    h_parts_cancel,
    thm_main_admissible,
    thm_main_expansion,
)
from app.services.hecke import double_sum
from app.services.identities.base import (
    BaseIdentity,
    IdentityCase,
    draw,
    property_rng,
    property_samples,
    random_monomial,
    register,
    zero,
)

Q = QMonomial.q

# (a, b, c) with a | b, c | b and ac < b^2, small enough for the theta sum
THEOREM_PARAMS = [(1, 2, 1), (2, 2, 1), (1, 2, 2), (3, 3, 1), (1, 3, 3), (4, 4, 1), (1, 4, 4)]


def _theorem_total(p: HeckeParams2, x: QMonomial, y: QMonomial):
    return lambda n: thm_main_expansion(p, x, y, n).total


def random_theorem_instance(rng: random.Random) -> Tuple[HeckeParams2, QMonomial, QMonomial]:
    p = HeckeParams2(*rng.choice(THEOREM_PARAMS))
    return p, random_monomial(rng, -4, 4), random_monomial(rng, -4, 4)


def admissible_theorem_instances(rng: random.Random, count: int) -> List[Tuple[HeckeParams2, QMonomial, QMonomial]]:
    return draw(rng, random_theorem_instance, lambda s: thm_main_admissible(*s), count)


@register
class ThmMainVsDirectIdentity(BaseIdentity):
    NAME = 'thm-main-vs-direct'
    SOURCE = 'f_{a,b,c}(x, y) = h_{a,b,c}(x, y, -1, -1) - theta_{a,b,c}(x, y) / (Jbar_{0,b^2/a-c} Jbar_{0,b^2/c-a})'
    GROUP = 'closed'

    FIXED = [
        (HeckeParams2(1, 2, 1), Q(1), Q(1)),
        (HeckeParams2(4, 4, 1), QMonomial(-1, 4), Q(2)),
        (HeckeParams2(3, 3, 1), QMonomial(-1, 3), Q(2)),
    ]
    CANDIDATES_221 = [(Q(1), Q(1)), (Q(1), Q(2)), (QMonomial(-1, 1), Q(1)), (Q(2), Q(1))]

    def cases(self) -> List[IdentityCase]:
        batch = list(self.FIXED)
        p221 = HeckeParams2(2, 2, 1)
        for x, y in self.CANDIDATES_221:
            if thm_main_admissible(p221, x, y):
                batch.append((p221, x, y))
                break
        batch += [s for s in admissible_theorem_instances(property_rng(self.NAME), property_samples())
                  if s not in batch]
        return [
            IdentityCase(f'({p}; {x}, {y})', _theorem_total(p, x, y), double_sum(p, x, y))
            for p, x, y in batch
        ]


@register
class F121ExpansionIdentity(BaseIdentity):
    NAME = 'f121-expansion'
    SOURCE = 'f_{1,2,1}(x, y) = j(y) m(q^2 x/y^2, q^3, -1) + j(x) m(q^2 y/x^2, q^3, -1) - theta quotient'
    GROUP = 'closed'

    ARGS = [(Q(1), Q(1)), (Q(1), Q(2)), (QMonomial(-1, 1), Q(2))]

    def cases(self) -> List[IdentityCase]:
        p = HeckeParams2(1, 2, 1)
        return [
            IdentityCase(f'({x}, {y})', lambda n, x=x, y=y: f121_expansion(x, y, n).total, double_sum(p, x, y))
            for x, y in self.ARGS
        ]


@register
class F441ExpansionIdentity(BaseIdentity):
    NAME = 'f441-expansion'
    SOURCE = 'f_{4,4,1}(x, y) = h_{4,4,1}(x, y, -1, -1) - sum_{d=0}^{3} theta quotients'
    GROUP = 'closed'

    ARGS = [(QMonomial(-1, 5), Q(3)), (QMonomial(-1, 4), Q(2))]

    def cases(self) -> List[IdentityCase]:
        p = HeckeParams2(4, 4, 1)
        return [
            IdentityCase(f'({x}, {y})', lambda n, x=x, y=y: f441_expansion(x, y, n).total, double_sum(p, x, y))
            for x, y in self.ARGS
        ]


@register
class F331ExpansionIdentity(BaseIdentity):
    NAME = 'f331-expansion'
    SOURCE = 'f_{3,3,1}(x, y) = h_{3,3,1}(x, y, -1, -1) - sum_{d=0}^{2} theta quotients / (4 Jbar_{2,8} Jbar_{6,24})'
    GROUP = 'closed'

    ARGS = [(QMonomial(-1, 4), Q(3)), (QMonomial(-1, 3), Q(2))]

    def cases(self) -> List[IdentityCase]:
        p = HeckeParams2(3, 3, 1)
        return [
            IdentityCase(f'({x}, {y})', lambda n, x=x, y=y: f331_expansion(x, y, n).total, double_sum(p, x, y))
            for x, y in self.ARGS
        ]


@register
class CorollaryVsTheoremIdentity(BaseIdentity):
    """Hand-simplified (4,4,1) and (3,3,1) forms against the generic theorem, part by part."""

    NAME = 'cor-vs-thm-main'
    SOURCE = 'f441/f331 expansions = generic closed form at (4,4,1) and (3,3,1)'
    GROUP = 'closed'

    ARGS = [
        ('441', f441_expansion, HeckeParams2(4, 4, 1), QMonomial(-1, 4), Q(2)),
        ('441', f441_expansion, HeckeParams2(4, 4, 1), QMonomial(-1, 5), Q(3)),
        ('331', f331_expansion, HeckeParams2(3, 3, 1), QMonomial(-1, 3), Q(2)),
        ('331', f331_expansion, HeckeParams2(3, 3, 1), QMonomial(-1, 4), Q(3)),
    ]

    def cases(self) -> List[IdentityCase]:
        result = []
        for family, expansion, p, x, y in self.ARGS:
            for part in ('appell_part', 'theta_part'):
                result.append(IdentityCase(
                    f'{family} {part} ({x}, {y})',
                    lambda n, e=expansion, x=x, y=y, part=part: getattr(e(x, y, n), part),
                    lambda n, p=p, x=x, y=y, part=part: getattr(thm_main_expansion(p, x, y, n), part),
                ))
        return result


@register
class HPartsCancelIdentity(BaseIdentity):
    NAME = 'h-parts-cancel'
    SOURCE = 'h(-q^(w+m), q^(2+m)) - q^-m h(-q^(w-m), q^(2-m)) = 0'
    GROUP = 'closed'

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(f'{family}, m={m}', lambda n, family=family, m=m: h_parts_cancel(family, m, n), zero())
            for family in ('441', '331')
            for m in range(-2, 5)
        ]


@register
class F131ExpansionIdentity(BaseIdentity):
    NAME = 'f131-expansion-vs-direct'
    SOURCE = 'f_{1,3,1}(x, y) = j(y) m(-q^5 x/y^3, q^8, q^2 y/x) + j(x) m(-q^5 y/x^3, q^8, x/(q^2 y)) + theta quotient'
    GROUP = 'closed'

    ARGS = [(Q(1), Q(1)), (Q(2), Q(1)), (Q(4), Q(4))]

    def cases(self) -> List[IdentityCase]:
        p = HeckeParams2(1, 3, 1)
        return [
            IdentityCase(f'({x}, {y})', lambda n, x=x, y=y: f131_expansion(x, y, n).total, double_sum(p, x, y))
            for x, y in self.ARGS
        ]
