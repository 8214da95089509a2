"""
Functional equations of the Hecke-type triple sum g_{a,b,c,d,e,f}(x, y, z, q).
"""
import random
from typing import List, Tuple

from app.models import HeckeParams3, QMonomial
from app.services.hecke import g_flip, g_shift, generic_shift_sides, triple_sum
from app.services.identities.base import (
    BaseIdentity,
    IdentityCase,
    draw,
    property_rng,
    property_samples,
    random_monomial,
    register,
    times,
)

Q = QMonomial.q

G121221 = HeckeParams3(1, 2, 1, 2, 2, 1)
G171111 = HeckeParams3(1, 7, 1, 1, 1, 1)

Args3 = Tuple[QMonomial, QMonomial, QMonomial]


def random_triple_params(rng: random.Random) -> HeckeParams3:
    return HeckeParams3(*(rng.randint(1, 3) for _ in range(6)))


def random_arguments(rng: random.Random) -> Args3:
    return tuple(random_monomial(rng, -3, 3) for _ in range(3))


def _shift(rng: random.Random) -> Tuple[int, int, int]:
    return tuple(rng.randint(-2, 2) for _ in range(3))


@register
class GFlipIdentity(BaseIdentity):
    NAME = 'g-flip'
    SOURCE = 'g(x, y, z) = -q^(a+b+c+d+e+f)/(xyz) g(q^(2a+b+d)/x, q^(b+2c+e)/y, q^(d+e+2f)/z)'
    GROUP = 'triple'

    FIXED = [(G121221, (Q(1), Q(1), Q(1)))]

    def cases(self) -> List[IdentityCase]:
        batch = list(self.FIXED) + draw(
            property_rng(self.NAME),
            lambda r: (random_triple_params(r), random_arguments(r)),
            lambda s: s not in self.FIXED,
            property_samples(),
        )
        result = []
        for p, (x, y, z) in batch:
            prefactor, flipped = g_flip(p, x, y, z)
            result.append(IdentityCase(f'({p}; {x}, {y}, {z})', triple_sum(p, x, y, z),
                                       times(prefactor, triple_sum(p, *flipped))))
        return result


@register
class GShiftIdentity(BaseIdentity):
    """Triple-sum shift by (R, S, T), including the shifts behind the newid corollaries."""

    NAME = 'g-shift'
    SOURCE = 'g(x, y, z) = (-x)^R (-y)^S (-z)^T q^(...) g(moved) + f corrections - theta corrections'
    GROUP = 'triple'

    FIXED = [
        (G121221, (Q(1), Q(1), Q(2)), (0, 0, 1)),
        (G121221, (Q(1), Q(2), Q(2)), (0, 1, 1)),
        (G121221, (Q(1), Q(1), Q(3)), (0, 0, 2)),
        (G121221, (Q(1), Q(2), Q(3)), (-1, 0, 1)),
    ]

    def cases(self) -> List[IdentityCase]:
        batch = list(self.FIXED) + draw(
            property_rng(self.NAME),
            lambda r: (random_triple_params(r), random_arguments(r), _shift(r)),
            lambda s: s not in self.FIXED,
            property_samples(),
        )
        return [
            IdentityCase(
                f'({p}; {x}, {y}, {z}), R,S,T={R},{S},{T}',
                triple_sum(p, x, y, z),
                lambda n, p=p, x=x, y=y, z=z, R=R, S=S, T=T: g_shift(p, x, y, z, R, S, T, n).total(),
            )
            for p, (x, y, z), (R, S, T) in batch
        ]


@register
class GenericShiftIdentity(BaseIdentity):
    """The finite cone rearrangement, each piece enumerated straight from the quadratic form."""

    NAME = 'generic-shift'
    SOURCE = 'sum over C of c - sum over C of shifted c = signed-cone sums - full-line sums'
    GROUP = 'triple'

    FIXED = [
        (G171111, (Q(2), Q(3), Q(1)), (1, 1, 1)),
        (G121221, (Q(1), Q(1), Q(1)), (2, -1, 1)),
    ]

    def cases(self) -> List[IdentityCase]:
        batch = list(self.FIXED) + draw(
            property_rng(self.NAME),
            lambda r: (random_triple_params(r), random_arguments(r), _shift(r)),
            lambda s: s not in self.FIXED,
            property_samples(),
        )
        return [
            IdentityCase.paired(
                f'({p}; {x}, {y}, {z}), R,S,T={R},{S},{T}',
                lambda n, p=p, x=x, y=y, z=z, R=R, S=S, T=T: generic_shift_sides(p, x, y, z, R, S, T, n),
            )
            for p, (x, y, z), (R, S, T) in batch
        ]
