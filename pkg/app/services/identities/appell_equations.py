"""
Functional equations of the Appell-Lerch sum m(x, q^M, z).

Each identity checks a fixed reference instance first, then a batch of random
admissible argument triples.
"""
import random
from typing import List, Tuple

from app.models import AppellArgs, QMonomial, ThetaArg
from app.services.appell_lerch import (
    appell,
    appell_admissible,
    appell_flip,
    appell_x_step,
    appell_z_change,
)
from app.services.identities.base import (
    BaseIdentity,
    IdentityCase,
    const,
    draw,
    minus,
    plus,
    property_rng,
    property_samples,
    random_monomial,
    register,
    times,
)
from app.services.theta import theta_vanishes

Q = QMonomial.q


def _m(args: AppellArgs):
    return appell(args.x, args.modulus, args.z)


def _random_args(rng: random.Random) -> AppellArgs:
    return AppellArgs(random_monomial(rng, -6, 6), rng.randint(1, 6), random_monomial(rng, -6, 6))


def _admissible_batch(name: str, fixed: List[AppellArgs]) -> List[AppellArgs]:
    rng = property_rng(name)
    extra = draw(rng, _random_args, lambda a: appell_admissible(a) and a not in fixed,
                 max(property_samples() - len(fixed), 0))
    return list(fixed) + extra


def _label(args: AppellArgs) -> str:
    return f'm({args.x}, q^{args.modulus}, {args.z})'


@register
class AppellZPeriodIdentity(BaseIdentity):
    NAME = 'm-functional-a'
    SOURCE = 'm(x, q, z) = m(x, q, qz)'
    GROUP = 'appell'

    def cases(self) -> List[IdentityCase]:
        batch = _admissible_batch(self.NAME, [AppellArgs(QMonomial(-1, 2), 3, Q(1))])
        return [
            IdentityCase(_label(args), _m(args),
                         appell(args.x, args.modulus, args.z.shifted(args.modulus)))
            for args in batch
        ]


@register
class AppellFlipIdentity(BaseIdentity):
    NAME = 'm-functional-b'
    SOURCE = 'm(x, q, z) = x^-1 m(x^-1, q, z^-1)'
    GROUP = 'appell'

    def cases(self) -> List[IdentityCase]:
        batch = _admissible_batch(self.NAME, [AppellArgs(QMonomial(-1, -15), 56, QMonomial(-1, 0))])
        result = []
        for args in batch:
            flipped, prefactor = appell_flip(args)
            result.append(IdentityCase(_label(args), _m(args), times(prefactor, _m(flipped))))
        return result


@register
class AppellXStepIdentity(BaseIdentity):
    NAME = 'm-functional-c'
    SOURCE = 'm(qx, q, z) = 1 - x m(x, q, z)'
    GROUP = 'appell'

    def cases(self) -> List[IdentityCase]:
        batch = _admissible_batch(self.NAME, [AppellArgs(Q(2), 3, QMonomial(-1, 1))])
        return [
            IdentityCase(
                _label(args),
                appell(args.x.shifted(args.modulus), args.modulus, args.z),
                minus(const(1), times(args.x, _m(args))),
            )
            for args in batch
        ]


def _z_change_admissible(sample: Tuple[QMonomial, int, QMonomial, QMonomial]) -> bool:
    x, M, z1, z0 = sample
    return not any(theta_vanishes(ThetaArg(v, M)) for v in (z0, z1, x * z0, x * z1))


@register
class AppellZChangeIdentity(BaseIdentity):
    NAME = 'm-functional-d'
    SOURCE = 'm(x, q, z1) - m(x, q, z0) = z0 J_1^3 j(z1/z0) j(x z0 z1) / (j(z0) j(z1) j(x z0) j(x z1))'
    GROUP = 'appell'

    def cases(self) -> List[IdentityCase]:
        fixed = [(Q(1), 15, Q(4), Q(2))]
        rng = property_rng(self.NAME)
        batch = fixed + draw(
            rng,
            lambda r: (random_monomial(r, -5, 5), r.randint(1, 6),
                       random_monomial(r, -5, 5), random_monomial(r, -5, 5)),
            lambda s: _z_change_admissible(s) and s not in fixed,
            max(property_samples() - len(fixed), 0),
        )
        return [
            IdentityCase(
                f'x={x}, M={M}, z1={z1}, z0={z0}',
                minus(appell(x, M, z1), appell(x, M, z0)),
                lambda n, x=x, M=M, z1=z1, z0=z0: appell_z_change(x, M, z1, z0, n),
            )
            for x, M, z1, z0 in batch
        ]


@register
class AppellRewrittenIdentity(BaseIdentity):
    """m(x, q, z) = 1 - q^-1 x m(q^-1 x, q, z), applied one to three times."""

    NAME = 'm-rewritten'
    SOURCE = 'm(x, q, z) = 1 - q^-1 x m(q^-1 x, q, z)'
    GROUP = 'appell'

    def cases(self) -> List[IdentityCase]:
        batch = _admissible_batch(self.NAME, [AppellArgs(Q(7), 15, Q(9))])
        result = []
        for index, args in enumerate(batch):
            steps = index % 3 + 1
            terms, factor, current = [], QMonomial(), args
            for _ in range(steps):
                constant, step_factor, current = appell_x_step(current)
                terms.append(times(factor, const(constant)))
                factor = factor * step_factor
            terms.append(times(factor, _m(current)))
            result.append(IdentityCase(f'{_label(args)}, {steps} steps', _m(args), plus(*terms)))
        return result
