"""
Theta-function identities: elliptic and inversion transforms, modulus changes,
the triple product, the h1 theorem and the product rearrangements.
"""
from typing import List

from app.models import QMonomial, ThetaArg
from app.services.identities.base import (
    BaseIdentity,
    IdentityCase,
    draw,
    property_rng,
    property_samples,
    random_monomial,
    register,
)
from app.services.theta import (
    PRODUCT_REARRANGEMENTS,
    h1_theorem_sides,
    j_inversion_forms,
    j_mod_dec,
    j_mod_inc,
    jtheta,
    jtheta_direct,
    jtheta_product_form,
    rearrangement_sides,
)

Q = QMonomial.q


def _theta(arg: ThetaArg):
    return lambda n: jtheta(arg, n)


@register
class JEllipticIdentity(BaseIdentity):
    """Direct bilateral sum against the normalized evaluation."""

    NAME = 'j-elliptic'
    SOURCE = 'j(q^n x; q) = (-1)^n q^-C(n,2) x^-n j(x; q)'
    GROUP = 'theta'

    ARGS = [(1, 5, 4), (-1, 4, 4), (-1, -7, 3), (1, -3, 2), (-1, 9, 5), (1, 13, 6)]

    def cases(self) -> List[IdentityCase]:
        result = []
        for sign, exp, modulus in self.ARGS:
            arg = ThetaArg(QMonomial(sign, exp), modulus)
            result.append(IdentityCase(
                f'j({arg.x}; q^{modulus})',
                lambda n, arg=arg: jtheta_direct(arg, n),
                _theta(arg),
            ))
        return result


@register
class JInversionIdentity(BaseIdentity):
    NAME = 'j-inversion'
    SOURCE = 'j(x; q) = j(q/x; q) = -x j(1/x; q)'
    GROUP = 'theta'

    ARGS = [(-1, 2, 1), (1, 3, 2), (-1, -4, 3), (1, 7, 5)]

    def cases(self) -> List[IdentityCase]:
        result = []
        for sign, exp, modulus in self.ARGS:
            arg = ThetaArg(QMonomial(sign, exp), modulus)
            result.append(IdentityCase(
                f'reflect j({arg.x}; q^{modulus})', _theta(arg),
                lambda n, arg=arg: j_inversion_forms(arg, n)[0]))
            result.append(IdentityCase(
                f'invert j({arg.x}; q^{modulus})', _theta(arg),
                lambda n, arg=arg: j_inversion_forms(arg, n)[1]))
        return result


@register
class JModIncIdentity(BaseIdentity):
    NAME = 'j-mod-inc'
    SOURCE = 'j(x; q) = J_1 j(x, qx, ..., q^(n-1) x; q^n) / J_n^n'
    GROUP = 'theta'

    ARGS = [QMonomial(-1, 1), Q(2), QMonomial(-1, -3)]

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(f'x={x}, n={k}', _theta(ThetaArg(x)),
                         lambda n, x=x, k=k: j_mod_inc(ThetaArg(x), k, n))
            for x in self.ARGS
            for k in (2, 3, 4)
        ]


@register
class JModDecIdentity(BaseIdentity):
    NAME = 'j-mod-dec'
    SOURCE = 'j(x^2; q^2) = J_2 j(x; q) j(-x; q) / J_1^2'
    GROUP = 'theta'

    ARGS = [Q(1), QMonomial(-1, 2), Q(3), QMonomial(-1, -1)]

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(f'x={x}', _theta(ThetaArg(x ** 2, 2)),
                         lambda n, x=x: j_mod_dec(ThetaArg(x), 2, n))
            for x in self.ARGS
        ]


@register
class TripleProductIdentity(BaseIdentity):
    """Bilateral sum against (x)_inf (q/x)_inf (q)_inf on random arguments."""

    NAME = 'triple-product'
    SOURCE = 'j(x; q) = (x)_inf (q/x)_inf (q)_inf'
    GROUP = 'theta'
    SAMPLES = 20

    def cases(self) -> List[IdentityCase]:
        rng = property_rng(self.NAME)
        args = draw(
            rng,
            lambda r: ThetaArg(random_monomial(r, -6, 6), r.randint(1, 5)),
            lambda arg: True,
            self.SAMPLES,
        )
        return [
            IdentityCase(f'j({arg.x}; q^{arg.modulus})', _theta(arg),
                         lambda n, arg=arg: jtheta_product_form(arg, n))
            for arg in args
        ]


@register
class H1TheoremIdentity(BaseIdentity):
    NAME = 'h1-theorem'
    SOURCE = 'j(-x)j(y) + j(x)j(-y) = 2 j(xy; q^2) j(qy/x; q^2)'
    GROUP = 'theta'

    FIXED = [(Q(1), Q(2)), (Q(1), Q(1)), (QMonomial(-1, 1), Q(3))]

    def cases(self) -> List[IdentityCase]:
        rng = property_rng(self.NAME)
        pairs = list(self.FIXED) + draw(
            rng,
            lambda r: (random_monomial(r, -4, 4), random_monomial(r, -4, 4)),
            lambda pair: pair not in self.FIXED,
            max(property_samples() - len(self.FIXED), 0),
        )
        return [
            IdentityCase.paired(f'x={x}, y={y}', lambda n, x=x, y=y: h1_theorem_sides(x, y, n))
            for x, y in pairs
        ]


@register
class ProductRearrangementIdentity(BaseIdentity):
    NAME = 'product-rearrangements'
    SOURCE = 'Jbar_{0,1} = 2J_2^2/J_1 and six further theta-to-eta rewrites'
    GROUP = 'theta'

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase.paired(rule[0], lambda n, i=i: rearrangement_sides(i, n))
            for i, rule in enumerate(PRODUCT_REARRANGEMENTS)
        ]
