"""
Fifth order mock theta functions chi_0 and chi_1.

Their Appell-Lerch forms, the triple-sum evaluations of g_{1,2,1,2,2,1} and the
five consequences obtained from the triple-sum shift and flip.
"""
from typing import List

from app.models import HeckeParams3, QMonomial
from app.services.appell_lerch import appell
from app.services.eulerian import chi0, chi1
from app.services.hecke import triple_sum
from app.services.identities.base import (
    BaseIdentity,
    IdentityCase,
    J,
    J_am,
    const,
    minus,
    mult,
    plus,
    q_times,
    quot,
    register,
    scale,
    zero,
)

Q = QMonomial.q

G121221 = HeckeParams3(1, 2, 1, 2, 2, 1)


def _j1_squared():
    return mult(J(1), J(1))


def _g(x: int, y: int, z: int):
    return triple_sum(G121221, Q(x), Q(y), Q(z))


class _SingleCaseIdentity(BaseIdentity):
    """Identity with exactly one instance; subclasses supply both sides."""

    GROUP = 'mock'

    def lhs(self):
        raise NotImplementedError

    def rhs(self):
        raise NotImplementedError

    def cases(self) -> List[IdentityCase]:
        return [IdentityCase(self.NAME, self.lhs(), self.rhs())]


@register
class Chi0AppellIdentity(_SingleCaseIdentity):
    NAME = 'chi0-appell'
    SOURCE = 'chi_0 = 2 - 3m(q^7, q^15, q^9) - 3q^-1 m(q^2, q^15, q^4) + 2J_5^2 J_{2,5} / J_{1,5}^2'

    def lhs(self):
        return chi0

    def rhs(self):
        theta_part = quot(mult(J(5), J(5), J_am(2, 5)), mult(J_am(1, 5), J_am(1, 5)))
        return plus(
            const(2),
            scale(-3, appell(Q(7), 15, Q(9))),
            scale(-3, q_times(-1, appell(Q(2), 15, Q(4)))),
            scale(2, theta_part),
        )


@register
class Chi1AppellIdentity(_SingleCaseIdentity):
    NAME = 'chi1-appell'
    SOURCE = 'chi_1 = -3q^-1 m(q^4, q^15, q^3) - 3q^-2 m(q, q^15, q^2) - 2J_5^2 J_{1,5} / J_{2,5}^2'

    def lhs(self):
        return chi1

    def rhs(self):
        theta_part = quot(mult(J(5), J(5), J_am(1, 5)), mult(J_am(2, 5), J_am(2, 5)))
        return plus(
            scale(-3, q_times(-1, appell(Q(4), 15, Q(3)))),
            scale(-3, q_times(-2, appell(Q(1), 15, Q(2)))),
            scale(-2, theta_part),
        )


@register
class ZwegersChi0Identity(_SingleCaseIdentity):
    NAME = 'zwegers-chi0'
    SOURCE = '2 - g_{1,2,1,2,2,1}(q, q, q) / J_1^2 = chi_0'

    def lhs(self):
        return minus(const(2), quot(_g(1, 1, 1), _j1_squared()))

    def rhs(self):
        return chi0


@register
class ZwegersChi1Identity(_SingleCaseIdentity):
    NAME = 'zwegers-chi1'
    SOURCE = 'g_{1,2,1,2,2,1}(q^2, q^2, q^2) / J_1^2 = chi_1'

    def lhs(self):
        return quot(_g(2, 2, 2), _j1_squared())

    def rhs(self):
        return chi1


@register
class NewId1Identity(_SingleCaseIdentity):
    NAME = 'newid-1'
    SOURCE = 'g_{1,2,1,2,2,1}(q^3, q^3, q^3) = 0'

    def lhs(self):
        return _g(3, 3, 3)

    def rhs(self):
        return zero()


@register
class NewId2Identity(_SingleCaseIdentity):
    NAME = 'newid-2'
    SOURCE = 'g_{1,2,1,2,2,1}(q, q, q^2) = J_1^2'

    def lhs(self):
        return _g(1, 1, 2)

    def rhs(self):
        return _j1_squared()


@register
class NewId3Identity(_SingleCaseIdentity):
    NAME = 'newid-3'
    SOURCE = 'g_{1,2,1,2,2,1}(q, q^2, q^2) = J_1^2 chi_0'

    def lhs(self):
        return _g(1, 2, 2)

    def rhs(self):
        return mult(_j1_squared(), chi0)


@register
class NewId4Identity(_SingleCaseIdentity):
    NAME = 'newid-4'
    SOURCE = 'g_{1,2,1,2,2,1}(q, q, q^3) = J_1^2 (q chi_0 + 1 - q)'

    def lhs(self):
        return _g(1, 1, 3)

    def rhs(self):
        return mult(_j1_squared(), plus(q_times(1, chi0), const(1), scale(-1, q_times(1, const(1)))))


@register
class NewId5Identity(_SingleCaseIdentity):
    NAME = 'newid-5'
    SOURCE = 'g_{1,2,1,2,2,1}(q, q^2, q^3) = J_1^2 (q chi_1 + 1)'

    def lhs(self):
        return _g(1, 2, 3)

    def rhs(self):
        return mult(_j1_squared(), plus(q_times(1, chi1), const(1)))
