"""
Triple sums and Eulerian series that evaluate to false theta functions.
"""
from typing import List

from app.models import HeckeParams3, PartialThetaSpec, QMonomial
from app.services.eulerian import (
    kl_generic_lhs_A,
    kl_generic_lhs_B,
    kl_generic_rhs_A,
    kl_generic_rhs_B,
    kl_lhs_A,
    kl_lhs_B,
    partial_theta,
)
from app.services.hecke import triple_sum
from app.services.identities.base import (
    BaseIdentity,
    IdentityCase,
    J,
    J_am,
    mult,
    plus,
    q_times,
    quot,
    register,
)

Q = QMonomial.q

G171111 = HeckeParams3(1, 7, 1, 1, 1, 1)
G151111 = HeckeParams3(1, 5, 1, 1, 1, 1)

# a = 1, a = -1 and a = -q
GENERIC_A = [QMonomial(1, 0), QMonomial(-1, 0), QMonomial(-1, 1)]


def _ptheta(A: int, B: int, C: int = 0):
    spec = PartialThetaSpec(A, B, C)
    return lambda n: partial_theta(spec, n)


def false_theta_A():
    """sum_{r>=0} (-1)^r q^(3r(r+1)/2)."""
    return _ptheta(3, 3)


def false_theta_B():
    """sum_{r>=0} (-1)^r q^(3r^2+2r) (1 + q^(2r+1))."""
    return plus(_ptheta(6, 4), _ptheta(6, 8, 1))


@register
class KimLovejoyTriple1Identity(BaseIdentity):
    NAME = 'kl-triple-1'
    SOURCE = 'g_{1,7,1,1,1,1}(q^2, q^3, q) + q^4 g_{1,7,1,1,1,1}(q^6, q^7, q^2) = J_1^2 sum (-1)^r q^(3r(r+1)/2)'
    GROUP = 'false'

    def cases(self) -> List[IdentityCase]:
        lhs = plus(triple_sum(G171111, Q(2), Q(3), Q(1)),
                   q_times(4, triple_sum(G171111, Q(6), Q(7), Q(2))))
        return [IdentityCase(self.NAME, lhs, mult(J(1), J(1), false_theta_A()))]


@register
class KimLovejoyTriple2Identity(BaseIdentity):
    NAME = 'kl-triple-2'
    SOURCE = ('g_{1,5,1,1,1,1}(q^2, q^2, q) + q^3 g_{1,5,1,1,1,1}(q^5, q^5, q^2) '
              '= J_1 J_{1,2} sum (-1)^r q^(3r^2+2r) (1 + q^(2r+1))')
    GROUP = 'false'

    def cases(self) -> List[IdentityCase]:
        lhs = plus(triple_sum(G151111, Q(2), Q(2), Q(1)),
                   q_times(3, triple_sum(G151111, Q(5), Q(5), Q(2))))
        return [IdentityCase(self.NAME, lhs, mult(J(1), J_am(1, 2), false_theta_B()))]


@register
class KimLovejoyEulerianAIdentity(BaseIdentity):
    NAME = 'kl-eulerian-A'
    SOURCE = 'sum (q)_{2n} q^n / (q)_n^2 = J_1^-1 sum (-1)^r q^(3r(r+1)/2)'
    GROUP = 'false'

    def cases(self) -> List[IdentityCase]:
        return [IdentityCase(self.NAME, kl_lhs_A, quot(false_theta_A(), J(1)))]


@register
class KimLovejoyEulerianBIdentity(BaseIdentity):
    NAME = 'kl-eulerian-B'
    SOURCE = 'sum (q; q^2)_n q^n / (q)_n = J_2^-1 sum (-1)^r q^(3r^2+2r) (1 + q^(2r+1))'
    GROUP = 'false'

    def cases(self) -> List[IdentityCase]:
        return [IdentityCase(self.NAME, kl_lhs_B, quot(false_theta_B(), J(2)))]


@register
class KimLovejoyGenericAIdentity(BaseIdentity):
    NAME = 'kl-generic-A'
    SOURCE = ('sum (q)_{2n} q^n / (aq, q/a)_n = (g_{1,7,1,1,1,1}(q^2, q^3, aq) '
              '+ q^4 g_{1,7,1,1,1,1}(q^6, q^7, aq^2)) / (q, aq, q/a)_inf')
    GROUP = 'false'

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(f'a={a}', lambda n, a=a: kl_generic_lhs_A(a, n), lambda n, a=a: kl_generic_rhs_A(a, n))
            for a in GENERIC_A
        ]


@register
class KimLovejoyGenericBIdentity(BaseIdentity):
    NAME = 'kl-generic-B'
    SOURCE = ('sum (q; q^2)_n (q)_n q^n / (aq, q/a)_n = (g_{1,5,1,1,1,1}(q^2, q^2, aq) '
              '+ q^3 g_{1,5,1,1,1,1}(q^5, q^5, aq^2)) / (q, aq, q/a)_inf')
    GROUP = 'false'

    def cases(self) -> List[IdentityCase]:
        return [
            IdentityCase(f'a={a}', lambda n, a=a: kl_generic_lhs_B(a, n), lambda n, a=a: kl_generic_rhs_B(a, n))
            for a in GENERIC_A
        ]
