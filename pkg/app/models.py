"""
Value records shared by the q-series services.

Everything here is immutable. Series-valued fields hold ``QSeries`` objects from
``app.services.series``; the records themselves carry no arithmetic beyond the
monomial group law.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Dict, Optional, Tuple

if TYPE_CHECKING:
    from app.services.series import QSeries


def _sign_power(sign: int, n: int) -> int:
    """Return sign**n for sign in {1, -1} and any integer n."""
    return sign if n % 2 else 1


@dataclass(frozen=True)
class QMonomial:
    """A signed integer power of q, sign * q**exp."""

    sign: int = 1
    exp: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"Monomial sign must be +1 or -1, got {self.sign!r}")
        exp = self.exp
        if isinstance(exp, Fraction):
            if exp.denominator != 1:
                raise ValueError(f"Monomial exponent must be an integer, got {exp}")
            object.__setattr__(self, 'exp', int(exp))
        elif isinstance(exp, bool) or not isinstance(exp, int):
            raise TypeError(f"Monomial exponent must be an integer, got {exp!r}")

    @classmethod
    def q(cls, exp: int = 1, sign: int = 1) -> 'QMonomial':
        return cls(sign, exp)

    def __mul__(self, other: 'QMonomial') -> 'QMonomial':
        return QMonomial(self.sign * other.sign, self.exp + other.exp)

    def __truediv__(self, other: 'QMonomial') -> 'QMonomial':
        return QMonomial(self.sign * other.sign, self.exp - other.exp)

    def __pow__(self, k: int) -> 'QMonomial':
        return QMonomial(_sign_power(self.sign, k), self.exp * k)

    def __neg__(self) -> 'QMonomial':
        return QMonomial(-self.sign, self.exp)

    def inverse(self) -> 'QMonomial':
        return QMonomial(self.sign, -self.exp)

    def shifted(self, k: int) -> 'QMonomial':
        """Multiply by q**k."""
        return QMonomial(self.sign, self.exp + k)

    def sign_power(self, n: int) -> int:
        return _sign_power(self.sign, n)

    def __str__(self) -> str:
        sign = '-' if self.sign < 0 else ''
        if self.exp == 0:
            return f'{sign}1'
        if self.exp == 1:
            return f'{sign}q'
        return f'{sign}q^{self.exp}'


@dataclass(frozen=True)
class ThetaArg:
    """Argument of j(x; q**modulus)."""

    x: QMonomial
    modulus: int = 1

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"Theta modulus must be positive, got {self.modulus}")


@dataclass(frozen=True)
class AppellArgs:
    """Arguments of m(x, q**modulus, z)."""

    x: QMonomial
    modulus: int
    z: QMonomial

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"Appell-Lerch modulus must be positive, got {self.modulus}")


@dataclass(frozen=True)
class HeckeParams2:
    """Exponent coefficients (a, b, c) of a Hecke-type double sum."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"Double-sum parameters must be positive integers, got {self.as_tuple()}")

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return ','.join(str(v) for v in self.as_tuple())


@dataclass(frozen=True)
class HeckeParams3:
    """Exponent coefficients (a, b, c, d, e, f) of a Hecke-type triple sum."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self):
        if min(self.as_tuple()) < 1:
            raise ValueError(f"Triple-sum parameters must be positive integers, got {self.as_tuple()}")

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def __str__(self) -> str:
        return ','.join(str(v) for v in self.as_tuple())


@dataclass(frozen=True)
class PartialThetaSpec:
    """Partial theta sum over r >= 0 of (+-1)**r q**((A r**2 + B r)/2 + C)."""

    A: int
    B: int
    C: int = 0
    alternating: bool = True

    def __post_init__(self):
        if self.A <= 0:
            raise ValueError(f"Partial theta needs A > 0, got {self.A}")
        # (A r^2 + B r) has the parity of (A + B) r, so r = 1 decides every r.
        if (self.A + self.B) % 2:
            raise ValueError(f"Exponent (A r^2 + B r)/2 is not integral for A={self.A}, B={self.B}")

    def exponent(self, r: int) -> int:
        return (self.A * r * r + self.B * r) // 2 + self.C


@dataclass(frozen=True)
class ExpansionResult:
    """Appell-Lerch part, theta part and their difference for a closed form."""

    appell_part: 'QSeries'
    theta_part: 'QSeries'
    total: 'QSeries'

    @classmethod
    def combine(cls, appell_part: 'QSeries', theta_part: 'QSeries') -> 'ExpansionResult':
        return cls(appell_part, theta_part, appell_part - theta_part)


@dataclass(frozen=True)
class ShiftDecomposition:
    """Shifted term plus correction groups of a shift functional equation.

    ``total()`` is shifted + sum(added) - sum(subtracted).
    """

    shifted: 'QSeries'
    added: Tuple['QSeries', ...] = ()
    subtracted: Tuple['QSeries', ...] = ()

    def total(self) -> 'QSeries':
        result = self.shifted
        for term in self.added:
            result = result + term
        for term in self.subtracted:
            result = result - term
        return result


@dataclass(frozen=True)
class Mismatch:
    """First exponent where two series disagree."""

    exponent: int
    lhs: Fraction
    rhs: Fraction
    case: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        from app.utils.serialization import format_rational
        return {
            'case': self.case,
            'exponent': self.exponent,
            'lhs': format_rational(self.lhs),
            'rhs': format_rational(self.rhs),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Mismatch':
        from app.utils.serialization import parse_rational
        return cls(
            exponent=int(data['exponent']),
            lhs=parse_rational(data['lhs']),
            rhs=parse_rational(data['rhs']),
            case=data.get('case'),
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing both sides of an identity to a given order."""

    name: str
    order_checked: int
    passed: bool
    first_mismatch: Optional[Mismatch] = None
    wall_time: float = 0.0
    cases_checked: int = 1

    def __post_init__(self):
        if self.passed != (self.first_mismatch is None):
            raise ValueError(f"Report for {self.name}: passed must hold exactly when no mismatch is recorded")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'order_checked': self.order_checked,
            'passed': self.passed,
            'first_mismatch': self.first_mismatch.to_dict() if self.first_mismatch else None,
            'wall_time': round(self.wall_time, 6),
            'cases_checked': self.cases_checked,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        mismatch = data.get('first_mismatch')
        return cls(
            name=data['name'],
            order_checked=int(data['order_checked']),
            passed=bool(data['passed']),
            first_mismatch=Mismatch.from_dict(mismatch) if mismatch else None,
            wall_time=float(data.get('wall_time', 0.0)),
            cases_checked=int(data.get('cases_checked', 1)),
        )


@dataclass(frozen=True)
class Comparison:
    """Result of ``equal_to_order``; truthy when the series agree."""

    equal: bool
    order: int
    exponent: Optional[int] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None

    def __bool__(self) -> bool:
        return self.equal

    def mismatch(self, case: Optional[str] = None) -> Optional[Mismatch]:
        if self.equal:
            return None
        return Mismatch(self.exponent, self.lhs, self.rhs, case)


@dataclass
class ResidualReport:
    """Residual series plus the properties reported alongside it."""

    series: 'QSeries'
    integral: bool
    elapsed: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'series': self.series.to_dict(),
            'integral': self.integral,
            'elapsed': round(self.elapsed, 6),
            **self.details,
        }
