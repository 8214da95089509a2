"""
Base identity class and registry for the verification catalog.

Every identity is a class with a unique NAME and a ``cases()`` method returning
one or more IdentityCase objects. Each case holds the two sides as builders
(order -> QSeries); a case may instead supply both sides from one call.
"""
import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Type, TypeVar

from app.models import QMonomial
from app.services.series import (
    Builder,
    QSeries,
    QSeriesError,
    config_value,
    monomial_times,
    product_to_order,
    quotient_to_order,
)
from app.services.theta import eta, theta

logger = logging.getLogger(__name__)

Sides = Callable[[int], Tuple[QSeries, QSeries]]
T = TypeVar('T')


class UnknownIdentity(QSeriesError):
    """Raised when a name is not in the identity registry."""
    pass


class IdentityEvaluationError(QSeriesError):
    """Raised when building a side of an identity fails; carries identity and case."""
    pass


@dataclass(frozen=True)
class IdentityCase:
    """One instance of an identity: a label plus its two sides."""

    label: str
    lhs: Optional[Builder] = None
    rhs: Optional[Builder] = None
    sides: Optional[Sides] = None

    def __post_init__(self):
        if self.sides is None and (self.lhs is None or self.rhs is None):
            raise ValueError(f"Case {self.label!r} needs both builders or a sides function")

    @classmethod
    def paired(cls, label: str, sides: Sides) -> 'IdentityCase':
        return cls(label, sides=sides)

    def evaluate(self, order: int) -> Tuple[QSeries, QSeries]:
        if self.sides is not None:
            return self.sides(order)
        return self.lhs(order), self.rhs(order)


class BaseIdentity(ABC):
    """
    Abstract base class for catalog identities.

    Subclasses set NAME and SOURCE and implement ``cases``. DEFAULT_ORDER of
    None means the suite order from the configuration.
    """

    NAME: str = None
    SOURCE: str = ''
    GROUP: str = 'general'
    DEFAULT_ORDER: Optional[int] = None

    @abstractmethod
    def cases(self) -> List[IdentityCase]:
        """Return the cases to compare, in a fixed order."""
        pass

    @classmethod
    def describe(cls) -> Dict[str, object]:
        return {
            'name': cls.NAME,
            'source': cls.SOURCE,
            'group': cls.GROUP,
            'default_order': default_order_for(cls.NAME),
        }


IDENTITY_REGISTRY: Dict[str, Type[BaseIdentity]] = {}
_ORDER_OVERRIDES: Dict[str, int] = {}


def register(cls: Type[BaseIdentity]) -> Type[BaseIdentity]:
    """Class decorator adding an identity to the registry."""
    if not cls.NAME:
        raise ValueError(f"{cls.__name__} has no NAME")
    if cls.NAME in IDENTITY_REGISTRY:
        raise ValueError(f"Identity {cls.NAME!r} registered twice")
    IDENTITY_REGISTRY[cls.NAME] = cls
    return cls


def get_identity(name: str) -> BaseIdentity:
    identity_class = IDENTITY_REGISTRY.get(name)
    if identity_class is None:
        raise UnknownIdentity(f"No identity registered under {name!r}")
    return identity_class()


def list_identities() -> List[Type[BaseIdentity]]:
    """Registered identity classes in registration order."""
    return list(IDENTITY_REGISTRY.values())


def apply_order_overrides(orders: Mapping[str, int]) -> int:
    """
    Install per-identity default orders; unknown names are logged and skipped.

    Returns:
        Number of overrides applied
    """
    applied = 0
    for name, order in (orders or {}).items():
        if name not in IDENTITY_REGISTRY:
            logger.warning(f"Ignoring order override for unknown identity {name!r}")
            continue
        _ORDER_OVERRIDES[name] = int(order)
        applied += 1
    return applied


def clear_order_overrides() -> None:
    _ORDER_OVERRIDES.clear()


def default_order_for(name: str) -> int:
    if name in _ORDER_OVERRIDES:
        return _ORDER_OVERRIDES[name]
    identity_class = IDENTITY_REGISTRY.get(name)
    if identity_class is not None and identity_class.DEFAULT_ORDER is not None:
        return identity_class.DEFAULT_ORDER
    return int(config_value('SUITE_ORDER'))


# ---- randomized property batches --------------------------------------

def property_rng(name: str) -> random.Random:
    """Generator seeded by the configured seed and the identity name."""
    return random.Random(f"{config_value('RANDOM_SEED')}:{name}")


def property_samples() -> int:
    return int(config_value('PROPERTY_SAMPLES'))


def random_monomial(rng: random.Random, low: int, high: int, signed: bool = True) -> QMonomial:
    sign = rng.choice((1, -1)) if signed else 1
    return QMonomial(sign, rng.randint(low, high))


def draw(rng: random.Random, make: Callable[[random.Random], T],
         accept: Callable[[T], bool], count: int, attempts: int = 500) -> List[T]:
    """Draw ``count`` accepted samples; gives up after ``attempts`` draws."""
    found: List[T] = []
    for _ in range(attempts):
        if len(found) == count:
            break
        sample = make(rng)
        if accept(sample) and sample not in found:
            found.append(sample)
    if len(found) < count:
        logger.warning(f"Only {len(found)} of {count} admissible samples found")
    return found


# ---- builder algebra --------------------------------------------------

def const(value) -> Builder:
    return lambda n: QSeries.constant(value, n)


def zero() -> Builder:
    return lambda n: QSeries.zero(n)


def times(mon: QMonomial, build: Builder) -> Builder:
    return lambda n: monomial_times(mon, build, n)


def q_times(exp: int, build: Builder) -> Builder:
    return times(QMonomial.q(exp), build)


def plus(*builders: Builder) -> Builder:
    def build(n: int) -> QSeries:
        total = QSeries.zero(n)
        for b in builders:
            total = total + b(n)
        return total
    return build


def minus(a: Builder, b: Builder) -> Builder:
    return lambda n: a(n) - b(n)


def scale(c, build: Builder) -> Builder:
    c = Fraction(c)
    return lambda n: build(n) * c


def mult(*builders: Builder) -> Builder:
    return lambda n: product_to_order(builders, n)


def quot(num: Builder, den: Builder) -> Builder:
    return lambda n: quotient_to_order(num, den, n)


def J(m: int) -> Builder:
    return eta(m)


def J_am(a: int, m: int) -> Builder:
    return theta(QMonomial(1, a), m)


def Jbar(a: int, m: int) -> Builder:
    return theta(QMonomial(-1, a), m)

