"""
Truncated Laurent series in q with exact rational coefficients.

A ``QSeries`` stores coefficients densely from its valuation v up to its order N;
every coefficient with exponent <= N is known exactly. Arithmetic follows the
usual truncated-series bookkeeping, so a result never claims more precision
than its operands support.

Canonical zero: valuation min(0, N+1), no stored coefficients, order N, so
N >= valuation - 1 holds for every order. For order bookkeeping a zero series
behaves as if its lowest possible exponent were N+1 (``_low``), which keeps the
product and quotient order formulas exact.
"""
import logging
import math
from fractions import Fraction
from functools import reduce
from numbers import Rational
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from flask import current_app, has_app_context

from app.models import Comparison, QMonomial

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Builder = Callable[[int], 'QSeries']


class QSeriesError(Exception):
    """Base exception for q-series evaluation errors."""
    pass


class DivideByZeroSeries(QSeriesError):
    """Raised when dividing by a series with no nonzero known coefficient."""
    pass


class InsufficientOrder(QSeriesError):
    """Raised when a coefficient above a series' known order is requested."""
    pass


def config_value(key: str):
    from config import Config
    if has_app_context():
        return current_app.config.get(key, getattr(Config, key))
    return getattr(Config, key)


def default_order() -> int:
    """Global working order: app config when an app context is active, else Config."""
    return int(config_value('DEFAULT_ORDER'))


def resolve_order(order: Optional[int]) -> int:
    return default_order() if order is None else int(order)


def _zero_valuation(order: int) -> int:
    return min(0, order + 1)


def _denominator_lcm(coeffs: Sequence[Fraction]) -> int:
    dens = {c.denominator for c in coeffs if c.denominator != 1}
    return math.lcm(*dens) if dens else 1


def _scaled_integers(coeffs: Sequence[Fraction]) -> Tuple[Tuple[int, ...], int]:
    den = _denominator_lcm(coeffs)
    return tuple(c.numerator * (den // c.denominator) for c in coeffs), den


class QSeries:
    """
    Immutable truncated Laurent series sum_{n=v}^{N} c_n q^n + O(q^{N+1}).

    Supports + - * / ** and unary minus with other series and with int or
    Fraction scalars. Scalars are treated as exact constants.
    """

    __slots__ = ('_valuation', '_order', '_coeffs')

    def __init__(self, coeffs: Iterable[Scalar] = (), valuation: int = 0, order: Optional[int] = None):
        order = resolve_order(order)
        values = [Fraction(c) for c in coeffs]
        keep = order - valuation + 1
        if keep < len(values):
            values = values[:max(keep, 0)]
        start = 0
        while start < len(values) and values[start] == 0:
            start += 1
        if start == len(values):
            self._valuation, self._order, self._coeffs = _zero_valuation(order), order, ()
            return
        valuation += start
        values = values[start:]
        values.extend([Fraction(0)] * (order - valuation + 1 - len(values)))
        self._valuation, self._order, self._coeffs = valuation, order, tuple(values)

    @classmethod
    def _raw(cls, valuation: int, order: int, coeffs: Tuple[Fraction, ...]) -> 'QSeries':
        """Build from an already-normalized coefficient run."""
        obj = object.__new__(cls)
        obj._valuation, obj._order, obj._coeffs = valuation, order, coeffs
        return obj

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: Optional[int] = None) -> 'QSeries':
        order = resolve_order(order)
        return cls._raw(_zero_valuation(order), order, ())

    @classmethod
    def constant(cls, value: Scalar, order: Optional[int] = None) -> 'QSeries':
        return cls([value], 0, order)

    @classmethod
    def one(cls, order: Optional[int] = None) -> 'QSeries':
        return cls.constant(1, order)

    @classmethod
    def monomial(cls, exp: int, coef: Scalar = 1, order: Optional[int] = None) -> 'QSeries':
        return cls([coef], exp, order)

    @classmethod
    def from_monomial(cls, mon: QMonomial, order: Optional[int] = None) -> 'QSeries':
        return cls.monomial(mon.exp, mon.sign, order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, Scalar], order: Optional[int] = None) -> 'QSeries':
        """Series from a sparse {exponent: coefficient} map; terms above order are dropped."""
        order = resolve_order(order)
        live = {e: c for e, c in terms.items() if e <= order and c != 0}
        if not live:
            return cls.zero(order)
        low = min(live)
        dense = [0] * (order - low + 1)
        for e, c in live.items():
            dense[e - low] += c
        return cls(dense, low, order)

    # ---- inspection ---------------------------------------------------

    @property
    def valuation(self) -> int:
        return self._valuation

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def _low(self) -> int:
        return self._order + 1 if not self._coeffs else self._valuation

    def coefficient(self, n: int) -> Fraction:
        if n > self._order:
            raise InsufficientOrder(f"Coefficient of q^{n} requested from a series known to order {self._order}")
        if n < self._low:
            return Fraction(0)
        return self._coeffs[n - self._valuation]

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        for i, c in enumerate(self._coeffs):
            if c:
                yield self._valuation + i, c

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def truncate(self, order: int) -> 'QSeries':
        if order > self._order:
            raise InsufficientOrder(f"Cannot extend a series known to order {self._order} up to {order}")
        if order == self._order:
            return self
        return QSeries(self._coeffs, self._valuation, order)

    def shift(self, k: int) -> 'QSeries':
        """Multiply by q**k."""
        if not self._coeffs:
            return QSeries.zero(self._order + k)
        return QSeries._raw(self._valuation + k, self._order + k, self._coeffs)

    # ---- arithmetic ---------------------------------------------------

    def _scale(self, c: Scalar) -> 'QSeries':
        c = Fraction(c)
        if c == 0:
            return QSeries.zero(self._order)
        if c == 1:
            return self
        return QSeries._raw(self._valuation, self._order, tuple(x * c for x in self._coeffs))

    def __neg__(self) -> 'QSeries':
        return self._scale(-1)

    def __pos__(self) -> 'QSeries':
        return self

    def __add__(self, other):
        if isinstance(other, QSeries):
            return add(self, other)
        if isinstance(other, Rational):
            return add(self, QSeries.constant(other, self._order))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, QSeries):
            return sub(self, other)
        if isinstance(other, Rational):
            return sub(self, QSeries.constant(other, self._order))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return sub(QSeries.constant(other, self._order), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return mul(self, other)
        if isinstance(other, Rational):
            return self._scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return div(self, other)
        if isinstance(other, Rational):
            if other == 0:
                raise DivideByZeroSeries("Division of a series by the scalar 0")
            return self._scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return invert(self)._scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> 'QSeries':
        return power(self, k)

    # ---- comparison and output ----------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self._valuation, self._order, self._coeffs) == (other._valuation, other._order, other._coeffs)

    def __hash__(self) -> int:
        return hash((self._valuation, self._order, self._coeffs))

    def __repr__(self) -> str:
        return f'<QSeries v={self._valuation} N={self._order} {self}>'

    def __str__(self) -> str:
        return format_series(self, int(config_value('DISPLAY_TERMS')))

    def to_dict(self) -> Dict[str, object]:
        from app.utils.serialization import format_rational
        return {
            'valuation': self._valuation,
            'order': self._order,
            'coeffs': [format_rational(c) for c in self._coeffs],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> 'QSeries':
        from app.utils.serialization import parse_rational
        try:
            coeffs = [parse_rational(c) for c in data['coeffs']]
            return cls(coeffs, int(data['valuation']), int(data['order']))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed series payload: {e}") from e

    def to_json(self) -> str:
        from app.utils.serialization import to_json_line
        return to_json_line(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> 'QSeries':
        import json
        return cls.from_dict(json.loads(text))


def _format_term(exp: int, c: Fraction) -> str:
    mag = abs(c)
    if exp == 0:
        return str(mag) if mag.denominator == 1 else f'{mag.numerator}/{mag.denominator}'
    power = 'q' if exp == 1 else f'q^{exp}'
    if mag == 1:
        return power
    if mag.denominator == 1:
        return f'{mag.numerator}{power}'
    return f'({mag.numerator}/{mag.denominator}){power}'


def format_series(series: QSeries, limit: int = 20) -> str:
    """Human form, e.g. ``q^-1 + 2 + 3q + O(q^11)``, showing at most ``limit`` terms."""
    terms = list(series.items())
    shown, hidden = terms[:limit], len(terms) - limit
    out = ''
    for i, (exp, c) in enumerate(shown):
        text = _format_term(exp, c)
        if i == 0:
            out = f'-{text}' if c < 0 else text
        else:
            out += f' - {text}' if c < 0 else f' + {text}'
    if hidden > 0:
        out += f' … (+{hidden} more)'
    tail = f'O(q^{series.order + 1})'
    return f'{out} + {tail}' if out else tail


# ---- functional API ---------------------------------------------------

def add(a: QSeries, b: QSeries) -> QSeries:
    order = min(a._order, b._order)
    if a.is_zero:
        return b.truncate(order) if not b.is_zero else QSeries.zero(order)
    if b.is_zero:
        return a.truncate(order)
    low = min(a._valuation, b._valuation)
    if low > order:
        return QSeries.zero(order)
    dense = [Fraction(0)] * (order - low + 1)
    for s in (a, b):
        offset = s._valuation - low
        for i, c in enumerate(s._coeffs[:max(order - s._valuation + 1, 0)]):
            dense[offset + i] += c
    return QSeries(dense, low, order)


def neg(a: QSeries) -> QSeries:
    return -a


def sub(a: QSeries, b: QSeries) -> QSeries:
    return add(a, -b)


def shift(a: QSeries, k: int) -> QSeries:
    return a.shift(k)


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Product; order = min(a.order + low(b), b.order + low(a))."""
    order = min(a._order + b._low, b._order + a._low)
    if a.is_zero or b.is_zero:
        return QSeries.zero(order)
    valuation = a._valuation + b._valuation
    length = order - valuation + 1
    if length <= 0:
        return QSeries.zero(order)
    ia, da = _scaled_integers(a._coeffs[:length])
    ib, db = _scaled_integers(b._coeffs[:length])
    out = [0] * length
    for i, x in enumerate(ia):
        if not x:
            continue
        for j in range(min(len(ib), length - i)):
            out[i + j] += x * ib[j]
    den = da * db
    return QSeries([Fraction(c, den) for c in out], valuation, order)


def invert(a: QSeries) -> QSeries:
    """
    Multiplicative inverse.

    The result has valuation -v and order N - 2v, i.e. the same relative
    precision as ``a``.
    """
    if a.is_zero:
        raise DivideByZeroSeries(f"Cannot invert a series that vanishes to order {a.order}")
    v = a._valuation
    order = a._order - 2 * v
    ints, den = _scaled_integers(a._coeffs)
    lead = ints[0]
    n_terms = len(ints)
    # 1/A = sum beta_n q^n / lead^(n+1) with integer beta_n
    lead_powers = [1] * n_terms
    for k in range(1, n_terms):
        lead_powers[k] = lead_powers[k - 1] * lead
    beta = [1] + [0] * (n_terms - 1)
    for n in range(1, n_terms):
        acc = 0
        for k in range(1, n + 1):
            if ints[k]:
                acc += ints[k] * lead_powers[k - 1] * beta[n - k]
        beta[n] = -acc
    coeffs = [Fraction(den * beta[n], lead_powers[n] * lead) for n in range(n_terms)]
    return QSeries(coeffs, -v, order)


def div(a: QSeries, b: QSeries) -> QSeries:
    return mul(a, invert(b))


def power(a: QSeries, k: int) -> QSeries:
    """a**k for integer k; negative k inverts first."""
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"Series exponent must be an integer, got {k!r}")
    if k < 0:
        return power(invert(a), -k)
    result = QSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def equal_to_order(a: QSeries, b: QSeries, n: int) -> Comparison:
    """
    Compare coefficients of all exponents <= n.

    Raises:
        InsufficientOrder: if either operand is known only below n
    """
    if a.order < n or b.order < n:
        raise InsufficientOrder(f"Comparison to order {n} needs both orders >= {n}, got {a.order} and {b.order}")
    start = min(a._low, b._low)
    for e in range(start, n + 1):
        lhs, rhs = a.coefficient(e), b.coefficient(e)
        if lhs != rhs:
            return Comparison(False, n, e, lhs, rhs)
    return Comparison(True, n)


def product(factors: Sequence[QSeries], order: Optional[int] = None) -> QSeries:
    result = reduce(mul, factors)
    return result if order is None else result.truncate(order)


# ---- precision helpers ------------------------------------------------

def product_to_order(builders: Sequence[Builder], order: int) -> QSeries:
    """
    Product of builder outputs, exact to ``order``.

    Each builder maps a requested order to a series known at least that far.
    Factors with negative valuation force their partners to be computed deeper;
    the requested orders only grow between passes.
    """
    wanted = [order] * len(builders)
    for attempt in range(6):
        parts = [build(w) for build, w in zip(builders, wanted)]
        result = reduce(mul, parts)
        if result.order >= order:
            return result.truncate(order)
        lows = [p._low for p in parts]
        total = sum(lows)
        wanted = [max(w, order - (total - low)) for w, low in zip(wanted, lows)]
        logger.debug(f"product_to_order: escalating factor orders to {wanted}")
    raise InsufficientOrder(f"Could not evaluate product to order {order}")


def quotient_to_order(numerator: Builder, denominator: Builder, order: int) -> QSeries:
    """numerator / denominator exact to ``order``."""
    den_order = order
    for attempt in range(6):
        den = denominator(den_order)
        if den.is_zero:
            den_order += max(16, abs(den_order))
            continue
        vd = den.valuation
        num = numerator(order + vd)
        need = order + 2 * vd - num._low
        if need > den.order:
            logger.debug(f"quotient_to_order: denominator deepened from {den.order} to {need}")
            den = denominator(need)
        return div(num, den).truncate(order)
    raise DivideByZeroSeries(f"Denominator vanishes to order {den_order}")


def monomial_times(mon: QMonomial, build: Builder, order: int) -> QSeries:
    """sign * q**exp * build(...), exact to ``order``."""
    return build(order - mon.exp).shift(mon.exp) * mon.sign
