"""
Recursive-descent parser for q-series expressions.

Grammar, loosest binding first::

    expr    := term { ("+" | "-") term }
    term    := unary { ("*" | "/") unary }
    unary   := "-" unary | power
    power   := primary [ "^" int ]
    primary := integer | "q" | "(" expr ")" | call
    call    := NAME "(" [ params ";" ] args ")"

``q^k`` written directly is a single monomial node. In calls, a semicolon
separates the structural integer parameters of f and g from their monomial
arguments. Every node records the character span it was parsed from.
"""
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple, Union

from app.models import QMonomial
from app.services.series import QSeriesError

Span = Tuple[int, int]
Arg = Union[int, float, QMonomial]

INF = math.inf


class ParseError(QSeriesError):
    """Raised on malformed input; ``offset`` is a byte offset into the source text."""

    def __init__(self, message: str, offset: int, expected: Iterable[str] = ()):
        self.offset = offset
        self.expected = frozenset(expected)
        self.reason = message
        detail = f"; expected one of: {', '.join(sorted(self.expected))}" if self.expected else ''
        super().__init__(f"{message} at offset {offset}{detail}")

    def __reduce__(self):
        return (ParseError, (self.reason, self.offset, self.expected))


# ---- abstract syntax ---------------------------------------------------

@dataclass(frozen=True)
class Expr:
    pass


@dataclass(frozen=True)
class Number(Expr):
    value: Fraction
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Monomial(Expr):
    """q**exp."""

    exp: int = 1
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exponent: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Call(Expr):
    """Primitive call; ``params`` are the integers before a semicolon."""

    name: str
    params: Tuple[int, ...] = ()
    args: Tuple[Arg, ...] = ()
    span: Span = field(default=(0, 0), compare=False)


# ---- primitive signatures ---------------------------------------------

# name -> accepted (params kinds, args kinds); kinds: int, mon, count
PRIMITIVES: Dict[str, List[Tuple[Tuple[str, ...], Tuple[str, ...]]]] = {
    'J': [((), ('int',)), ((), ('int', 'int'))],
    'JB': [((), ('int', 'int'))],
    'jt': [((), ('mon', 'int'))],
    'm': [((), ('mon', 'int', 'mon'))],
    'f': [(('int',) * 3, ('mon', 'mon'))],
    'g': [(('int',) * 6, ('mon', 'mon', 'mon'))],
    'chi0': [((), ())],
    'chi1': [((), ())],
    'klA': [((), ())],
    'klB': [((), ())],
    'ptheta': [((), ('int', 'int')), ((), ('int', 'int', 'int'))],
    'poch': [((), ('mon', 'count')), ((), ('mon', 'count', 'int'))],
}

KIND_NAMES = {'int': 'integer', 'mon': 'monomial', 'count': 'integer or inf'}


def _signature_text(name: str, params: Tuple[str, ...], args: Tuple[str, ...]) -> str:
    head = ', '.join(params)
    tail = ', '.join(args)
    return f"{name}({head}; {tail})" if params else f"{name}({tail})"


# ---- tokens ------------------------------------------------------------

TOKEN_PATTERN = re.compile(r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),;]))')


@dataclass(frozen=True)
class Token:
    kind: str  # number, name, op, end
    text: str
    start: int
    end: int


def tokenize(text: str) -> Iterator[Token]:
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            yield Token('end', '', pos, pos)
            return
        match = TOKEN_PATTERN.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError(f"Unexpected character {text[pos]!r}", _byte_offset(text, pos),
                             ('number', 'name', 'operator'))
        kind = match.lastgroup
        yield Token(kind, match.group(kind), match.start(kind), match.end())
        pos = match.end()


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode('utf-8'))


# ---- parser ------------------------------------------------------------

class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(tokenize(text))
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def _advance(self) -> Token:
        token = self.current
        if token.kind != 'end':
            self.index += 1
        return token

    def _at(self, *texts: str) -> bool:
        return self.current.kind == 'op' and self.current.text in texts

    def _error(self, message: str, expected: Iterable[str], token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        found = 'end of input' if token.kind == 'end' else repr(token.text)
        return ParseError(f"{message}, found {found}", _byte_offset(self.text, token.start), expected)

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            raise self._error(f"Expected {text!r}", (text,))
        return self._advance()

    def parse(self) -> Expr:
        expr = self.expression()
        if self.current.kind != 'end':
            raise self._error("Unexpected trailing input", ('+', '-', '*', '/', 'end of input'))
        return expr

    def expression(self) -> Expr:
        left = self.term()
        while self._at('+', '-'):
            op = self._advance().text
            right = self.term()
            left = BinOp(op, left, right, (left.span[0], right.span[1]))
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self._at('*', '/'):
            op = self._advance().text
            right = self.unary()
            left = BinOp(op, left, right, (left.span[0], right.span[1]))
        return left

    def unary(self) -> Expr:
        if self._at('-'):
            start = self._advance().start
            operand = self.unary()
            return Neg(operand, (start, operand.span[1]))
        return self.power()

    def power(self) -> Expr:
        first = self.current
        base = self.primary()
        if not self._at('^'):
            return base
        self._advance()
        exponent, end = self.integer()
        if isinstance(base, Monomial) and first.kind == 'name':
            return Monomial(exponent, (base.span[0], end))
        return Power(base, exponent, (base.span[0], end))

    def integer(self) -> Tuple[int, int]:
        """Optionally signed integer literal; returns (value, end)."""
        sign = 1
        if self._at('-', '+'):
            sign = -1 if self._advance().text == '-' else 1
        if self.current.kind != 'number':
            raise self._error("Expected an integer", ('integer',))
        token = self._advance()
        return sign * int(token.text), token.end

    def primary(self) -> Expr:
        token = self.current
        if token.kind == 'number':
            self._advance()
            return Number(Fraction(int(token.text)), (token.start, token.end))
        if token.kind == 'name' and token.text == 'q':
            self._advance()
            return Monomial(1, (token.start, token.end))
        if token.kind == 'name':
            return self.call()
        if self._at('('):
            self._advance()
            inner = self.expression()
            self._expect(')')
            return inner
        raise self._error("Expected an expression", ('integer', 'q', '(', '-', 'primitive name'))

    def call(self) -> Call:
        name_token = self._advance()
        name = name_token.text
        if name not in PRIMITIVES:
            raise self._error(f"Unknown primitive {name!r}", PRIMITIVES.keys(), name_token)
        self._expect('(')
        values: List[Tuple[Arg, Token]] = []
        split: Optional[int] = None
        if not self._at(')'):
            while True:
                values.append(self.argument())
                if self._at(','):
                    self._advance()
                    continue
                if self._at(';') and split is None:
                    self._advance()
                    split = len(values)
                    continue
                if self._at(')'):
                    break
                raise self._error("Malformed argument list", (',', ')') if split is not None else (',', ';', ')'))
        end = self._expect(')').end
        params, args = self._match_signature(name_token, values, split)
        return Call(name, params, args, (name_token.start, end))

    def argument(self) -> Tuple[Arg, Token]:
        """Integer, monomial (+-q^k, 1, -1) or inf."""
        start = self.current
        sign = 1
        if self._at('-', '+'):
            sign = -1 if self._advance().text == '-' else 1
        token = self.current
        if token.kind == 'number':
            self._advance()
            return sign * int(token.text), start
        if token.kind == 'name' and token.text == 'q':
            self._advance()
            exp = 1
            if self._at('^'):
                self._advance()
                exp, _ = self.integer()
            return QMonomial(sign, exp), start
        if token.kind == 'name' and token.text == 'inf' and start is token:
            self._advance()
            return INF, start
        raise self._error("Expected an argument", ('integer', 'q', 'inf'))

    def _match_signature(self, name_token: Token, values: List[Tuple[Arg, Token]],
                         split: Optional[int]) -> Tuple[Tuple[int, ...], Tuple[Arg, ...]]:
        split = 0 if split is None else split
        head, tail = values[:split], values[split:]
        candidates = [
            (params, args) for params, args in PRIMITIVES[name_token.text]
            if len(params) == len(head) and len(args) == len(tail)
        ]
        if not candidates:
            expected = (_signature_text(name_token.text, p, a) for p, a in PRIMITIVES[name_token.text])
            raise self._error(f"Wrong arguments for {name_token.text}", expected, name_token)
        params_kinds, args_kinds = candidates[0]
        params = tuple(self._coerce(kind, value, token) for kind, (value, token) in zip(params_kinds, head))
        args = tuple(self._coerce(kind, value, token) for kind, (value, token) in zip(args_kinds, tail))
        return params, args

    def _coerce(self, kind: str, value: Arg, token: Token) -> Arg:
        if kind == 'mon':
            if isinstance(value, QMonomial):
                return value
            if value in (1, -1) and not isinstance(value, float):
                return QMonomial(value, 0)
        elif kind == 'int':
            if isinstance(value, int):
                return value
        elif kind == 'count':
            if value == INF or (isinstance(value, int) and value >= 0):
                return value
        raise self._error("Argument of the wrong kind", (KIND_NAMES[kind],), token)


def parse(text: str) -> Expr:
    """Parse ``text`` into an expression tree."""
    return Parser(text).parse()


# ---- printer -----------------------------------------------------------

_ADD, _MUL, _UNARY, _POWER, _ATOM = range(1, 6)


def _precedence(expr: Expr) -> int:
    if isinstance(expr, BinOp):
        return _ADD if expr.op in '+-' else _MUL
    if isinstance(expr, Neg):
        return _UNARY
    if isinstance(expr, Power):
        return _POWER
    if isinstance(expr, Number) and Fraction(expr.value).denominator != 1:
        return _MUL
    return _ATOM


def _wrap(expr: Expr, minimum: int) -> str:
    text = to_source(expr)
    return f'({text})' if _precedence(expr) < minimum else text


def _format_arg(value: Arg) -> str:
    if value == INF:
        return 'inf'
    return str(value)


def to_source(expr: Expr) -> str:
    """Print an expression so that ``parse(to_source(e)) == e``."""
    if isinstance(expr, Number):
        value = Fraction(expr.value)
        return str(value.numerator) if value.denominator == 1 else f'{value.numerator}/{value.denominator}'
    if isinstance(expr, Monomial):
        return 'q' if expr.exp == 1 else f'q^{expr.exp}'
    if isinstance(expr, Neg):
        return f'-{_wrap(expr.operand, _UNARY)}'
    if isinstance(expr, Power):
        base = to_source(expr.base)
        if not isinstance(expr.base, Call) and not (
                isinstance(expr.base, Number) and Fraction(expr.base.value).denominator == 1):
            base = f'({base})'
        return f'{base}^{expr.exponent}'
    if isinstance(expr, BinOp):
        level = _precedence(expr)
        return f'{_wrap(expr.left, level)} {expr.op} {_wrap(expr.right, level + 1)}'
    if isinstance(expr, Call):
        args = ', '.join(_format_arg(a) for a in expr.args)
        if expr.params:
            return f"{expr.name}({','.join(str(p) for p in expr.params)}; {args})"
        return f'{expr.name}({args})'
    raise TypeError(f"Cannot print {type(expr).__name__}")
