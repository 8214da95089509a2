"""
JSON helpers for series, reports and rational numbers.

Rationals are always written as ``"num/den"`` strings so the output is exact and
decimal-free; ``parse_rational`` also accepts bare integers.
"""
import json
from fractions import Fraction
from typing import Any, Dict, Union


def format_rational(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    return f'{value.numerator}/{value.denominator}'


def parse_rational(text: Union[str, int]) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Invalid rational literal: {text!r}") from e


def to_json_line(payload: Dict[str, Any]) -> str:
    """Serialize one object as a single compact JSON line."""
    return json.dumps(payload, separators=(',', ':'), sort_keys=False)
