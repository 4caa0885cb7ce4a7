"""
Точная рациональная арифметика.

Rational есть fractions.Fraction: всегда сокращённая дробь со знаменателем > 0
и целыми произвольной точности, так что структурное равенство совпадает с
математическим.
"""
import re
from fractions import Fraction
from typing import TypeAlias

from ..exceptions import RationalParseError

Rational: TypeAlias = Fraction

_RATIONAL_RE = re.compile(r"^\s*([-−]?)(\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """
    Разбирает строку "p/q" или "p" (допускается ведущий "-" или "−").
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise RationalParseError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise RationalParseError(f"Malformed rational: {text!r}")
    sign, num, den = match.groups()
    denominator = int(den) if den is not None else 1
    if denominator == 0:
        raise RationalParseError(f"Zero denominator in rational: {text!r}")
    value = Fraction(int(num), denominator)
    return -value if sign else value


def format_rational(value: Fraction | int) -> str:
    """Возвращает "p/q", либо "p" при q = 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
