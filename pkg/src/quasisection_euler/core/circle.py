"""
Арифметика позиций на окружности слоя ℝ/ℤ.

FiberPos: рациональное число из [0, 1). Winding: знаковое рациональное
смещение (поднятие), целые значения соответствуют полным оборотам.
"""
import math
from fractions import Fraction
from typing import TypeAlias

from ..exceptions import QuasisectionError

FiberPos: TypeAlias = Fraction
Winding: TypeAlias = Fraction


def frac(x: Fraction | int) -> FiberPos:
    """Возвращает единственного представителя x mod 1 в [0, 1)."""
    x = Fraction(x)
    return x - math.floor(x)


def ccw_distance(a: Fraction, b: Fraction) -> Fraction:
    """Единственное d из [0, 1) с a + d ≡ b (mod 1)."""
    return frac(Fraction(b) - Fraction(a))


def signed_lift(x: Fraction) -> Fraction:
    """Представитель x mod 1 в полуинтервале (-1/2, 1/2]."""
    d = frac(x)
    return d - 1 if d > Fraction(1, 2) else d


def cyclic_open_contains(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """
    True, если c лежит строго внутри дуги, идущей от a к b против часовой стрелки.
    """
    if frac(a) == frac(b):
        raise QuasisectionError("Empty arc: endpoints coincide")
    d = ccw_distance(a, c)
    return Fraction(0) < d < ccw_distance(a, b)


def arc_midpoint(a: Fraction, b: Fraction) -> FiberPos:
    """Середина дуги от a к b против часовой стрелки."""
    return frac(Fraction(a) + ccw_distance(a, b) / 2)
