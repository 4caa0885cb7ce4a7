"""
Веса существенных вершин локальной формулы.
"""
from fractions import Fraction

from ..exceptions import PortraitError
from ..models.portrait import Inessential, Side, TypeI, TypeII, TypeIII, VertexDescriptor


def weight_ff(n: int, k: int) -> Fraction:
    """Вес пересечения двух складок: 4(n−k) / ((n+k)(n+k+2)(n+k+4))."""
    if n < 0 or k < 0 or n + k < 1:
        raise PortraitError(f"weight_ff requires n + k >= 1, got ({n},{k})")
    s = n + k
    return Fraction(4 * (n - k), s * (s + 2) * (s + 4))


def _signed(value: Fraction, side: Side | str) -> Fraction:
    return value if Side(side) is Side.R else -value


def weight_p(r: int, side: Side | str) -> Fraction:
    """Вес сборки: ±2 / ((r+1)(r+3))."""
    return _signed(Fraction(2, (r + 1) * (r + 3)), side)


def weight_fs(r: int, side: Side | str) -> Fraction:
    """Вес пересечения складки с регулярным листом; совпадает с весом сборки."""
    return _signed(Fraction(2, (r + 1) * (r + 3)), side)


def weight_of(d: VertexDescriptor) -> Fraction:
    if isinstance(d, TypeI):
        return weight_ff(d.n, d.k)
    if isinstance(d, TypeII):
        return weight_p(d.r, d.side)
    if isinstance(d, TypeIII):
        return weight_fs(d.r, d.side)
    if isinstance(d, Inessential):
        return Fraction(0)
    raise PortraitError(f"Unknown vertex descriptor: {d!r}")
