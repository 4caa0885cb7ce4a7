import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..exceptions import PortraitError


class Side(str, enum.Enum):
    L = "L"
    R = "R"

    def flipped(self) -> "Side":
        return Side.R if self is Side.L else Side.L


@dataclass(frozen=True)
class Strand:
    id: str
    pos: Fraction  # FiberPos


@dataclass(frozen=True)
class Match:
    left: str
    right: str
    winding: Fraction = Fraction(0)


@dataclass(frozen=True)
class Boundary:
    matches: tuple[Match, ...] = ()
    births: tuple[tuple[str, str], ...] = ()  # пары правых нитей
    deaths: tuple[tuple[str, str], ...] = ()  # пары левых нитей

    def right_of(self, left_id: str) -> Match | None:
        return next((m for m in self.matches if m.left == left_id), None)

    def death_pair(self, left_id: str) -> tuple[str, str] | None:
        return next((p for p in self.deaths if left_id in p), None)


@dataclass(frozen=True)
class Portrait:
    """
    Портрет точки базы: циклический список секторов (нити слоя над доменами,
    примыкающими к точке) и границ; граница i соединяет сектор i с i+1 mod m.
    """

    sectors: tuple[tuple[Strand, ...], ...]
    boundaries: tuple[Boundary, ...]

    @property
    def size(self) -> int:
        return len(self.sectors)

    def sector_sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sectors)

    def strand(self, sector: int, strand_id: str) -> Strand:
        for s in self.sectors[sector % self.size]:
            if s.id == strand_id:
                return s
        raise KeyError(f"No strand {strand_id!r} in sector {sector}")

    def positions(self, sector: int) -> dict[str, Fraction]:
        return {s.id: s.pos for s in self.sectors[sector % self.size]}


# Дескрипторы вершин


@dataclass(frozen=True, order=True)
class TypeI:
    n: int
    k: int
    kind: str = field(default="I", init=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or self.k < 0 or self.n + self.k < 1:
            raise PortraitError(f"TypeI requires n, k >= 0 and n + k >= 1, got ({self.n},{self.k})")

    def __str__(self) -> str:
        return f"I({self.n},{self.k})"


@dataclass(frozen=True, order=True)
class TypeII:
    r: int
    side: Side
    kind: str = field(default="II", init=False, compare=False)

    def __post_init__(self):
        if self.r < 0:
            raise PortraitError(f"TypeII requires r >= 0, got {self.r}")
        object.__setattr__(self, "side", Side(self.side))

    def __str__(self) -> str:
        return f"II({self.r},{self.side.value})"


@dataclass(frozen=True, order=True)
class TypeIII:
    r: int
    side: Side
    kind: str = field(default="III", init=False, compare=False)

    def __post_init__(self):
        if self.r < 0:
            raise PortraitError(f"TypeIII requires r >= 0, got {self.r}")
        object.__setattr__(self, "side", Side(self.side))

    def __str__(self) -> str:
        return f"III({self.r},{self.side.value})"


@dataclass(frozen=True, order=True)
class Inessential:
    reason: str
    kind: str = field(default="inessential", init=False, compare=False)

    def __str__(self) -> str:
        return f"Inessential({self.reason})"


VertexDescriptor = Union[TypeI, TypeII, TypeIII, Inessential]

_KIND_ORDER = {"I": 0, "II": 1, "III": 2, "inessential": 3}


def descriptor_sort_key(d: VertexDescriptor) -> tuple:
    """Канонический порядок вывода: тип, затем параметры."""
    if isinstance(d, TypeI):
        return (0, d.n, d.k, "")
    if isinstance(d, (TypeII, TypeIII)):
        return (_KIND_ORDER[d.kind], d.r, 0, d.side.value)
    return (3, 0, 0, d.reason)
