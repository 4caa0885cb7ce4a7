from dataclasses import dataclass, field
from fractions import Fraction

from .configuration import Extension


@dataclass(frozen=True)
class Pancake:
    center: tuple[Fraction, Fraction]
    radius: Fraction
    height: Fraction
    thickness: Fraction


@dataclass(frozen=True)
class Section:
    height: Fraction


@dataclass(frozen=True)
class ArrangementSpec:
    """Блины постоянной высоты и горизонтальные сечения тривиального расслоения над S²."""

    pancakes: tuple[Pancake, ...] = ()
    sections: tuple[Section, ...] = ()


@dataclass
class Vertex:
    id: int
    point: tuple[float, float]
    circles: tuple[int, int]
    outgoing: list[int] = field(default_factory=list)  # против часовой


@dataclass
class HalfEdge:
    id: int
    circle: int
    origin: int | None  # None у замкнутой окружности без вершин
    target: int | None
    start: float  # угол на окружности
    sweep: float  # > 0 против часовой
    twin: int = -1
    next: int = -1
    face: int = -1

    @property
    def ccw(self) -> bool:
        return self.sweep > 0

    @property
    def closed(self) -> bool:
        return self.origin is None


@dataclass
class Face:
    id: int
    covering: frozenset[int]  # индексы блинов над гранью
    cycles: list[int] = field(default_factory=list)  # первая полуребро каждого цикла
    outer: bool = False


@dataclass
class ArrangementDCEL:
    spec: ArrangementSpec
    vertices: list[Vertex]
    half_edges: list[HalfEdge]
    faces: list[Face]
    components: int

    @property
    def edges(self) -> list[int]:
        """Канонические полурёбра (против часовой по окружности) дуг между вершинами."""
        return [h.id for h in self.half_edges if h.ccw and not h.closed]

    def counts(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.faces)

    def canonical(self, half_edge: int) -> int:
        h = self.half_edges[half_edge]
        return h.id if h.ccw else h.twin

    def sheet_count(self, face: int) -> int:
        return len(self.spec.sections) + 2 * len(self.faces[face].covering)


@dataclass
class SectionSample:
    """Выбранный лист над каждой гранью и флаги продолжения на рёбрах со скачком."""

    faces: dict[int, str]
    flags: dict[int, Extension]
