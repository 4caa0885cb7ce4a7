from collections import Counter
from dataclasses import dataclass, field

from .portrait import VertexDescriptor, descriptor_sort_key


@dataclass(frozen=True)
class QuasisectionSummary:
    """
    Мультимножество дескрипторов вершин квазисечения с заявленным числом
    Эйлера. Степень квазисечения хранится только как метаданные.
    """

    name: str
    base: str
    declared_euler: int
    vertices: tuple[tuple[VertexDescriptor, int], ...]
    declared_degree: int | None = None
    # (положительные, отрицательные) тройки блинов, если квазисечение блинное
    triples: tuple[int, int] | None = None
    notes: tuple[str, ...] = field(default=())

    @classmethod
    def from_counts(cls, name: str, counts: Counter, **kwargs) -> "QuasisectionSummary":
        ordered = sorted(((d, c) for d, c in counts.items() if c), key=lambda item: descriptor_sort_key(item[0]))
        return cls(name=name, vertices=tuple(ordered), **kwargs)

    def multiset(self) -> Counter:
        counts: Counter = Counter()
        for d, c in self.vertices:
            counts[d] += c
        return counts

    @property
    def vertex_count(self) -> int:
        return sum(c for _, c in self.vertices)
