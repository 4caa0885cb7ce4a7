from collections import Counter
from typing import List, Optional

from pydantic import BaseModel, conint

from ..models.summary import QuasisectionSummary
from .common import DescriptorModel, Rational


class VertexCount(DescriptorModel):
    count: conint(ge=1) = 1


class SummaryModel(BaseModel):
    """
    {"name": "four_pancakes", "base": "S2", "euler": 2, "degree": 0,
     "vertices": [{"type": "I", "n": 2, "k": 0, "count": 12}]}
    """

    name: str
    base: str = "S2"
    euler: int
    degree: Optional[int] = None
    vertices: List[VertexCount] = []

    def to_domain(self) -> QuasisectionSummary:
        counts: Counter = Counter()
        for v in self.vertices:
            counts[v.to_descriptor()] += v.count
        return QuasisectionSummary.from_counts(
            self.name, counts, base=self.base, declared_euler=self.euler, declared_degree=self.degree
        )

    @classmethod
    def from_domain(cls, s: QuasisectionSummary) -> "SummaryModel":
        return cls(
            name=s.name,
            base=s.base,
            euler=s.declared_euler,
            degree=s.declared_degree,
            vertices=[
                VertexCount(count=c, **DescriptorModel.from_descriptor(d).model_dump()) for d, c in s.vertices
            ],
        )


class SummaryEulerRead(BaseModel):
    summary: SummaryModel
    euler: Rational
    match: bool
    notes: List[str] = []


class UniquenessRead(BaseModel):
    cutoff: int
    families: List[str]
    anchors: List[str]
    equations: int
    rank: int
    kernel_dim: int
    unique: bool
    solution: Optional[dict[str, Rational]] = None
    determined: List[str] = []
    mismatches: List[str] = []
    corrections: List[str] = []
