from typing import List

from pydantic import BaseModel, Field

from ..models.arrangement import ArrangementSpec, Pancake, Section
from .common import DescriptorModel, Rational


class PancakeModel(BaseModel):
    center: tuple[Rational, Rational]
    radius: Rational
    height: Rational
    thickness: Rational


class SectionModel(BaseModel):
    height: Rational


class ArrangementModel(BaseModel):
    """
    {"pancakes": [{"center": ["0", "0"], "radius": "2", "height": "1/4", "thickness": "1/100"}],
     "sections": [{"height": "0"}]}
    """

    pancakes: List[PancakeModel] = []
    sections: List[SectionModel] = []

    def to_domain(self) -> ArrangementSpec:
        return ArrangementSpec(
            pancakes=tuple(
                Pancake(center=p.center, radius=p.radius, height=p.height, thickness=p.thickness)
                for p in self.pancakes
            ),
            sections=tuple(Section(height=s.height) for s in self.sections),
        )


class VertexRead(BaseModel):
    vertex: int
    x: float
    y: float
    circles: tuple[int, int]
    descriptor: DescriptorModel
    weight: Rational


class ArrangementEulerRead(BaseModel):
    euler: Rational
    counts: dict[str, int] = Field(description="V, E, F, C")
    vertices: List[VertexRead]
