from fractions import Fraction
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, PlainSerializer, PlainValidator, WithJsonSchema

from ..core.rational import format_rational, parse_rational
from ..exceptions import PortraitError
from ..models.portrait import Inessential, Side, TypeI, TypeII, TypeIII, VertexDescriptor

# Рациональное число в JSON: строка "p/q" или "p"
Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "examples": ["1/4", "-2/3", "0"]}),
]


class DescriptorModel(BaseModel):
    type: Literal["I", "II", "III", "inessential"]
    n: Optional[int] = None
    k: Optional[int] = None
    r: Optional[int] = None
    side: Optional[Side] = None
    reason: Optional[str] = None

    def to_descriptor(self) -> VertexDescriptor:
        if self.type == "I":
            if self.n is None or self.k is None:
                raise PortraitError("Type I descriptor requires n and k")
            return TypeI(self.n, self.k)
        if self.type in ("II", "III"):
            if self.r is None or self.side is None:
                raise PortraitError(f"Type {self.type} descriptor requires r and side")
            return (TypeII if self.type == "II" else TypeIII)(self.r, self.side)
        return Inessential(self.reason or "unspecified")

    @classmethod
    def from_descriptor(cls, d: VertexDescriptor) -> "DescriptorModel":
        if isinstance(d, TypeI):
            return cls(type="I", n=d.n, k=d.k)
        if isinstance(d, (TypeII, TypeIII)):
            return cls(type=d.kind, r=d.r, side=d.side)
        return cls(type="inessential", reason=d.reason)
