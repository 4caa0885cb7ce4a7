from typing import List

from pydantic import BaseModel

from ..models.portrait import Boundary, Match, Portrait, Strand
from .common import DescriptorModel, Rational


class StrandModel(BaseModel):
    id: str
    pos: Rational


class BoundaryModel(BaseModel):
    matches: List[tuple[str, str, Rational]] = []
    births: List[tuple[str, str]] = []
    deaths: List[tuple[str, str]] = []


class PortraitModel(BaseModel):
    """
    {"sectors": [[{"id": "a", "pos": "1/4"}, ...], ...],
     "boundaries": [{"matches": [["a", "a", "0"]], "births": [["x", "y"]], "deaths": []}, ...]}
    """

    sectors: List[List[StrandModel]]
    boundaries: List[BoundaryModel]

    def to_domain(self) -> Portrait:
        return Portrait(
            sectors=tuple(
                tuple(sorted((Strand(s.id, s.pos) for s in sector), key=lambda s: s.pos)) for sector in self.sectors
            ),
            boundaries=tuple(
                Boundary(
                    matches=tuple(Match(left, right, w) for left, right, w in b.matches),
                    births=tuple(tuple(pair) for pair in b.births),
                    deaths=tuple(tuple(pair) for pair in b.deaths),
                )
                for b in self.boundaries
            ),
        )


class ClassifyRead(BaseModel):
    descriptor: DescriptorModel
    weight: Rational
    expected_index: Rational
    shortcut: Rational
    assignments: int
    configurations: int
    match: bool
