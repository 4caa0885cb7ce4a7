import enum
from dataclasses import dataclass
from fractions import Fraction


class Extension(str, enum.Enum):
    CCW = "CCW"
    CW = "CW"


@dataclass(frozen=True)
class SectionAssignment:
    """По одной выбранной нити на сектор."""

    chosen: tuple[str, ...]

    def __getitem__(self, sector: int) -> str:
        return self.chosen[sector % len(self.chosen)]


ExtensionChoice = dict[int, Extension]


@dataclass(frozen=True)
class ConfigurationReport:
    degree: int
    jump_count: int
    forward_jumps: int
    backward_jumps: int


@dataclass(frozen=True)
class OracleReport:
    assignments: int
    configurations: int
    expected_index: Fraction
    shortcut: Fraction

    @property
    def match(self) -> bool:
        return self.expected_index == self.shortcut
