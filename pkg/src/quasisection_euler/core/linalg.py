"""
Точное решение линейных систем над ℚ методом Гаусса.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Generic, Hashable, TypeVar

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)


@dataclass(frozen=True)
class Equation(Generic[K]):
    coefficients: dict[K, Fraction]
    rhs: Fraction = Fraction(0)
    tag: str = ""

    def residual(self, values: dict[K, Fraction]) -> Fraction:
        total = sum(
            (c * values.get(k, Fraction(0)) for k, c in self.coefficients.items()),
            Fraction(0),
        )
        return total - self.rhs


@dataclass
class LinearSystem(Generic[K]):
    unknowns: list[K] = field(default_factory=list)
    equations: list[Equation[K]] = field(default_factory=list)

    def add(self, coefficients: dict[K, Fraction | int], rhs: Fraction | int = 0, tag: str = "") -> None:
        cleaned = {k: Fraction(c) for k, c in coefficients.items() if c != 0}
        for key in cleaned:
            if key not in self.unknowns:
                self.unknowns.append(key)
        self.equations.append(Equation(cleaned, Fraction(rhs), tag))


@dataclass
class ExactSolution(Generic[K]):
    particular: dict[K, Fraction] | None
    kernel: list[dict[K, Fraction]]
    rank: int
    inconsistent_tags: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def solve_exact(system: LinearSystem[K]) -> ExactSolution[K]:
    """
    Приводит расширенную матрицу к ступенчатому виду (RREF) в дробях.
    Возвращает частное решение (свободные переменные = 0) или None при
    несовместности, а также базис ядра однородной системы.
    """
    unknowns = list(system.unknowns)
    index = {k: i for i, k in enumerate(unknowns)}
    width = len(unknowns)
    rows = []
    for eq in system.equations:
        row = [Fraction(0)] * (width + 1)
        for key, coef in eq.coefficients.items():
            row[index[key]] += coef
        row[width] = eq.rhs
        rows.append(row)
    tags = [eq.tag for eq in system.equations]

    pivots: list[int] = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        tags[r], tags[pivot] = tags[pivot], tags[r]
        lead = rows[r][col]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break

    # строки 0 = c, c ≠ 0
    bad = [tags[i] for i in range(r, len(rows)) if rows[i][width] != 0]
    logger.debug("solve_exact: %d unknowns, %d equations, rank %d", width, len(rows), r)

    free = [c for c in range(width) if c not in pivots]
    kernel = []
    for f in free:
        vec = {unknowns[f]: Fraction(1)}
        for row_i, p in enumerate(pivots):
            if rows[row_i][f] != 0:
                vec[unknowns[p]] = -rows[row_i][f]
        kernel.append(vec)

    if bad:
        logger.info("solve_exact: inconsistent system (%d contradicting rows)", len(bad))
        return ExactSolution(None, kernel, r, bad)

    particular = {k: Fraction(0) for k in unknowns}
    for row_i, p in enumerate(pivots):
        particular[unknowns[p]] = rows[row_i][width]
    return ExactSolution(particular, kernel, r)
