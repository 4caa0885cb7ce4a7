"""
Локальная формула на мультимножествах вершин, галерея примеров и
проверка единственности весов точной линейной алгеброй.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from ..config import settings
from ..core.linalg import Equation, LinearSystem, solve_exact
from ..exceptions import InvariantBreach, QuasisectionError, UnknownGalleryEntry
from ..models.portrait import Side, TypeI, TypeII, TypeIII, VertexDescriptor, descriptor_sort_key
from ..models.summary import QuasisectionSummary
from .weights import weight_of

logger = logging.getLogger(__name__)

R, L = Side.R, Side.L


def euler_of_summary(s: QuasisectionSummary) -> Fraction:
    return sum((weight_of(d) * c for d, c in s.vertices), Fraction(0))


def pancake_triple_euler(positive: int, negative: int) -> Fraction:
    """Для блинного квазисечения: половина разности числа положительных и отрицательных троек."""
    return Fraction(positive - negative, 2)


# Галерея


def _summary(name: str, euler: int, counts: Counter, **kwargs) -> QuasisectionSummary:
    return QuasisectionSummary.from_counts(name, counts, base=kwargs.pop("base", "S2"), declared_euler=euler, **kwargs)


def _four_pancakes() -> QuasisectionSummary:
    return _summary("four_pancakes", 2, Counter({TypeI(2, 0): 12}), declared_degree=0, triples=(4, 0))


def _crossing_pancakes_a(e: int = 1) -> QuasisectionSummary:
    if e < 1:
        raise QuasisectionError("crossing_pancakes_A requires e >= 1")
    return _summary("crossing_pancakes_A", e, Counter({TypeIII(1, R): 4 * e}))


def _crossing_pancakes_b(n: int = 1) -> QuasisectionSummary:
    if n < 1:
        raise QuasisectionError("crossing_pancakes_B requires n >= 1")
    return _summary(
        "crossing_pancakes_B",
        0,
        Counter({TypeI(n, 0): 2, TypeIII(n + 1, L): 4}),
        notes=("the form 2·I(0,n) + 4·III(n+1,L) = 0 is not satisfied by the weights; I(n,0) is used instead",),
    )


def _curled_pancake(N: int = 2) -> QuasisectionSummary:
    if N < 2:
        raise QuasisectionError("curled_pancake requires N >= 2 (I(0,0) does not exist)")
    return _summary("curled_pancake", 0, Counter({TypeII(N, R): 2, TypeI(0, N - 1): 1}))


def _curled_pancake_capped() -> QuasisectionSummary:
    return _summary(
        "curled_pancake_capped",
        0,
        Counter({TypeII(2, R): 1, TypeII(4, R): 1, TypeI(0, 1): 1, TypeI(2, 1): 2}),
        notes=("the left-pleat form is not annihilated by the weights; right pleats are used",),
    )


def _boy_plus_sections(m: int = 1) -> QuasisectionSummary:
    if m not in (1, 2):
        raise QuasisectionError("boy_plus_sections requires m in {1, 2}")
    return _summary(
        "boy_plus_sections",
        0,
        Counter({TypeII(m + 1, R): 3, TypeIII(m + 1, R): 3, TypeI(0, m): 3}),
        declared_degree=m,
    )


def _triple_pancakes(a: int = 0, b: int = 0, c: int = 1) -> QuasisectionSummary:
    if min(a, b, c) < 0 or a + b + c < 1:
        raise QuasisectionError("triple_pancakes requires a, b, c >= 0 and a + b + c >= 1")
    counts: Counter = Counter()
    for d in triple_vertices(a, b, c):
        counts[d] += 1
    return _summary(
        "triple_pancakes",
        0,
        counts,
        notes=("second triple uses the swapped argument order",),
    )


def _wrinkle(r: int = 0) -> QuasisectionSummary:
    return _summary("wrinkle", 0, Counter({TypeII(r, R): 1, TypeII(r, L): 1}))


def _two_pancake_pair(n: int = 1, k: int = 0) -> QuasisectionSummary:
    counts = Counter({TypeI(n, k): 1})
    counts[TypeI(k, n)] += 1
    return _summary("two_pancake_pair", 0, counts)


def triple_vertices(a: int, b: int, c: int) -> list[TypeI]:
    """Шесть вершин трёх попарно пересекающихся блинов с a, b, c листами между ними."""
    return [
        TypeI(a + b + 2, c),
        TypeI(b + c + 2, a),
        TypeI(c + a + 2, b),
        TypeI(c, a + b),
        TypeI(a, b + c),
        TypeI(b, c + a),
    ]


GALLERY: dict[str, Callable[..., QuasisectionSummary]] = {
    "four_pancakes": _four_pancakes,
    "crossing_pancakes_A": _crossing_pancakes_a,
    "crossing_pancakes_B": _crossing_pancakes_b,
    "curled_pancake": _curled_pancake,
    "curled_pancake_capped": _curled_pancake_capped,
    "boy_plus_sections": _boy_plus_sections,
    "triple_pancakes": _triple_pancakes,
    "wrinkle": _wrinkle,
    "two_pancake_pair": _two_pancake_pair,
}

# параметры, на которых проверяется вся галерея
GALLERY_CHECKS: list[tuple[str, dict[str, int]]] = (
    [("four_pancakes", {})]
    + [("crossing_pancakes_A", {"e": e}) for e in (1, 2, 3)]
    + [("crossing_pancakes_B", {"n": n}) for n in (1, 2, 3)]
    + [("curled_pancake", {"N": N}) for N in (2, 3, 4)]
    + [("curled_pancake_capped", {})]
    + [("boy_plus_sections", {"m": m}) for m in (1, 2)]
    + [("triple_pancakes", {"a": a, "b": b, "c": c}) for a, b, c in ((0, 0, 1), (1, 0, 1), (1, 2, 0), (2, 1, 1))]
    + [("wrinkle", {"r": r}) for r in (0, 1, 3)]
    + [("two_pancake_pair", {"n": n, "k": k}) for n, k in ((1, 0), (3, 1), (2, 2))]
)


def gallery(name: str, **params: int) -> QuasisectionSummary:
    try:
        builder = GALLERY[name]
    except KeyError:
        raise UnknownGalleryEntry(f"Unknown gallery entry: {name}") from None
    try:
        return builder(**params)
    except TypeError as exc:
        raise QuasisectionError(f"Invalid parameters for {name}: {params}") from exc


@dataclass(frozen=True)
class GalleryCheck:
    summary: QuasisectionSummary
    params: dict
    computed: Fraction

    @property
    def ok(self) -> bool:
        if self.computed != self.summary.declared_euler:
            return False
        if self.summary.triples is not None:
            return pancake_triple_euler(*self.summary.triples) == self.computed
        return True


def check_gallery() -> list[GalleryCheck]:
    results = []
    for name, params in GALLERY_CHECKS:
        s = gallery(name, **params)
        results.append(GalleryCheck(s, params, euler_of_summary(s)))
    failed = [r for r in results if not r.ok]
    if failed:
        logger.warning("Gallery check failed for %s", [r.summary.name for r in failed])
    return results


# Единственность


FAMILIES = ("ANTISYM", "TRIPLE", "PLEAT_REC", "FS_REC", "FS_REDUCE", "CURLED", "BASE0")
ANCHORS = ("ANCHOR1",)

Coefficients = dict[VertexDescriptor, int | Fraction]


def closed_forms(cutoff: int) -> dict[VertexDescriptor, Fraction]:
    """Значения весов на всех неизвестных до cutoff."""
    values: dict[VertexDescriptor, Fraction] = {}
    for d in unknowns(cutoff):
        values[d] = weight_of(d)
    return values


def unknowns(cutoff: int) -> list[VertexDescriptor]:
    result: list[VertexDescriptor] = []
    for s in range(1, cutoff + 1):
        result += [TypeI(n, s - n) for n in range(s, -1, -1)]
    for r in range(cutoff + 1):
        result += [TypeII(r, R), TypeII(r, L)]
    for r in range(cutoff + 1):
        result += [TypeIII(r, R), TypeIII(r, L)]
    return result


def _within(d: VertexDescriptor, cutoff: int) -> bool:
    if isinstance(d, TypeI):
        return d.n + d.k <= cutoff
    return d.r <= cutoff


def _combine(terms: Iterable[tuple[VertexDescriptor, int | Fraction]]) -> Coefficients:
    coefficients: Coefficients = {}
    for d, c in terms:
        coefficients[d] = coefficients.get(d, 0) + c
    return coefficients


def _family_equations(family: str, cutoff: int) -> Iterable[tuple[list, Fraction, str]]:
    if family == "ANTISYM":
        for s in range(1, cutoff + 1):
            for n in range((s + 1) // 2, s + 1):
                yield [(TypeI(n, s - n), 1), (TypeI(s - n, n), 1)], Fraction(0), f"ANTISYM(n={n},k={s - n})"
        for r in range(cutoff + 1):
            yield [(TypeII(r, R), 1), (TypeII(r, L), 1)], Fraction(0), f"ANTISYM(pleat r={r})"
            yield [(TypeIII(r, R), 1), (TypeIII(r, L), 1)], Fraction(0), f"ANTISYM(fold-sheet r={r})"
    elif family == "TRIPLE":
        for m in range(1, cutoff - 1):
            for a in range(m + 1):
                for b in range(m - a + 1):
                    c = m - a - b
                    yield (
                        [(d, 1) for d in triple_vertices(a, b, c)],
                        Fraction(0),
                        f"TRIPLE(a={a},b={b},c={c}) [corrected: second triple argument order]",
                    )
    elif family in ("PLEAT_REC", "FS_REC"):
        kind = TypeII if family == "PLEAT_REC" else TypeIII
        for n in range(cutoff - 1):
            yield (
                [(kind(n + 2, R), 1), (kind(n, R), -1), (TypeI(n + 1, 0), 1), (TypeI(n, 1), -1)],
                Fraction(0),
                f"{family}(n={n})",
            )
    elif family == "FS_REDUCE":
        for n in range(1, cutoff):
            yield (
                [(TypeI(n, 0), 2), (TypeIII(n + 1, L), 4)],
                Fraction(0),
                f"FS_REDUCE(n={n}) [corrected: I(n,0) in place of I(0,n)]",
            )
    elif family == "CURLED":
        yield (
            [(TypeII(2, R), 1), (TypeII(4, R), 1), (TypeI(0, 1), 1), (TypeI(2, 1), 2)],
            Fraction(0),
            "CURLED(capped) [corrected: right pleats]",
        )
        for N in range(2, cutoff + 1):
            yield [(TypeII(N, R), 2), (TypeI(0, N - 1), 1)], Fraction(0), f"CURLED(N={N})"
    elif family == "BASE0":
        yield [(TypeI(2, 0), 12)], Fraction(2), "BASE0(four_pancakes)"
        yield [(TypeIII(1, R), 4)], Fraction(1), "BASE0(crossing_pancakes_A)"
        for m in (1, 2):
            yield (
                [(TypeII(m + 1, R), 3), (TypeIII(m + 1, R), 3), (TypeI(0, m), 3)],
                Fraction(0),
                f"BASE0(boy_plus_sections m={m})",
            )
    elif family == "ANCHOR1":
        yield [(TypeI(1, 0), 1)], Fraction(4, 15), "ANCHOR1(I(1,0)=4/15)"
    else:
        raise QuasisectionError(f"Unknown constraint family: {family}")


def generate_constraints(
    cutoff: int | None = None,
    families: Iterable[str] = FAMILIES,
    anchors: Iterable[str] = ANCHORS,
) -> LinearSystem:
    """
    Собирает систему на веса вершин типов I, II, III до cutoff. Каждое
    уравнение проверяется на замкнутых формулах весов при генерации.
    """
    cutoff = settings.UNIQUENESS_CUTOFF if cutoff is None else cutoff
    if cutoff < 4:
        raise QuasisectionError(f"cutoff must be >= 4, got {cutoff}")
    system: LinearSystem = LinearSystem(unknowns=unknowns(cutoff))
    for family in list(families) + list(anchors):
        for terms, rhs, tag in _family_equations(family, cutoff):
            coefficients = _combine(terms)
            if not all(_within(d, cutoff) for d in coefficients):
                continue
            equation = Equation({d: Fraction(c) for d, c in coefficients.items()}, rhs, tag)
            residual = equation.residual({d: weight_of(d) for d in coefficients})
            if residual != 0:
                raise InvariantBreach(f"Closed-form weights violate {tag}: residual {residual}")
            system.add(coefficients, rhs, tag)
    logger.debug("Generated %d equations on %d unknowns", len(system.equations), len(system.unknowns))
    return system


@dataclass
class UniquenessReport:
    cutoff: int
    families: list[str]
    anchors: list[str]
    equations: list[Equation]
    rank: int
    kernel: list[dict]
    solution: dict[VertexDescriptor, Fraction] | None
    determined: list[VertexDescriptor] = field(default_factory=list)
    mismatches: list[tuple[VertexDescriptor, Fraction, Fraction]] = field(default_factory=list)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)

    @property
    def unique(self) -> bool:
        return self.solution is not None and self.kernel_dim == 0 and not self.mismatches

    @property
    def corrections(self) -> list[str]:
        return [eq.tag for eq in self.equations if "[corrected" in eq.tag]


def solve_uniqueness(
    cutoff: int | None = None,
    families: Iterable[str] = FAMILIES,
    anchors: Iterable[str] = ANCHORS,
) -> UniquenessReport:
    """
    Решает систему и сравнивает с замкнутыми формулами те неизвестные,
    которые определены однозначно (нулевая компонента во всём ядре).
    """
    cutoff = settings.UNIQUENESS_CUTOFF if cutoff is None else cutoff
    families, anchors = list(families), list(anchors)
    system = generate_constraints(cutoff, families, anchors)
    result = solve_exact(system)
    determined = [d for d in system.unknowns if all(vec.get(d, 0) == 0 for vec in result.kernel)]
    mismatches = []
    if result.particular is not None:
        for d in determined:
            if result.particular[d] != weight_of(d):
                mismatches.append((d, result.particular[d], weight_of(d)))
    logger.info(
        "Uniqueness cutoff=%d: rank %d, kernel dim %d, %d mismatches",
        cutoff,
        result.rank,
        len(result.kernel),
        len(mismatches),
    )
    return UniquenessReport(
        cutoff=cutoff,
        families=families,
        anchors=anchors,
        equations=list(system.equations),
        rank=result.rank,
        kernel=result.kernel,
        solution=result.particular,
        determined=sorted(determined, key=descriptor_sort_key),
        mismatches=mismatches,
    )


# Опечатки в опубликованных уравнениях


def printed_triple(a: int, b: int, c: int) -> Coefficients:
    """Тройка в напечатанном виде: вторая тройка без перестановки аргументов."""
    return _combine(
        [
            (TypeI(a + b + 2, c), 1),
            (TypeI(b + c + 2, a), 1),
            (TypeI(c + a + 2, b), 1),
            (TypeI(a + b, c), 1),
            (TypeI(b + c, a), 1),
            (TypeI(c + a, b), 1),
        ]
    )


def printed_fs_reduce(n: int) -> Coefficients:
    return _combine([(TypeI(0, n), 2), (TypeIII(n + 1, L), 4)])


def printed_curled() -> Coefficients:
    return _combine([(TypeII(2, L), 1), (TypeII(4, L), 1), (TypeI(0, 1), 1), (TypeI(2, 1), 2)])


def sector_pair_type_I(n: int, k: int) -> Fraction:
    """Удвоенная сумма по тройкам секторов: 2·2(n−k)/((n+k)(n+k+1)(n+k+2))."""
    s = n + k
    return 2 * Fraction(2 * (n - k), s * (s + 1) * (s + 2))


def weight_residual(coefficients: Coefficients, rhs: Fraction = Fraction(0)) -> Fraction:
    return sum((Fraction(c) * weight_of(d) for d, c in coefficients.items()), Fraction(0)) - rhs


@dataclass(frozen=True)
class Erratum:
    tag: str
    printed: Fraction  # невязка напечатанного варианта на весах
    corrected: Fraction


def errata() -> list[Erratum]:
    """Расхождения опубликованных уравнений с весами и их исправления."""
    corrected_triple = _combine((d, 1) for d in triple_vertices(0, 0, 1))
    found = [
        Erratum("TRIPLE(a=0,b=0,c=1)", weight_residual(printed_triple(0, 0, 1)), weight_residual(corrected_triple)),
        Erratum(
            "FS_REDUCE(n=1)",
            weight_residual(printed_fs_reduce(1)),
            weight_residual({TypeI(1, 0): 2, TypeIII(2, L): 4}),
        ),
        Erratum(
            "CURLED(capped)",
            weight_residual(printed_curled()),
            weight_residual({TypeII(2, R): 1, TypeII(4, R): 1, TypeI(0, 1): 1, TypeI(2, 1): 2}),
        ),
        Erratum(
            "TYPE_I_INNER(n=2,k=0)",
            sector_pair_type_I(2, 0) - weight_of(TypeI(2, 0)),
            Fraction(0),
        ),
    ]
    for e in found:
        if e.printed != 0:
            logger.warning("Erratum %s: printed form off by %s", e.tag, e.printed)
    return found
