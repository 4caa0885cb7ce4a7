"""
Точное математическое ожидание индекса случайного частичного сечения
в окрестности точки базы.

В каждом секторе равновероятно выбирается одна нить, на каждом скачке
независимо выбирается продолжение (против часовой или по часовой).
Переход через границу происходит в один момент: совпавшие нити стоят
в точке pos + w/2, умирающая (рождающаяся) пара в середине своей
свободной дуги слева (справа).
"""
import itertools
import logging
import math
from fractions import Fraction

from ..config import settings
from ..core.circle import arc_midpoint, ccw_distance, frac, signed_lift
from ..exceptions import EnumerationTooLarge, InvariantBreach, QuasisectionError
from ..models.configuration import (
    ConfigurationReport,
    Extension,
    ExtensionChoice,
    OracleReport,
    SectionAssignment,
)
from ..models.portrait import Portrait
from .portraits import ensure_valid, pair_arc

logger = logging.getLogger(__name__)

# (скачок?, вклад границы при продолжении против часовой)
EdgeTable = dict[tuple[str, str], tuple[bool, Fraction]]


def _edge_points(p: Portrait, i: int) -> tuple[dict, dict]:
    """Точки на ребре и поднятия до них для левых и правых нитей границы i."""
    b = p.boundaries[i]
    left, right = p.positions(i), p.positions(i + 1)
    out: dict[str, tuple[Fraction, Fraction]] = {}
    into: dict[str, tuple[Fraction, Fraction]] = {}
    for mt in b.matches:
        half = mt.winding / 2
        point = frac(left[mt.left] + half)
        out[mt.left] = (point, half)
        into[mt.right] = (point, half)
    for a, c in b.deaths:
        fold = arc_midpoint(*pair_arc(left, a, c))
        for sid in (a, c):
            out[sid] = (fold, signed_lift(fold - left[sid]))
    for a, c in b.births:
        fold = arc_midpoint(*pair_arc(right, a, c))
        for sid in (a, c):
            into[sid] = (fold, signed_lift(right[sid] - fold))
    return out, into


def edge_table(p: Portrait, i: int) -> EdgeTable:
    out, into = _edge_points(p, i)
    table: EdgeTable = {}
    for x, (ex, dl) in out.items():
        for y, (ey, dr) in into.items():
            jump = ex != ey
            table[(x, y)] = (jump, dl + dr + (ccw_distance(ex, ey) if jump else 0))
    return table


def edge_tables(p: Portrait) -> list[EdgeTable]:
    return [edge_table(p, i) for i in range(p.size)]


def is_jump(p: Portrait, assignment: SectionAssignment, i: int) -> bool:
    """False, если выбранные слева и справа нити встречаются на ребре."""
    return edge_table(p, i)[(assignment[i], assignment[i + 1])][0]


def _ccw_profile(tables: list[EdgeTable], assignment: SectionAssignment) -> tuple[Fraction, list[int]]:
    total = Fraction(0)
    jumps = []
    for i, table in enumerate(tables):
        jump, value = table[(assignment[i], assignment[i + 1])]
        total += value
        if jump:
            jumps.append(i)
    return total, jumps


def _as_degree(value: Fraction) -> int:
    if value.denominator != 1:
        raise InvariantBreach(f"Non-integral configuration degree {value}")
    return int(value)


def deg_ccw(p: Portrait, assignment: SectionAssignment) -> int:
    """Степень конфигурации, в которой все скачки продолжены против часовой."""
    tables = edge_tables(p)
    total, _ = _ccw_profile(tables, assignment)
    return _as_degree(total)


def configuration_degree(
    p: Portrait,
    assignment: SectionAssignment,
    ext: ExtensionChoice,
    tables: list[EdgeTable] | None = None,
) -> ConfigurationReport:
    """tables: заранее посчитанные edge_tables(p) при многократных вызовах."""
    tables = tables if tables is not None else edge_tables(p)
    total, jumps = _ccw_profile(tables, assignment)
    if set(ext) != set(jumps):
        raise QuasisectionError(
            f"Extension flags {sorted(ext)} do not match jump boundaries {jumps}"
        )
    ccw = _as_degree(total)
    backward = sum(1 for i in jumps if Extension(ext[i]) is Extension.CW)
    # K и M по соглашению deg_ccw
    return ConfigurationReport(
        degree=ccw - backward,
        jump_count=len(jumps),
        forward_jumps=len(jumps) - ccw,
        backward_jumps=ccw,
    )


def assignments(p: Portrait):
    for chosen in itertools.product(*[[s.id for s in sector] for sector in p.sectors]):
        yield SectionAssignment(tuple(chosen))


def assignment_count(p: Portrait) -> int:
    return math.prod(len(s) for s in p.sectors)


def _check_cap(p: Portrait, cap: int | None) -> None:
    cap = settings.ENUMERATION_CAP if cap is None else cap
    bound = assignment_count(p) * 2 ** p.size
    if bound > cap:
        raise EnumerationTooLarge(f"Enumeration too large: {bound} configurations > {cap}")


def _enumerate(p: Portrait, cap: int | None) -> tuple[Fraction, Fraction, int, int]:
    ensure_valid(p)
    _check_cap(p, cap)
    tables = edge_tables(p)
    brute = Fraction(0)
    shortcut = Fraction(0)
    n_assign = 0
    n_conf = 0
    for assignment in assignments(p):
        total, jumps = _ccw_profile(tables, assignment)
        ccw = _as_degree(total)
        n_assign += 1
        shortcut += ccw - Fraction(len(jumps), 2)
        weight = Fraction(1, 2 ** len(jumps))
        for flags in itertools.product((Extension.CCW, Extension.CW), repeat=len(jumps)):
            n_conf += 1
            degree = ccw - sum(1 for f in flags if f is Extension.CW)
            brute += weight * degree
    logger.debug("Enumerated %d assignments, %d configurations", n_assign, n_conf)
    return brute / n_assign, shortcut / n_assign, n_assign, n_conf


def expected_index(p: Portrait, cap: int | None = None) -> Fraction:
    """
    Возвращает точное среднее степени по всем выборам нитей и всем
    продолжениям скачков.
    """
    return _enumerate(p, cap)[0]


def expected_index_shortcut(p: Portrait, cap: int | None = None) -> Fraction:
    """Среднее по выборам нитей величины deg_ccw − J/2."""
    ensure_valid(p)
    _check_cap(p, cap)
    tables = edge_tables(p)
    acc = Fraction(0)
    count = 0
    for assignment in assignments(p):
        total, jumps = _ccw_profile(tables, assignment)
        acc += _as_degree(total) - Fraction(len(jumps), 2)
        count += 1
    return acc / count


def oracle_report(p: Portrait, cap: int | None = None) -> OracleReport:
    value, shortcut, n_assign, n_conf = _enumerate(p, cap)
    return OracleReport(
        assignments=n_assign,
        configurations=n_conf,
        expected_index=value,
        shortcut=shortcut,
    )
