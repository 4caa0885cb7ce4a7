"""
Распознавание типа особой вершины по её портрету.
"""
import logging
from dataclasses import dataclass

from ..core.circle import ccw_distance, cyclic_open_contains
from ..models.portrait import (
    Inessential,
    Portrait,
    Side,
    TypeI,
    TypeII,
    TypeIII,
    VertexDescriptor,
)
from .oracle import expected_index_shortcut
from .portraits import ensure_valid, pair_arc

logger = logging.getLogger(__name__)


@dataclass
class FoldTrack:
    """Путь пары складки от рождения: для каждого сектора ids нижней и верхней ветви."""

    birth: int
    sectors: dict[int, tuple[str, str]]
    death: int | None
    death_pair: tuple[str, str] | None
    shared: bool = False  # умирает в паре с чужой нитью (сборка)


def crossings(p: Portrait, i: int) -> list[tuple[str, str]]:
    """Пары сопоставленных нитей, меняющихся местами на границе i."""
    left = p.positions(i)
    matches = p.boundaries[i].matches
    found = []
    for a_idx, x in enumerate(matches):
        for y in matches[a_idx + 1 :]:
            d1 = ccw_distance(left[x.left], left[y.left]) + y.winding - x.winding
            if d1 < 0 or d1 > 1:
                found.append((x.left, y.left))
    return found


def _track(p: Portrait, birth: int, pair: tuple[str, str]) -> FoldTrack:
    m = p.size
    lo, hi = pair
    arc = pair_arc(p.positions(birth + 1), lo, hi)
    if p.positions(birth + 1)[lo] != arc[0]:
        lo, hi = hi, lo
    sectors = {(birth + 1) % m: (lo, hi)}
    i = (birth + 1) % m
    for _ in range(m):
        b = p.boundaries[i]
        dying = b.death_pair(lo) or b.death_pair(hi)
        if dying is not None:
            shared = set(dying) != {lo, hi}
            return FoldTrack(birth % m, sectors, i, dying, shared)
        lo, hi = b.right_of(lo).right, b.right_of(hi).right
        i = (i + 1) % m
        sectors[i] = (lo, hi)
    return FoldTrack(birth % m, sectors, None, None)


def _follow(p: Portrait, sector: int, strand: str, steps: int) -> str | None:
    for j in range(steps):
        mt = p.boundaries[(sector + j) % p.size].right_of(strand)
        if mt is None:
            return None
        strand = mt.right
    return strand


def _handed(p: Portrait, make):
    value = expected_index_shortcut(p)
    if value == 0:
        return Inessential("line-symmetric")
    return make(Side.R if value > 0 else Side.L)


def _classify_fold_crossing(p: Portrait) -> VertexDescriptor:
    m = p.size
    sizes = p.sector_sizes()
    smallest = min(sizes)
    if sizes.count(smallest) != 1:
        return Inessential("unrecognized")
    start = sizes.index(smallest)
    order = [(start + j) % m for j in range(m)]
    born = [(i, b) for i in order for b in p.boundaries[i].births]
    if len(born) != 2:
        return Inessential("unrecognized")
    track_a = _track(p, *born[0])
    track_b = _track(p, *born[1])
    if track_a.shared or track_b.shared or track_a.death is None or track_b.death is None:
        return Inessential("unrecognized")
    # порядок событий от минимального сектора: A+, B+, A-, B-
    pos_of = {i: k for k, i in enumerate(order)}
    events = [pos_of[track_a.birth], pos_of[track_b.birth], pos_of[track_a.death], pos_of[track_b.death]]
    if events != sorted(events) or len(set(events)) != 4:
        return Inessential("unrecognized")

    both = (track_b.birth + 1) % m
    a_lo, a_hi = track_a.sectors[both]
    b_lo, b_hi = track_b.sectors[both]
    positions = p.positions(both)
    folds = {a_lo, a_hi, b_lo, b_hi}
    simples = [pos for sid, pos in positions.items() if sid not in folds]
    n = sum(1 for pos in simples if cyclic_open_contains(positions[a_hi], positions[b_lo], pos))
    k = len(simples) - n
    if n + k == 0:
        return Inessential("unrecognized")
    return TypeI(n, k)


def classify(p: Portrait) -> VertexDescriptor:
    """
    Возвращает дескриптор вершины с точностью до поворота нумерации
    секторов, поворота слоя и добавления простых окружностей.
    """
    descriptor = _classify(p)
    logger.debug("Portrait with sector sizes %s classified as %s", p.sector_sizes(), descriptor)
    return descriptor


def _classify(p: Portrait) -> VertexDescriptor:
    ensure_valid(p)
    m = p.size
    births = [(i, pair) for i in range(m) for pair in p.boundaries[i].births]
    deaths = [(i, pair) for i in range(m) for pair in p.boundaries[i].deaths]
    crossed = {i: crossings(p, i) for i in range(m)}
    n_cross = sum(len(c) for c in crossed.values())

    if not births and not n_cross:
        return Inessential("regular")
    if len(births) == 2 and len(deaths) == 2 and n_cross == 0:
        return _classify_fold_crossing(p)
    if len(births) != 1 or len(deaths) != 1:
        return Inessential("unrecognized")

    track = _track(p, *births[0])
    if track.death is None:
        return Inessential("unrecognized")
    r = min(p.sector_sizes()) - 1

    if track.shared:
        if n_cross:
            return Inessential("unrecognized")
        return _handed(p, lambda side: TypeII(r, side))

    fold_hits: dict[str, list[tuple[int, str]]] = {"lo": [], "hi": []}
    for i, pairs in crossed.items():
        alive = track.sectors.get(i)
        for x, y in pairs:
            if alive and {x, y} == set(alive):
                return Inessential("line-symmetric")
            if alive and x in alive:
                fold_hits["lo" if x == alive[0] else "hi"].append((i, y))
            elif alive and y in alive:
                fold_hits["lo" if y == alive[0] else "hi"].append((i, x))
            else:
                return Inessential("unrecognized")

    if not fold_hits["lo"] and not fold_hits["hi"]:
        return Inessential("fold edge")
    if len(fold_hits["lo"]) != 1 or len(fold_hits["hi"]) != 1:
        return Inessential("unrecognized")
    (i1, x1), (i2, x2) = sorted(
        fold_hits["lo"] + fold_hits["hi"], key=lambda hit: (hit[0] - track.birth) % m
    )
    steps = (i2 - i1) % m
    if _follow(p, i1, x1, steps) != x2:
        return Inessential("unrecognized")
    return _handed(p, lambda side: TypeIII(r, side))
