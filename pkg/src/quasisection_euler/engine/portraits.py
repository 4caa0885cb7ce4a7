"""
Комбинаторные портреты точек базы: проверка, канонические генераторы,
отражение (линейная симметрия), добавление простых окружностей.
"""
import logging
from fractions import Fraction
from typing import Iterable

from ..core.circle import ccw_distance, cyclic_open_contains, frac
from ..exceptions import PortraitError
from ..models.portrait import Boundary, Match, Portrait, Side, Strand

logger = logging.getLogger(__name__)


def _adjacent(positions: dict[str, Fraction], a: str, b: str) -> bool:
    """Нити a и b соседние: одна из дуг между ними свободна от других нитей."""
    pa, pb = positions[a], positions[b]
    others = [p for sid, p in positions.items() if sid not in (a, b)]
    free_ab = not any(cyclic_open_contains(pa, pb, p) for p in others)
    free_ba = not any(cyclic_open_contains(pb, pa, p) for p in others)
    return free_ab or free_ba


def pair_arc(positions: dict[str, Fraction], a: str, b: str) -> tuple[Fraction, Fraction]:
    """Концы свободной дуги пары (от первого к второму против часовой)."""
    pa, pb = positions[a], positions[b]
    others = [p for sid, p in positions.items() if sid not in (a, b)]
    if not any(cyclic_open_contains(pa, pb, p) for p in others):
        return pa, pb
    return pb, pa


def validate(p: Portrait) -> list[str]:
    """
    Проверяет все инварианты портрета. Возвращает список нарушений
    (пустой список, если портрет корректен).
    """
    errors: list[str] = []
    m = len(p.sectors)
    if m == 0:
        return ["no sectors"]
    if len(p.boundaries) != m:
        errors.append(f"boundary count {len(p.boundaries)} != sector count {m}")

    for i, sector in enumerate(p.sectors):
        if not sector:
            errors.append(f"empty sector {i}")
        ids = [s.id for s in sector]
        if len(set(ids)) != len(ids):
            errors.append(f"duplicate strand id in sector {i}")
        pos = [s.pos for s in sector]
        if any(not (0 <= x < 1) for x in pos):
            errors.append(f"position out of [0,1) in sector {i}")
        if len(set(pos)) != len(pos):
            errors.append(f"coinciding positions in sector {i}")
    if errors:
        return errors

    births = deaths = 0
    for i, b in enumerate(p.boundaries[:m]):
        left, right = p.positions(i), p.positions(i + 1)
        births += len(b.births)
        deaths += len(b.deaths)

        used_left: list[str] = [mt.left for mt in b.matches]
        used_right: list[str] = [mt.right for mt in b.matches]
        for mt in b.matches:
            if mt.left not in left or mt.right not in right:
                errors.append(f"unknown strand in match {mt.left}->{mt.right} at boundary {i}")
                continue
            if abs(mt.winding) >= 1:
                errors.append(f"winding {mt.winding} out of range at boundary {i}")
            if frac(left[mt.left] + mt.winding) != right[mt.right]:
                errors.append(f"winding mismatch {mt.left}->{mt.right} at boundary {i}")
        for a, c in b.deaths:
            if a not in left or c not in left or a == c:
                errors.append(f"bad death pair ({a}, {c}) at boundary {i}")
                continue
            used_left += [a, c]
            if not _adjacent(left, a, c):
                errors.append(f"non-adjacent death ({a}, {c}) at boundary {i}")
        for a, c in b.births:
            if a not in right or c not in right or a == c:
                errors.append(f"bad birth pair ({a}, {c}) at boundary {i}")
                continue
            used_right += [a, c]
            if not _adjacent(right, a, c):
                errors.append(f"non-adjacent birth ({a}, {c}) at boundary {i}")
        if sorted(used_left) != sorted(left):
            errors.append(f"left strands not covered exactly once at boundary {i}")
        if sorted(used_right) != sorted(right):
            errors.append(f"right strands not covered exactly once at boundary {i}")

    if births != deaths:
        errors.append(f"births ({births}) != deaths ({deaths})")
    return errors


def ensure_valid(p: Portrait) -> Portrait:
    errors = validate(p)
    if errors:
        logger.debug("Rejected portrait with %d sectors: %s", len(p.sectors), errors)
        raise PortraitError("Invalid portrait: " + "; ".join(errors))
    return p


def _sector(strands: Iterable[tuple[str, Fraction]]) -> tuple[Strand, ...]:
    return tuple(sorted((Strand(sid, frac(pos)) for sid, pos in strands), key=lambda s: s.pos))


def _simples(count: int, spacing: Fraction, skip: Iterable[int] = ()) -> list[tuple[str, Fraction]]:
    skip = set(skip)
    return [(f"s{i}", i * spacing) for i in range(1, count + 1) if i not in skip]


def type_I(n: int, k: int) -> Portrait:
    """
    Пересечение двух складок. Сектора S0..S3 против часовой: без складок,
    внутри A, внутри A и B, внутри B. Складка A рождается у 0, складка B
    у (n+1)/(n+k+2); от A по направлению слоя лежат n простых нитей до B.
    """
    if n < 0 or k < 0 or n + k < 1:
        raise PortraitError(f"type_I requires n + k >= 1, got ({n},{k})")
    total = n + k + 2
    eps = Fraction(1, 4 * total)
    simples = [(f"s{i}", Fraction(i, total)) for i in range(1, n + k + 2) if i != n + 1]
    fold_a = [("a0", -eps), ("a1", eps)]
    fold_b = [("b0", Fraction(n + 1, total) - eps), ("b1", Fraction(n + 1, total) + eps)]
    same = lambda ids: tuple(Match(s, s) for s in ids)  # noqa: E731
    ids_s = [s for s, _ in simples]
    sectors = (
        _sector(simples),
        _sector(simples + fold_a),
        _sector(simples + fold_a + fold_b),
        _sector(simples + fold_b),
    )
    boundaries = (
        Boundary(matches=same(ids_s), births=(("a0", "a1"),)),
        Boundary(matches=same(ids_s + ["a0", "a1"]), births=(("b0", "b1"),)),
        Boundary(matches=same(ids_s + ["b0", "b1"]), deaths=(("a0", "a1"),)),
        Boundary(matches=same(ids_s), deaths=(("b0", "b1"),)),
    )
    return Portrait(sectors, boundaries)


def _pleat_left(r: int) -> Portrait:
    # большой сектор: r простых + лист складки p у 0; в малом рождается
    # пара (u, v) над p, на выходе умирает (p, u), а v уходит обратно в p
    step = Fraction(1, r + 1)
    delta = step / 8
    simples = _simples(r, step)
    ids = [s for s, _ in simples]
    sectors = (
        _sector(simples + [("p", Fraction(0))]),
        _sector(simples + [("p", Fraction(0)), ("u", delta), ("v", 2 * delta)]),
    )
    boundaries = (
        Boundary(matches=tuple(Match(s, s) for s in ids + ["p"]), births=(("u", "v"),)),
        Boundary(
            matches=tuple(Match(s, s) for s in ids) + (Match("v", "p", -2 * delta),),
            deaths=(("p", "u"),),
        ),
    )
    return Portrait(sectors, boundaries)


def type_II(r: int, side: Side | str) -> Portrait:
    """Проекция сборки (pleat) с r простыми окружностями."""
    if r < 0:
        raise PortraitError(f"type_II requires r >= 0, got {r}")
    side = Side(side)
    base = _pleat_left(r)
    return base if side is Side.L else mirror(base)


def _fold_sheet_left(r: int) -> Portrait:
    # лист X пересекает сначала нижнюю ветвь складки, затем верхнюю
    step = Fraction(1, r + 1)
    delta = step / 8
    simples = _simples(r, step)
    ids = [s for s, _ in simples]
    keep = tuple(Match(s, s) for s in ids)
    sectors = (
        _sector(simples + [("x", -delta)]),
        _sector(simples + [("x", -delta), ("lo", Fraction(0)), ("hi", 2 * delta)]),
        _sector(simples + [("lo", -delta), ("x", Fraction(0)), ("hi", 2 * delta)]),
        _sector(simples + [("lo", -delta), ("hi", Fraction(0)), ("x", 2 * delta)]),
    )
    boundaries = (
        Boundary(matches=keep + (Match("x", "x"),), births=(("lo", "hi"),)),
        Boundary(matches=keep + (Match("x", "x", delta), Match("lo", "lo", -delta), Match("hi", "hi"))),
        Boundary(matches=keep + (Match("x", "x", 2 * delta), Match("hi", "hi", -2 * delta), Match("lo", "lo"))),
        Boundary(matches=keep + (Match("x", "x", -3 * delta),), deaths=(("lo", "hi"),)),
    )
    return Portrait(sectors, boundaries)


def type_III(r: int, side: Side | str) -> Portrait:
    """Регулярный лист пересекает складку; r простых окружностей."""
    if r < 0:
        raise PortraitError(f"type_III requires r >= 0, got {r}")
    side = Side(side)
    base = _fold_sheet_left(r)
    return base if side is Side.L else mirror(base)


def whitney(r: int) -> Portrait:
    """
    Конечная точка зонтика Уитни: пара рождается, меняется местами на ручке
    и умирает. Портрет линейно симметричен.
    """
    if r < 1:
        raise PortraitError("whitney requires r >= 1 (the fold-free sector would be empty)")
    step = Fraction(1, r + 1)
    eps = step / 8
    simples = _simples(r, step)
    keep = tuple(Match(s, s) for s, _ in simples)
    sectors = (
        _sector(simples),
        _sector(simples + [("w0", -eps), ("w1", eps)]),
        _sector(simples + [("w0", eps), ("w1", -eps)]),
    )
    boundaries = (
        Boundary(matches=keep, births=(("w0", "w1"),)),
        Boundary(matches=keep + (Match("w0", "w0", 2 * eps), Match("w1", "w1", -2 * eps))),
        Boundary(matches=keep, deaths=(("w1", "w0"),)),
    )
    return Portrait(sectors, boundaries)


def mirror(p: Portrait) -> Portrait:
    """
    Образ при линейной симметрии аннулуса: обратный циклический порядок
    секторов, рождения и смерти меняются ролями, намотки меняют знак.
    Позиции на слое сохраняются.
    """
    m = p.size
    sectors = tuple(p.sectors[(-j) % m] for j in range(m))
    boundaries = []
    for j in range(m):
        b = p.boundaries[(-j - 1) % m]
        boundaries.append(
            Boundary(
                matches=tuple(Match(mt.right, mt.left, -mt.winding) for mt in b.matches),
                births=b.deaths,
                deaths=b.births,
            )
        )
    return Portrait(sectors, tuple(boundaries))


def rotate(p: Portrait, k: int) -> Portrait:
    """Сдвиг нумерации секторов на k."""
    m = p.size
    return Portrait(
        tuple(p.sectors[(j + k) % m] for j in range(m)),
        tuple(p.boundaries[(j + k) % m] for j in range(m)),
    )


def shift(p: Portrait, t: Fraction) -> Portrait:
    """Поворот слоя на t (все позиции сдвигаются на t mod 1)."""
    return reparametrize(p, lambda x: x + t)


def reparametrize(p: Portrait, lift) -> Portrait:
    """
    Применяет возрастающий гомеоморфизм слоя, заданный поднятием lift
    (lift(x + 1) = lift(x) + 1); намотки пересчитываются через поднятие.
    """
    sectors = tuple(
        tuple(sorted((Strand(s.id, frac(lift(s.pos))) for s in sector), key=lambda s: s.pos))
        for sector in p.sectors
    )
    boundaries = []
    for i, b in enumerate(p.boundaries):
        left = p.positions(i)
        matches = tuple(
            Match(mt.left, mt.right, lift(left[mt.left] + mt.winding) - lift(left[mt.left]))
            for mt in b.matches
        )
        boundaries.append(Boundary(matches, b.births, b.deaths))
    return Portrait(sectors, tuple(boundaries))


def piecewise_linear_lift(knots: list[tuple[Fraction, Fraction]]):
    """
    Поднятие кусочно-линейного гомеоморфизма окружности по узлам
    (x_i, y_i), строго возрастающим в [0, 1), с узлом (0, 0).
    """
    points = sorted(knots)
    if not points or points[0] != (0, 0):
        points = [(Fraction(0), Fraction(0))] + points
    points = points + [(Fraction(1), Fraction(1))]
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if not (x1 > x0 and y1 > y0):
            raise PortraitError("Reparametrization knots must be strictly increasing")

    def lift(x: Fraction) -> Fraction:
        whole = x - frac(x)
        t = frac(x)
        for (x0, y0), (x1, y1) in zip(points, points[1:]):
            if x0 <= t < x1:
                return whole + y0 + (t - x0) * (y1 - y0) / (x1 - x0)
        raise AssertionError("unreachable")

    return lift


def add_simple_circle(p: Portrait, pos: Fraction) -> Portrait:
    """
    Добавляет регулярный лист на высоте pos во все сектора (намотка 0).
    Позиция не должна совпадать с существующими нитями, разрезать пары
    рождения/смерти или попадать под движение сопоставленных нитей.
    """
    pos = frac(pos)
    for i, sector in enumerate(p.sectors):
        if any(s.pos == pos for s in sector):
            raise PortraitError(f"Position {pos} is occupied in sector {i}")
    for i, b in enumerate(p.boundaries):
        left, right = p.positions(i), p.positions(i + 1)
        for positions, pairs in ((left, b.deaths), (right, b.births)):
            for a, c in pairs:
                lo, hi = pair_arc(positions, a, c)
                if cyclic_open_contains(lo, hi, pos):
                    raise PortraitError(f"Position {pos} splits the pair ({a}, {c}) at boundary {i}")
        for mt in b.matches:
            w, start = mt.winding, left[mt.left]
            if w > 0 and 0 < ccw_distance(start, pos) < w:
                raise PortraitError(f"Position {pos} is swept by {mt.left} at boundary {i}")
            if w < 0 and 0 < ccw_distance(pos, start) < -w:
                raise PortraitError(f"Position {pos} is swept by {mt.left} at boundary {i}")

    taken = {s.id for sector in p.sectors for s in sector}
    j = 1
    while f"c{j}" in taken:
        j += 1
    new_id = f"c{j}"
    sectors = tuple(
        tuple(sorted(sector + (Strand(new_id, pos),), key=lambda s: s.pos)) for sector in p.sectors
    )
    boundaries = tuple(
        Boundary(b.matches + (Match(new_id, new_id),), b.births, b.deaths) for b in p.boundaries
    )
    return Portrait(sectors, boundaries)


def canonical_form(p: Portrait) -> tuple:
    """
    Канонический ключ портрета с точностью до переименования нитей и
    циклического сдвига нумерации секторов.
    """
    m = p.size
    best = None
    for k in range(m):
        q = rotate(p, k)
        ranks = []
        for sector in q.sectors:
            ordered = sorted(sector, key=lambda s: s.pos)
            ranks.append({s.id: idx for idx, s in enumerate(ordered)})
        sectors_key = tuple(tuple(sorted(s.pos for s in sector)) for sector in q.sectors)
        bounds_key = []
        for i, b in enumerate(q.boundaries):
            lr, rr = ranks[i], ranks[(i + 1) % m]
            bounds_key.append(
                (
                    tuple(sorted((lr[mt.left], rr[mt.right], mt.winding) for mt in b.matches)),
                    tuple(sorted(tuple(sorted((rr[a], rr[c]))) for a, c in b.births)),
                    tuple(sorted(tuple(sorted((lr[a], lr[c]))) for a, c in b.deaths)),
                )
            )
        key = (sectors_key, tuple(bounds_key))
        if best is None or key < best:
            best = key
    return best


def equivalent(p: Portrait, q: Portrait) -> bool:
    return p.size == q.size and canonical_form(p) == canonical_form(q)


def is_line_symmetric(p: Portrait) -> bool:
    return equivalent(p, mirror(p))
