"""
Блинные квазисечения тривиального расслоения над S².

Складки блинов являются окружностями на плоскости; их разбиение хранится как
DCEL (вершины, полурёбра-дуги, грани). Геометрия считается в float с
запасом settings.GEOMETRY_MARGIN, всё остальное точно в дробях.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..config import settings
from ..core.circle import frac
from ..core.rng import SeededSampler, seeded_rng
from ..exceptions import DegenerateArrangement, InvariantBreach
from ..models.arrangement import (
    ArrangementDCEL,
    ArrangementSpec,
    Face,
    HalfEdge,
    Pancake,
    Section,
    SectionSample,
    Vertex,
)
from ..models.configuration import Extension, SectionAssignment
from ..models.portrait import Boundary, Match, Portrait, Strand, VertexDescriptor
from . import oracle
from .classify import classify
from .portraits import ensure_valid
from .weights import weight_of

logger = logging.getLogger(__name__)

TAU = 2 * math.pi


# Геометрия


def _circles(spec: ArrangementSpec) -> np.ndarray:
    """Массив (cx, cy, r) по блинам."""
    if not spec.pancakes:
        return np.zeros((0, 3))
    return np.array(
        [[float(p.center[0]), float(p.center[1]), float(p.radius)] for p in spec.pancakes]
    )


def _margin(circles: np.ndarray) -> float:
    scale = 1.0 if not len(circles) else max(1.0, float(np.abs(circles[:, :2]).max() + circles[:, 2].max()))
    return settings.GEOMETRY_MARGIN * scale


def _intersections(c1: np.ndarray, c2: np.ndarray) -> list[np.ndarray]:
    delta = c2[:2] - c1[:2]
    d = float(np.hypot(*delta))
    r1, r2 = c1[2], c2[2]
    if d == 0 or d >= r1 + r2 or d <= abs(r1 - r2):
        return []
    a = (r1 * r1 - r2 * r2 + d * d) / (2 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    base = c1[:2] + a * delta / d
    normal = np.array([-delta[1], delta[0]]) / d
    return [base + h * normal, base - h * normal]


def _angle(circle: np.ndarray, point: np.ndarray) -> float:
    return math.atan2(point[1] - circle[1], point[0] - circle[0]) % TAU


def _heights(spec: ArrangementSpec) -> list[tuple[str, Fraction, Fraction]]:
    """(метка, нижний край, ширина) интервалов высот на слое."""
    items = [(f"pancake {i}", frac(p.height - p.thickness), 2 * p.thickness) for i, p in enumerate(spec.pancakes)]
    items += [(f"section {i}", frac(s.height), Fraction(0)) for i, s in enumerate(spec.sections)]
    return items


def genericity_check(spec: ArrangementSpec) -> list[str]:
    """Возвращает все нарушения общности положения (пустой список, если всё в порядке)."""
    errors: list[str] = []
    if not spec.sections:
        errors.append("no section: some face would be uncovered")
    for i, p in enumerate(spec.pancakes):
        if p.radius <= 0:
            errors.append(f"pancake {i}: radius must be positive")
        if p.thickness <= 0 or 2 * p.thickness >= 1:
            errors.append(f"pancake {i}: thickness must be in (0, 1/2)")
    for i, s in enumerate(spec.sections):
        if not (0 <= s.height < 1):
            errors.append(f"section {i}: height out of [0,1)")
    for i, p in enumerate(spec.pancakes):
        if not (0 <= p.height < 1):
            errors.append(f"pancake {i}: height out of [0,1)")

    intervals = _heights(spec)
    for a in range(len(intervals)):
        for b in range(a + 1, len(intervals)):
            la, sa, wa = intervals[a]
            lb, sb, wb = intervals[b]
            # замкнутые интервалы [s, s+w] на окружности пересекаются
            if (sb - sa) % 1 <= wa or (sa - sb) % 1 <= wb:
                errors.append(f"height collision: {la} and {lb}")
    if errors:
        return errors

    circles = _circles(spec)
    margin = _margin(circles)
    n = len(circles)
    for i in range(n):
        for j in range(i + 1, n):
            d = float(np.hypot(*(circles[j, :2] - circles[i, :2])))
            r1, r2 = circles[i, 2], circles[j, 2]
            if abs(d - (r1 + r2)) < margin or abs(d - abs(r1 - r2)) < margin:
                errors.append(f"tangent/coincident circles {i} and {j}")
    if errors:
        return errors
    for i in range(n):
        for j in range(i + 1, n):
            for point in _intersections(circles[i], circles[j]):
                for k in range(n):
                    if k in (i, j):
                        continue
                    dist = float(np.hypot(*(point - circles[k, :2])))
                    if abs(dist - circles[k, 2]) < margin:
                        errors.append(f"three circles concurrent: {i}, {j}, {k}")
    return sorted(set(errors), key=errors.index)


# DCEL


def _point_on(circle: np.ndarray, angle: float) -> np.ndarray:
    return circle[:2] + circle[2] * np.array([math.cos(angle), math.sin(angle)])


def _signed_area(half_edges: list[HalfEdge], cycle: list[int], circles: np.ndarray) -> float:
    """Ориентированная площадь цикла из дуг (формула Грина, точно для дуг)."""
    total = 0.0
    for hid in cycle:
        h = half_edges[hid]
        cx, cy, r = circles[h.circle]
        t0, t1 = h.start, h.start + h.sweep
        total += cx * r * (math.sin(t1) - math.sin(t0))
        total -= cy * r * (math.cos(t1) - math.cos(t0))
        total += r * r * h.sweep
    return total / 2


def _on_arc(h: HalfEdge, angle: float) -> bool:
    offset = (angle - h.start) % TAU if h.ccw else (h.start - angle) % TAU
    return offset < abs(h.sweep)


def _winding(point: np.ndarray, half_edges: list[HalfEdge], cycle: list[int], circles: np.ndarray) -> int:
    """Число оборотов цикла вокруг точки: горизонтальный луч вправо."""
    px, py = point
    total = 0
    for hid in cycle:
        h = half_edges[hid]
        cx, cy, r = circles[h.circle]
        dy = py - cy
        if abs(dy) >= r:
            continue
        dx = math.sqrt(r * r - dy * dy)
        for x in (cx + dx, cx - dx):
            if x <= px:
                continue
            angle = math.atan2(dy, x - cx) % TAU
            if not _on_arc(h, angle):
                continue
            # знак dy/dt на дуге
            direction = math.cos(angle) * (1 if h.ccw else -1)
            total += 1 if direction > 0 else -1
    return total


def build_dcel(spec: ArrangementSpec) -> ArrangementDCEL:
    """
    Строит разбиение плоскости окружностями складок.
    Вершины: точки пересечения пар окружностей. Рёбра: дуги между
    соседними вершинами. Грани: связные области, внешняя грань имеет номер 0.
    """
    violations = genericity_check(spec)
    if violations:
        raise DegenerateArrangement("Degenerate arrangement: " + "; ".join(violations))

    circles = _circles(spec)
    n = len(circles)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    vertices: list[Vertex] = []
    on_circle: dict[int, list[tuple[float, int]]] = {i: [] for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            for point in _intersections(circles[i], circles[j]):
                vid = len(vertices)
                vertices.append(Vertex(vid, (float(point[0]), float(point[1])), (i, j)))
                on_circle[i].append((_angle(circles[i], point), vid))
                on_circle[j].append((_angle(circles[j], point), vid))
                parent[find(i)] = find(j)

    half_edges: list[HalfEdge] = []
    for c in range(n):
        marks = sorted(on_circle[c])
        if not marks:
            ccw = HalfEdge(len(half_edges), c, None, None, 0.0, TAU)
            cw = HalfEdge(len(half_edges) + 1, c, None, None, TAU, -TAU)
            ccw.twin, cw.twin = cw.id, ccw.id
            ccw.next, cw.next = ccw.id, cw.id
            half_edges += [ccw, cw]
            continue
        for idx, (angle, vid) in enumerate(marks):
            next_angle, next_vid = marks[(idx + 1) % len(marks)]
            sweep = (next_angle - angle) % TAU or TAU
            ccw = HalfEdge(len(half_edges), c, vid, next_vid, angle, sweep)
            cw = HalfEdge(len(half_edges) + 1, c, next_vid, vid, angle + sweep, -sweep)
            ccw.twin, cw.twin = cw.id, ccw.id
            half_edges += [ccw, cw]
            vertices[vid].outgoing.append(ccw.id)
            vertices[next_vid].outgoing.append(cw.id)

    def direction(h: HalfEdge) -> float:
        return (h.start + (math.pi / 2 if h.ccw else -math.pi / 2)) % TAU

    for v in vertices:
        v.outgoing.sort(key=lambda hid: direction(half_edges[hid]))
        if len(v.outgoing) != 4:
            raise InvariantBreach(f"Vertex {v.id} has {len(v.outgoing)} outgoing arcs")
    for h in half_edges:
        if h.closed:
            continue
        around = vertices[h.target].outgoing
        # следующее полуребро: ближайшее по часовой от обратного
        h.next = around[(around.index(h.twin) - 1) % len(around)]

    cycles: list[list[int]] = []
    seen: set[int] = set()
    for h in half_edges:
        if h.id in seen:
            continue
        cycle = []
        cur = h.id
        while cur not in seen:
            seen.add(cur)
            cycle.append(cur)
            cur = half_edges[cur].next
        cycles.append(cycle)

    faces = [Face(0, frozenset(), outer=True)]
    areas = [_signed_area(half_edges, cyc, circles) for cyc in cycles]
    positive = [k for k, a in enumerate(areas) if a > 0]
    face_of_cycle: dict[int, int] = {}
    for k in positive:
        h = half_edges[cycles[k][0]]
        mid = _point_on(circles[h.circle], h.start + h.sweep / 2)
        covering = {h.circle} if h.ccw else set()
        for d in range(n):
            if d != h.circle and float(np.hypot(*(mid - circles[d, :2]))) < circles[d, 2]:
                covering.add(d)
        face_of_cycle[k] = len(faces)
        faces.append(Face(len(faces), frozenset(covering), [cycles[k][0]]))

    for k, area in enumerate(areas):
        if area > 0:
            continue
        h = half_edges[cycles[k][0]]
        component = find(h.circle)
        mid = _point_on(circles[h.circle], h.start + h.sweep / 2)
        best, best_area = 0, math.inf
        for q in positive:
            if find(half_edges[cycles[q][0]].circle) == component:
                continue
            if areas[q] < best_area and _winding(mid, half_edges, cycles[q], circles) != 0:
                best, best_area = face_of_cycle[q], areas[q]
        face_of_cycle[k] = best
        faces[best].cycles.append(cycles[k][0])

    for k, cycle in enumerate(cycles):
        for hid in cycle:
            half_edges[hid].face = face_of_cycle[k]

    components = len({find(c) for c in range(n)})
    dcel = ArrangementDCEL(spec, vertices, half_edges, faces, components)
    empty = [f.id for f in faces if dcel.sheet_count(f.id) < 1]
    if empty:
        raise InvariantBreach(f"Faces without sheets: {empty}")
    v_count, e_count, f_count = dcel.counts()
    if v_count - e_count + f_count != 1 + components:
        raise InvariantBreach(
            f"Euler relation fails: V={v_count} E={e_count} F={f_count} C={components}"
        )
    logger.debug("DCEL built: V=%d E=%d F=%d C=%d", v_count, e_count, f_count, components)
    return dcel


# Портреты вершин


def face_strands(spec: ArrangementSpec, covering: frozenset[int]) -> tuple[Strand, ...]:
    """Листы над гранью: по одному на сечение, по два на накрывающий блин."""
    strands = [Strand(f"s{i}", frac(s.height)) for i, s in enumerate(spec.sections)]
    for c in sorted(covering):
        p = spec.pancakes[c]
        strands.append(Strand(f"p{c}-", frac(p.height - p.thickness)))
        strands.append(Strand(f"p{c}+", frac(p.height + p.thickness)))
    return tuple(sorted(strands, key=lambda s: s.pos))


def local_portrait(spec: ArrangementSpec, vertex: int, dcel: ArrangementDCEL) -> Portrait:
    """
    Портрет вершины: сектор j есть грань слева от j-го исходящего полуребра
    (против часовой), граница j есть дуга (j+1)-го полуребра.
    """
    v = dcel.vertices[vertex]
    out = v.outgoing
    faces = [dcel.half_edges[h].face for h in out]
    sectors = tuple(face_strands(spec, dcel.faces[f].covering) for f in faces)
    boundaries = []
    for j in range(len(out)):
        circle = dcel.half_edges[out[(j + 1) % len(out)]].circle
        before = dcel.faces[faces[j]].covering
        after = dcel.faces[faces[(j + 1) % len(out)]].covering
        if before ^ after != {circle}:
            raise InvariantBreach(f"Vertex {vertex}: sectors {j} and {j + 1} do not differ by disk {circle}")
        pair = (f"p{circle}-", f"p{circle}+")
        kept = tuple(Match(s.id, s.id) for s in sectors[j] if s.id not in pair)
        if circle in after:
            boundaries.append(Boundary(matches=kept, births=(pair,)))
        else:
            boundaries.append(Boundary(matches=kept, deaths=(pair,)))
    return ensure_valid(Portrait(sectors, tuple(boundaries)))


@dataclass(frozen=True)
class VertexRow:
    vertex: int
    point: tuple[float, float]
    circles: tuple[int, int]
    descriptor: VertexDescriptor
    weight: Fraction


def vertex_table(spec: ArrangementSpec, dcel: ArrangementDCEL) -> list[VertexRow]:
    rows = []
    for v in dcel.vertices:
        descriptor = classify(local_portrait(spec, v.id, dcel))
        rows.append(VertexRow(v.id, v.point, v.circles, descriptor, weight_of(descriptor)))
    return rows


def euler_local_formula(spec: ArrangementSpec, dcel: ArrangementDCEL | None = None) -> Fraction:
    """Сумма весов классифицированных вершин."""
    dcel = dcel or build_dcel(spec)
    return sum((row.weight for row in vertex_table(spec, dcel)), Fraction(0))


def paired_vertices(dcel: ArrangementDCEL) -> dict[tuple[int, int], list[int]]:
    """Две вершины каждой пары пересекающихся окружностей."""
    pairs: dict[tuple[int, int], list[int]] = {}
    for v in dcel.vertices:
        pairs.setdefault(v.circles, []).append(v.id)
    return pairs


def same_cover(dcel: ArrangementDCEL, a: int, b: int) -> bool:
    """Обе вершины пары накрыты одним и тем же набором прочих блинов."""

    def others(vid: int) -> frozenset[int]:
        v = dcel.vertices[vid]
        faces = [dcel.faces[dcel.half_edges[h].face].covering for h in v.outgoing]
        return frozenset.intersection(*faces) - set(v.circles)

    return others(a) == others(b)


# Случайные сечения


def sample_section(
    spec: ArrangementSpec, dcel: ArrangementDCEL, seed: int | SeededSampler
) -> SectionSample:
    """
    Равновероятный выбор листа над каждой гранью и честная монетка на
    каждом ребре, где выбранные листы по разные стороны различны.
    Флаг ребра относится к переходу из грани справа от канонического
    полуребра в грань слева от него.
    """
    rng = seed if isinstance(seed, SeededSampler) else seeded_rng(seed)
    chosen: dict[int, str] = {}
    for face in dcel.faces:
        strands = face_strands(spec, face.covering)
        chosen[face.id] = strands[rng.randbelow(dcel.sheet_count(face.id))].id
    flags: dict[int, Extension] = {}
    for eid in dcel.edges:
        h = dcel.half_edges[eid]
        if chosen[h.face] != chosen[dcel.half_edges[h.twin].face]:
            flags[eid] = Extension.CCW if rng.coin() else Extension.CW
    return SectionSample(chosen, flags)


class VertexEvaluator:
    """Портреты и таблицы рёбер вершин, посчитанные один раз на разбиение."""

    def __init__(self, spec: ArrangementSpec, dcel: ArrangementDCEL):
        self.spec = spec
        self.dcel = dcel
        self.portraits = {v.id: local_portrait(spec, v.id, dcel) for v in dcel.vertices}
        self.tables = {vid: oracle.edge_tables(p) for vid, p in self.portraits.items()}

    def index(self, vertex: int, sample: SectionSample) -> int:
        v = self.dcel.vertices[vertex]
        out = v.outgoing
        assignment = SectionAssignment(tuple(sample.faces[self.dcel.half_edges[h].face] for h in out))
        ext = {}
        for j, table in enumerate(self.tables[vertex]):
            jump, _ = table[(assignment[j], assignment[j + 1])]
            if not jump:
                continue
            crossing = out[(j + 1) % len(out)]
            flag = sample.flags.get(self.dcel.canonical(crossing))
            if flag is None:
                raise InvariantBreach(f"Vertex {vertex}: jump without an edge flag at boundary {j}")
            if not self.dcel.half_edges[crossing].ccw:
                flag = Extension.CW if flag is Extension.CCW else Extension.CCW
            ext[j] = flag
        report = oracle.configuration_degree(self.portraits[vertex], assignment, ext, self.tables[vertex])
        return report.degree

    def indices(self, sample: SectionSample) -> dict[int, int]:
        return {v.id: self.index(v.id, sample) for v in self.dcel.vertices}


def index_sum(spec: ArrangementSpec, dcel: ArrangementDCEL, sample: SectionSample) -> int:
    """Сумма индексов сечения по всем вершинам (для тривиального расслоения равна 0)."""
    return sum(VertexEvaluator(spec, dcel).indices(sample).values())


# Случайные разбиения общего положения


def random_arrangement(seed: int, max_pancakes: int = 6, max_sections: int = 4) -> ArrangementSpec:
    """
    Случайное разбиение: центры и радиусы на сетке с шагом 1/10,
    высоты в центрах различных слотов слоя. Повторяет попытки, пока
    не выполнится общность положения.
    """
    rng = seeded_rng(seed)
    for attempt in range(100):
        n_pancakes = 1 + rng.randbelow(max_pancakes)
        n_sections = 1 + rng.randbelow(max_sections)
        slots = list(range(n_pancakes + n_sections))
        for i in range(len(slots) - 1, 0, -1):
            j = rng.randbelow(i + 1)
            slots[i], slots[j] = slots[j], slots[i]
        width = Fraction(1, len(slots))
        pancakes = tuple(
            Pancake(
                center=(Fraction(rng.randbelow(41) - 20, 10), Fraction(rng.randbelow(41) - 20, 10)),
                radius=Fraction(5 + rng.randbelow(20), 10),
                height=(slots[i] + Fraction(1, 2)) * width,
                thickness=width / 4,
            )
            for i in range(n_pancakes)
        )
        sections = tuple(
            Section(height=(slots[n_pancakes + i] + Fraction(1, 2)) * width) for i in range(n_sections)
        )
        spec = ArrangementSpec(pancakes, sections)
        if not genericity_check(spec):
            logger.debug("random_arrangement(%d): generic after %d attempts", seed, attempt + 1)
            return spec
    raise DegenerateArrangement(f"No generic arrangement found for seed {seed}")
