"""
Детерминированные SVG-рисунки портретов и разбиений.
Координаты округляются до 6 знаков только для вывода.
"""
import math
import xml.etree.ElementTree as ET

from ..config import settings
from ..core.circle import arc_midpoint
from ..core.rational import format_rational
from ..models.arrangement import ArrangementDCEL, ArrangementSpec
from ..models.portrait import Portrait
from .arrangement import build_dcel, vertex_table
from .portraits import pair_arc

SVG_NS = "http://www.w3.org/2000/svg"


def _f(x: float) -> str:
    text = f"{x:.6f}"
    return "0.000000" if text == "-0.000000" else text


def _canvas(size: int) -> ET.Element:
    return ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "width": str(size),
            "height": str(size),
            "viewBox": f"0 0 {size} {size}",
        },
    )


def _serialize(root: ET.Element) -> str:
    return ET.tostring(root, encoding="unicode") + "\n"


def render_portrait(p: Portrait, size: int | None = None) -> str:
    """
    Кольцо портрета: сектора по углу, позиция на слое по радиусу
    (от внешней окружности к внутренней). Складки рисуются петлями на границах.
    """
    size = size or settings.SVG_SIZE
    cx = cy = size / 2
    inner, outer = size * 0.18, size * 0.46
    m = p.size
    span = 2 * math.pi / m
    gap = span * 0.08

    def point(angle: float, pos) -> tuple[float, float]:
        rho = outer - float(pos) * (outer - inner)
        return cx + rho * math.cos(angle), cy - rho * math.sin(angle)

    root = _canvas(size)
    ET.SubElement(root, "circle", {"cx": _f(cx), "cy": _f(cy), "r": _f(outer), "fill": "none", "stroke": "#bbbbbb"})
    ET.SubElement(root, "circle", {"cx": _f(cx), "cy": _f(cy), "r": _f(inner), "fill": "none", "stroke": "#bbbbbb"})

    for j in range(m):
        a = j * span
        x0, y0 = point(a, 0)
        x1, y1 = point(a, 1)
        ET.SubElement(
            root,
            "line",
            {"x1": _f(x0), "y1": _f(y0), "x2": _f(x1), "y2": _f(y1), "stroke": "#dddddd", "stroke-dasharray": "4 3"},
        )

    strands = ET.SubElement(root, "g", {"stroke": "#1f4e79", "fill": "none", "stroke-width": "2"})
    for j, sector in enumerate(p.sectors):
        a0, a1 = j * span + gap, (j + 1) * span - gap
        for s in sector:
            x0, y0 = point(a0, s.pos)
            x1, y1 = point(a1, s.pos)
            rho = outer - float(s.pos) * (outer - inner)
            ET.SubElement(
                strands,
                "path",
                {"d": f"M {_f(x0)} {_f(y0)} A {_f(rho)} {_f(rho)} 0 0 0 {_f(x1)} {_f(y1)}", "data-strand": s.id},
            )

    events = ET.SubElement(root, "g", {"stroke": "#c0392b", "fill": "none", "stroke-width": "2"})
    for i, b in enumerate(p.boundaries):
        left, right = p.positions(i), p.positions(i + 1)
        a_end, a_start = (i + 1) * span - gap, (i + 1) * span + gap
        edge = (i + 1) * span
        for mt in b.matches:
            x0, y0 = point(a_end, left[mt.left])
            x1, y1 = point(a_start, right[mt.right])
            ET.SubElement(events, "line", {"x1": _f(x0), "y1": _f(y0), "x2": _f(x1), "y2": _f(y1), "stroke": "#1f4e79"})
        for pairs, positions, angle in ((b.deaths, left, a_end), (b.births, right, a_start)):
            for u, w in pairs:
                x0, y0 = point(angle, positions[u])
                x1, y1 = point(angle, positions[w])
                qx, qy = point(edge, arc_midpoint(*pair_arc(positions, u, w)))
                ET.SubElement(events, "path", {"d": f"M {_f(x0)} {_f(y0)} Q {_f(qx)} {_f(qy)} {_f(x1)} {_f(y1)}"})
    return _serialize(root)


def render_arrangement(
    spec: ArrangementSpec, dcel: ArrangementDCEL | None = None, size: int | None = None
) -> str:
    """Окружности складок, вершины и подписи «дескриптор, вес»."""
    size = size or settings.SVG_SIZE
    dcel = dcel or build_dcel(spec)
    root = _canvas(size)
    if not spec.pancakes:
        return _serialize(root)

    xs = [float(p.center[0]) for p in spec.pancakes]
    ys = [float(p.center[1]) for p in spec.pancakes]
    rs = [float(p.radius) for p in spec.pancakes]
    lo_x = min(x - r for x, r in zip(xs, rs))
    hi_x = max(x + r for x, r in zip(xs, rs))
    lo_y = min(y - r for y, r in zip(ys, rs))
    hi_y = max(y + r for y, r in zip(ys, rs))
    pad = size * 0.08
    scale = (size - 2 * pad) / max(hi_x - lo_x, hi_y - lo_y)

    def to_canvas(x: float, y: float) -> tuple[float, float]:
        return pad + (x - lo_x) * scale, size - pad - (y - lo_y) * scale

    circles = ET.SubElement(root, "g", {"fill": "none", "stroke": "#1f4e79", "stroke-width": "1.5"})
    for i, (x, y, r) in enumerate(zip(xs, ys, rs)):
        px, py = to_canvas(x, y)
        ET.SubElement(
            circles,
            "circle",
            {
                "cx": _f(px),
                "cy": _f(py),
                "r": _f(r * scale),
                "data-height": format_rational(spec.pancakes[i].height),
            },
        )

    marks = ET.SubElement(root, "g", {"font-family": "monospace", "font-size": "10"})
    for row in vertex_table(spec, dcel):
        px, py = to_canvas(*row.point)
        ET.SubElement(marks, "circle", {"cx": _f(px), "cy": _f(py), "r": "3", "fill": "#c0392b"})
        label = ET.SubElement(marks, "text", {"x": _f(px + 4), "y": _f(py - 4)})
        label.text = f"{row.descriptor} {format_rational(row.weight)}"
    return _serialize(root)
