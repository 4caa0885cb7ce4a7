import math
import re
from collections import Counter
from fractions import Fraction

import pytest

from quasisection_euler.engine.arrangement import (
    VertexEvaluator,
    build_dcel,
    euler_local_formula,
    face_strands,
    genericity_check,
    index_sum,
    local_portrait,
    paired_vertices,
    random_arrangement,
    same_cover,
    sample_section,
    vertex_table,
)
from quasisection_euler.engine.classify import classify
from quasisection_euler.engine.formula import triple_vertices
from quasisection_euler.engine.render import render_arrangement, render_portrait
from quasisection_euler.engine import portraits
from quasisection_euler.core.rng import seeded_rng
from quasisection_euler.exceptions import DegenerateArrangement
from quasisection_euler.models.arrangement import ArrangementSpec, Pancake, Section
from quasisection_euler.models.portrait import TypeI


def pancake(x, y, r, h, t=Fraction(1, 32)):
    return Pancake((Fraction(x), Fraction(y)), Fraction(r), Fraction(h), t)


def test_two_crossing_pancakes(two_pancakes):
    dcel = build_dcel(two_pancakes)
    assert dcel.counts() == (2, 4, 4)
    assert dcel.components == 1
    assert sorted(len(f.covering) for f in dcel.faces) == [0, 1, 1, 2]
    rows = vertex_table(two_pancakes, dcel)
    assert {row.descriptor for row in rows} == {TypeI(1, 0), TypeI(0, 1)}
    assert euler_local_formula(two_pancakes, dcel) == 0


def test_vertex_portrait_sectors(two_pancakes):
    dcel = build_dcel(two_pancakes)
    p = local_portrait(two_pancakes, 0, dcel)
    assert sorted(p.sector_sizes()) == [1, 3, 3, 5]
    assert sum(len(b.births) for b in p.boundaries) == 2


def test_single_pancake_has_closed_edge():
    spec = ArrangementSpec((pancake(0, 0, 1, Fraction(1, 4)),), (Section(Fraction(3, 4)),))
    dcel = build_dcel(spec)
    assert dcel.counts() == (0, 0, 2)
    assert dcel.faces[1].covering == frozenset({0})
    assert euler_local_formula(spec, dcel) == 0


def test_nested_pancakes_are_separate_components():
    spec = ArrangementSpec(
        (pancake(0, 0, 2, Fraction(1, 4)), pancake(0, 0, 1, Fraction(3, 4))),
        (Section(Fraction(1, 2)),),
    )
    dcel = build_dcel(spec)
    assert dcel.components == 2
    assert dcel.counts() == (0, 0, 3)
    assert sorted(sorted(f.covering) for f in dcel.faces) == [[], [0], [0, 1]]


def test_face_strands_ordered_by_height(two_pancakes):
    strands = face_strands(two_pancakes, frozenset({0, 1}))
    assert [s.id for s in strands] == ["p0-", "p0+", "s0", "p1-", "p1+"]
    assert strands[0].pos == Fraction(3, 16)


def test_genericity_violations():
    tangent = ArrangementSpec(
        (pancake(0, 0, 1, Fraction(1, 4)), pancake(2, 0, 1, Fraction(3, 4))), (Section(Fraction(1, 2)),)
    )
    assert genericity_check(tangent) == ["tangent/coincident circles 0 and 1"]
    with pytest.raises(DegenerateArrangement):
        build_dcel(tangent)

    same_height = ArrangementSpec(
        (pancake(0, 0, 1, Fraction(1, 4)), pancake(1, 0, 1, Fraction(1, 4))), (Section(Fraction(1, 2)),)
    )
    assert "height collision: pancake 0 and pancake 1" in genericity_check(same_height)

    no_section = ArrangementSpec((pancake(0, 0, 1, Fraction(1, 4)),), ())
    assert any(e.startswith("no section") for e in genericity_check(no_section))


def test_three_concurrent_circles_rejected():
    # (0, 0) лежит на всех трёх окружностях
    spec = ArrangementSpec(
        (
            pancake(Fraction(3, 5), Fraction(4, 5), 1, Fraction(1, 8)),
            pancake(Fraction(-3, 5), Fraction(4, 5), 1, Fraction(3, 8)),
            pancake(0, -1, 1, Fraction(5, 8)),
        ),
        (Section(Fraction(7, 8)),),
    )
    assert "three circles concurrent: 0, 1, 2" in genericity_check(spec)


def test_venn_arrangement(venn_pancakes):
    dcel = build_dcel(venn_pancakes)
    v, e, f = dcel.counts()
    assert v == 12
    assert v - e + f == 2
    assert euler_local_formula(venn_pancakes, dcel) == 0


def _gap_sections(lo, hi, m):
    return [Section((lo + (hi - lo) * Fraction(2 * i + 1, 2 * m)) % 1) for i in range(m)]


@pytest.mark.parametrize("a,b,c", [(0, 0, 1), (1, 0, 0), (0, 1, 1), (1, 2, 0), (2, 1, 1)])
def test_three_crossing_pancakes_give_triple_vertices(a, b, c):
    # c листов между блинами 0 и 1, a между 1 и 2, b между 2 и 0 (через 0)
    h0, h1, h2 = Fraction(1, 10), Fraction(4, 10), Fraction(7, 10)
    t = Fraction(1, 64)
    sections = _gap_sections(h0, h1, c) + _gap_sections(h1, h2, a) + _gap_sections(h2, h0 + 1, b)
    spec = ArrangementSpec(
        (pancake(0, 0, 1, h0, t), pancake(1, 0, 1, h1, t), pancake(Fraction(1, 2), Fraction(4, 5), 1, h2, t)),
        tuple(sections),
    )
    assert genericity_check(spec) == []
    dcel = build_dcel(spec)
    assert dcel.counts()[0] == 6

    extracted = Counter(row.descriptor for row in vertex_table(spec, dcel))
    expected = Counter(triple_vertices(a, b, c))
    swapped = Counter(TypeI(d.k, d.n) for d in triple_vertices(a, b, c))
    assert extracted in (expected, swapped)
    assert euler_local_formula(spec, dcel) == 0


@pytest.mark.parametrize("fixture", ["two_pancakes", "venn_pancakes"])
def test_sampled_sections_have_zero_index_sum(fixture, request):
    spec = request.getfixturevalue(fixture)
    dcel = build_dcel(spec)
    evaluator = VertexEvaluator(spec, dcel)
    rng = seeded_rng(11)
    for _ in range(50):
        assert sum(evaluator.indices(sample_section(spec, dcel, rng)).values()) == 0


def test_sheet_counts_and_uniform_face_choice(two_pancakes):
    dcel = build_dcel(two_pancakes)
    assert sorted(dcel.sheet_count(f.id) for f in dcel.faces) == [1, 3, 3, 5]

    face = next(f for f in dcel.faces if len(f.covering) == 1)
    rng = seeded_rng(2)
    draws = Counter(sample_section(two_pancakes, dcel, rng).faces[face.id] for _ in range(10_000))
    assert len(draws) == 3
    assert all(abs(n / 10_000 - 1 / 3) < 0.05 for n in draws.values())


def test_sample_is_reproducible(two_pancakes):
    dcel = build_dcel(two_pancakes)
    first = sample_section(two_pancakes, dcel, 5)
    second = sample_section(two_pancakes, dcel, 5)
    assert first == second
    assert index_sum(two_pancakes, dcel, first) == 0


@pytest.mark.parametrize("seed", range(100))
def test_random_arrangements(seed):
    spec = random_arrangement(seed)
    assert genericity_check(spec) == []
    dcel = build_dcel(spec)
    assert euler_local_formula(spec, dcel) == 0

    rows = {row.vertex: row.descriptor for row in vertex_table(spec, dcel)}
    for (a, b) in paired_vertices(dcel).values():
        assert isinstance(rows[a], TypeI)
        if same_cover(dcel, a, b):
            assert rows[b] == TypeI(rows[a].k, rows[a].n)

    evaluator = VertexEvaluator(spec, dcel)
    rng = seeded_rng(seed)
    for _ in range(50):
        assert sum(evaluator.indices(sample_section(spec, dcel, rng)).values()) == 0


def test_random_arrangement_is_deterministic():
    assert random_arrangement(3) == random_arrangement(3)


def test_vertex_portraits_classify_like_generators(two_pancakes):
    dcel = build_dcel(two_pancakes)
    for v in dcel.vertices:
        p = local_portrait(two_pancakes, v.id, dcel)
        d = classify(p)
        assert portraits.validate(p) == []
        assert d in (TypeI(1, 0), TypeI(0, 1))


def test_render_is_deterministic(two_pancakes):
    svg = render_arrangement(two_pancakes)
    assert svg == render_arrangement(two_pancakes)
    assert svg.startswith("<svg")
    assert "I(1,0) 4/15" in svg and "I(0,1) -4/15" in svg

    picture = render_portrait(portraits.type_I(2, 0), size=200)
    assert 'width="200"' in picture
    assert picture.count("data-strand") == 2 + 4 + 6 + 4


def test_fold_loops_bend_along_their_free_arc():
    # складка A типа I рождается у 0: петля прижата к внешней окружности
    svg = render_portrait(portraits.type_I(2, 0), size=400)
    controls = re.findall(r"Q (-?[\d.]+) (-?[\d.]+)", svg)
    radii = sorted(round(math.hypot(float(x) - 200, float(y) - 200)) for x, y in controls)
    assert radii == [100, 100, 184, 184]
