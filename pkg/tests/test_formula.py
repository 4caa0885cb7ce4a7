from collections import Counter
from fractions import Fraction

import pytest

from quasisection_euler.engine.formula import (
    ANCHORS,
    FAMILIES,
    GALLERY,
    check_gallery,
    closed_forms,
    errata,
    euler_of_summary,
    gallery,
    generate_constraints,
    pancake_triple_euler,
    printed_curled,
    printed_fs_reduce,
    printed_triple,
    sector_pair_type_I,
    solve_uniqueness,
    triple_vertices,
    unknowns,
    weight_residual,
)
from quasisection_euler.engine.oracle import expected_index
from quasisection_euler.engine import portraits
from quasisection_euler.engine.weights import weight_of
from quasisection_euler.exceptions import QuasisectionError, UnknownGalleryEntry
from quasisection_euler.models.portrait import Side, TypeI, TypeII, TypeIII
from quasisection_euler.models.summary import QuasisectionSummary

R, L = Side.R, Side.L


def test_four_pancakes():
    s = gallery("four_pancakes")
    assert s.vertex_count == 12
    assert euler_of_summary(s) == 2
    assert pancake_triple_euler(*s.triples) == 2


@pytest.mark.parametrize("e", [1, 2, 3])
def test_crossing_pancakes_A(e):
    assert euler_of_summary(gallery("crossing_pancakes_A", e=e)) == e


@pytest.mark.parametrize("n", [1, 2, 3])
def test_crossing_pancakes_B(n):
    assert euler_of_summary(gallery("crossing_pancakes_B", n=n)) == 0


@pytest.mark.parametrize("N", [2, 3, 4])
def test_curled_pancake(N):
    s = gallery("curled_pancake", N=N)
    assert euler_of_summary(s) == 0
    if N == 2:
        assert s.multiset() == Counter({TypeII(2, R): 2, TypeI(0, 1): 1})


@pytest.mark.parametrize("m", [1, 2])
def test_boy_plus_sections(m):
    s = gallery("boy_plus_sections", m=m)
    assert euler_of_summary(s) == 0
    assert s.declared_degree == m


@pytest.mark.parametrize("r", [0, 2, 5])
def test_wrinkle(r):
    assert euler_of_summary(gallery("wrinkle", r=r)) == 0


def test_every_gallery_entry_checks_out():
    results = check_gallery()
    assert results
    assert all(r.ok for r in results)
    assert {r.summary.name for r in results} == set(GALLERY)


def test_gallery_errors():
    with pytest.raises(UnknownGalleryEntry):
        gallery("five_pancakes")
    with pytest.raises(QuasisectionError):
        gallery("curled_pancake", N=1)
    with pytest.raises(QuasisectionError):
        gallery("four_pancakes", n=3)


def test_summary_canonical_order():
    s = QuasisectionSummary.from_counts(
        "mixed", Counter({TypeIII(1, R): 1, TypeI(2, 0): 2, TypeII(0, L): 1}), base="S2", declared_euler=0
    )
    assert [d for d, _ in s.vertices] == [TypeI(2, 0), TypeII(0, L), TypeIII(1, R)]


@pytest.mark.parametrize("abc", [(0, 0, 1), (1, 0, 1), (2, 1, 0), (1, 1, 1)])
def test_triple_pancakes_agree_with_oracle(abc):
    # веса троек из оракула, а не из формулы
    total = sum(expected_index(portraits.type_I(d.n, d.k)) for d in triple_vertices(*abc))
    assert total == 0


def test_unknowns_at_cutoff_six():
    names = unknowns(6)
    assert len(names) == 27 + 14 + 14
    assert len(set(names)) == len(names)
    assert closed_forms(6)[TypeI(2, 0)] == Fraction(1, 6)


def test_generated_equations_annihilate_weights():
    system = generate_constraints(6)
    assert system.equations
    values = {d: weight_of(d) for d in system.unknowns}
    assert all(eq.residual(values) == 0 for eq in system.equations)
    tags = {eq.tag.split("(")[0] for eq in system.equations}
    assert tags == set(FAMILIES) | set(ANCHORS)


def test_cutoff_must_be_at_least_four():
    with pytest.raises(QuasisectionError):
        generate_constraints(3)


def test_unknown_family_rejected():
    with pytest.raises(QuasisectionError):
        generate_constraints(6, families=["NOPE"])


def test_uniqueness_at_cutoff_six():
    report = solve_uniqueness(6)
    assert report.kernel_dim == 0
    assert report.unique
    assert report.solution == {d: weight_of(d) for d in unknowns(6)}
    assert report.corrections


def test_without_anchor_solution_is_underdetermined():
    report = solve_uniqueness(6, FAMILIES, [])
    assert report.kernel_dim >= 1
    assert not report.mismatches
    for d in report.determined:
        assert report.solution[d] == weight_of(d)


def test_base_family_alone_is_underdetermined():
    report = solve_uniqueness(6, ["BASE0"], ANCHORS)
    assert report.kernel_dim > 0
    assert not report.unique
    assert report.solution[TypeI(2, 0)] == Fraction(1, 6)


def test_printed_equations_are_not_annihilated():
    assert weight_residual(printed_triple(0, 0, 1)) != 0
    assert weight_residual(printed_fs_reduce(1)) != 0
    assert weight_residual(printed_curled()) != 0
    assert weight_residual(Counter(triple_vertices(0, 0, 1))) == 0
    assert weight_residual({TypeI(1, 0): 2, TypeIII(2, L): 4}) == 0


def test_sector_pair_sum_disagrees_with_oracle():
    assert sector_pair_type_I(2, 0) == Fraction(1, 3)
    assert expected_index(portraits.type_I(2, 0)) == Fraction(1, 6)


def test_errata_report():
    found = {e.tag: e for e in errata()}
    assert set(found) == {"TRIPLE(a=0,b=0,c=1)", "FS_REDUCE(n=1)", "CURLED(capped)", "TYPE_I_INNER(n=2,k=0)"}
    assert all(e.printed != 0 and e.corrected == 0 for e in found.values())
