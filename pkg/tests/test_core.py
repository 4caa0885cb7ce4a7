from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasisection_euler.core.circle import arc_midpoint, ccw_distance, cyclic_open_contains, frac, signed_lift
from quasisection_euler.core.linalg import LinearSystem, solve_exact
from quasisection_euler.core.rational import format_rational, parse_rational
from quasisection_euler.core.rng import seeded_rng
from quasisection_euler.exceptions import QuasisectionError, RationalParseError

rationals = st.fractions(max_denominator=60)


def test_parse_and_format():
    assert parse_rational("1/4") == Fraction(1, 4)
    assert parse_rational("-2/3") == Fraction(-2, 3)
    assert parse_rational("−2/3") == Fraction(-2, 3)
    assert parse_rational("6/8") == Fraction(3, 4)
    assert parse_rational("5") == 5
    assert format_rational(Fraction(3, 1)) == "3"
    assert format_rational(Fraction(-4, 15)) == "-4/15"


@pytest.mark.parametrize("text", ["1/0", "a/b", "", "1.5", "1/-2", "--1"])
def test_parse_rejects_malformed(text):
    with pytest.raises(RationalParseError):
        parse_rational(text)


@given(rationals)
def test_format_parse_inverse(x):
    assert parse_rational(format_rational(x)) == x


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@given(rationals)
def test_frac_periodic(x):
    assert frac(x + 1) == frac(x)
    assert 0 <= frac(x) < 1


@given(rationals, rationals)
def test_ccw_distance_sum(a, b):
    total = ccw_distance(a, b) + ccw_distance(b, a)
    assert total in (0, 1)
    assert (total == 0) == (frac(a) == frac(b))


def test_ccw_distance_examples():
    assert ccw_distance(Fraction(1, 4), Fraction(3, 4)) == Fraction(1, 2)
    assert ccw_distance(Fraction(3, 4), Fraction(1, 4)) == Fraction(1, 2)
    assert ccw_distance(Fraction(1, 3), Fraction(1, 3)) == 0


def test_cyclic_open_contains():
    assert cyclic_open_contains(Fraction(0), Fraction(1, 2), Fraction(1, 4))
    assert not cyclic_open_contains(Fraction(1, 2), Fraction(0), Fraction(1, 4))
    assert cyclic_open_contains(Fraction(3, 4), Fraction(1, 4), Fraction(0))
    assert not cyclic_open_contains(Fraction(0), Fraction(1, 2), Fraction(0))
    with pytest.raises(QuasisectionError):
        cyclic_open_contains(Fraction(1, 3), Fraction(4, 3), Fraction(0))


def test_signed_lift_and_midpoint():
    assert signed_lift(Fraction(3, 4)) == Fraction(-1, 4)
    assert signed_lift(Fraction(1, 2)) == Fraction(1, 2)
    assert arc_midpoint(Fraction(7, 8), Fraction(1, 8)) == 0


def test_solve_exact_unique():
    system = LinearSystem(unknowns=["x", "y"])
    system.add({"x": 1, "y": 1}, 1)
    system.add({"x": 1, "y": -1}, 0)
    result = solve_exact(system)
    assert result.particular == {"x": Fraction(1, 2), "y": Fraction(1, 2)}
    assert result.kernel == []
    assert result.rank == 2


def test_solve_exact_kernel():
    system = LinearSystem(unknowns=["x", "y"])
    system.add({"x": 1, "y": 1}, 0)
    result = solve_exact(system)
    assert result.particular == {"x": 0, "y": 0}
    assert len(result.kernel) == 1
    assert all(eq.residual(result.kernel[0]) == 0 for eq in system.equations)


def test_solve_exact_inconsistent():
    system = LinearSystem(unknowns=["x"])
    system.add({"x": 1}, 1, "one")
    system.add({"x": 2}, 3, "two")
    result = solve_exact(system)
    assert not result.consistent
    assert result.inconsistent_tags == ["two"]


def test_induction_system_has_only_zero_solution():
    # g(a)+g(b)+g(c)=0 при a+b+c=m и g(a)+g(m+2−a)=0, m=4
    m = 4
    system = LinearSystem(unknowns=list(range(m + 3)))
    for a in range(m + 1):
        for b in range(m - a + 1):
            coefficients: dict[int, int] = {}
            for x in (a, b, m - a - b):
                coefficients[x] = coefficients.get(x, 0) + 1
            system.add(coefficients, 0)
    for a in range(m + 3):
        coefficients = {a: 1}
        coefficients[m + 2 - a] = coefficients.get(m + 2 - a, 0) + 1
        system.add(coefficients, 0)
    result = solve_exact(system)
    assert result.kernel == []
    assert set(result.particular.values()) == {0}


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=4), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solution_satisfies_every_equation(rows, rhs):
    system = LinearSystem(unknowns=["a", "b", "c"])
    for row, value in zip(rows, rhs):
        system.add(dict(zip("abc", row)), value)
    result = solve_exact(system)
    if result.consistent:
        assert all(eq.residual(result.particular) == 0 for eq in system.equations)
    for vec in result.kernel:
        assert all(eq.residual(vec) == eq.residual({}) for eq in system.equations)


def test_seeded_rng_is_deterministic():
    a, b = seeded_rng(1), seeded_rng(1)
    assert [a.randbelow(5) for _ in range(3)] == [b.randbelow(5) for _ in range(3)]
    c, d = seeded_rng(1), seeded_rng(2)
    assert [c.randbelow(1000) for _ in range(5)] != [d.randbelow(1000) for _ in range(5)]


def test_seeded_rng_coin_is_fair():
    rng = seeded_rng(7)
    heads = sum(rng.coin() for _ in range(10_000))
    assert 4500 <= heads <= 5500


def test_randbelow_rejects_empty_range():
    with pytest.raises(ValueError):
        seeded_rng(0).randbelow(0)
