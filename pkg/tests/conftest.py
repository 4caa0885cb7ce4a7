from fractions import Fraction
from pathlib import Path

import pytest
from httpx import ASGITransport, AsyncClient

from quasisection_euler.main import app
from quasisection_euler.models.arrangement import ArrangementSpec, Pancake, Section

DATA = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def two_pancakes() -> ArrangementSpec:
    """Две пересекающиеся складки и сечение между блинами."""
    return ArrangementSpec(
        pancakes=(
            Pancake((Fraction(0), Fraction(0)), Fraction(1), Fraction(1, 4), Fraction(1, 16)),
            Pancake((Fraction(1), Fraction(0)), Fraction(1), Fraction(3, 4), Fraction(1, 16)),
        ),
        sections=(Section(Fraction(1, 2)),),
    )


@pytest.fixture
def venn_pancakes() -> ArrangementSpec:
    centers = [(0, 0), (Fraction(6, 5), 0), (Fraction(3, 5), Fraction(11, 10)), (Fraction(3, 5), Fraction(-2, 5))]
    heights = [Fraction(1, 10), Fraction(3, 10), Fraction(5, 10), Fraction(7, 10)]
    return ArrangementSpec(
        pancakes=tuple(
            Pancake((Fraction(x), Fraction(y)), Fraction(1), h, Fraction(1, 40)) for (x, y), h in zip(centers, heights)
        ),
        sections=(Section(Fraction(9, 10)), Section(Fraction(1, 5))),
    )


@pytest.fixture
async def client():
    transport = ASGITransport(app=app)
    async with AsyncClient(transport=transport, base_url="http://test") as ac:
        yield ac
