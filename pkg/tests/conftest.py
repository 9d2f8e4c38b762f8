from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from milnorcalc.chow import ChowClass

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

coefficients = st.one_of(
    st.integers(-9, 9),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
)


def chow_class(n: int, coeff=coefficients):
    return st.lists(coeff, min_size=n + 1, max_size=n + 1).map(
        lambda cs: ChowClass(n, tuple(Fraction(c) for c in cs))
    )


@st.composite
def classes(draw, count: int = 1, min_dim: int = 0, max_dim: int = 6, coeff=coefficients):
    """`count` classes sharing one random ambient dimension."""
    n = draw(st.integers(min_dim, max_dim))
    drawn = [draw(chow_class(n, coeff)) for _ in range(count)]
    return drawn[0] if count == 1 else tuple(drawn)


@st.composite
def unit_classes(draw, min_dim: int = 0, max_dim: int = 6):
    """Classes with an invertible (nonzero) constant term."""
    c = draw(classes())
    head = draw(st.one_of(st.integers(1, 9), st.integers(-9, -1)))
    return ChowClass(c.ambient_dim, (Fraction(head),) + c.coeffs[1:])


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
