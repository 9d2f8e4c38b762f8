import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from milnorcalc.chow import ChowClass, format_class, h_power, make_class, one, zero

from conftest import classes, unit_classes


def cls(n, *coeffs):
    return make_class(n, list(coeffs))


# -- construction -----------------------------------------------------------

def test_make_class_pads_short_input():
    assert cls(4, 0, 2, 6, 8, 4).coeffs == cls(4, 0, 2, 6, 8, 4).coeffs
    assert make_class(3, []) == zero(3)
    assert make_class(3, [1, 2]).coeffs == (1, 2, 0, 0)


def test_make_class_rejects_overlong_input():
    with pytest.raises(ValueError):
        make_class(2, [1, 5, 7, 9])


def test_make_class_rejects_negative_dimension():
    with pytest.raises(ValueError):
        make_class(-1, [1])


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        make_class(2, [0.5])


def test_string_coefficients_parse_exactly():
    assert make_class(2, ["1", "2/3"]).coeffs == (1, Fraction(2, 3), 0)


# -- arithmetic -------------------------------------------------------------

def test_add_sub_examples():
    a = cls(3, 0, 0, 1, 1)   # H^2 + H^3
    b = cls(3, 0, 0, 0, 1)   # H^3
    assert a + b == cls(3, 0, 0, 1, 2)
    assert a + (-a) == zero(3)
    cfj = cls(4, 0, 2, 6, 8, 4)
    csm = cls(4, 0, 2, 7, 9, 5)
    assert cfj - csm == cls(4, 0, 0, -1, -1, -1)


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        cls(3, 1) + cls(4, 1)
    with pytest.raises(ValueError):
        cls(3, 1) * cls(4, 1)


def test_mul_examples():
    a = cls(4, 0, 1, 4, 6, 4)
    b = cls(4, 0, 0, 1, 1, 1)
    assert a * b == cls(4, 0, 0, 0, 1, 5)
    assert a * one(4) == a
    assert cls(4, 0, 0, 2) * cls(4, 0, 0, 0, 1) == zero(4)  # truncation


def test_invert_examples():
    assert cls(4, 1, 2).invert() == cls(4, 1, -2, 4, -8, 16)
    assert one(5).invert() == one(5)
    with pytest.raises(ValueError):
        h_power(3, 1).invert()


def test_invert_scales_any_unit_constant():
    u = cls(3, 2, 2)
    assert u * u.invert() == one(3)


def test_pow_examples():
    assert cls(4, 1, 1) ** 5 == cls(4, 1, 5, 10, 10, 5)
    assert cls(4, 1, 2) ** 3 == cls(4, 1, 6, 12, 8)
    assert cls(4, 3, 1) ** 0 == one(4)
    assert cls(2, 1, 1) ** -2 == cls(2, 1, 1).invert() ** 2


def test_dual_examples():
    assert cls(4, 0, 0, 1, 1, 1).dual() == cls(4, 0, 0, 1, -1, 1)
    assert one(4).dual() == one(4)


def test_tensor_line_example():
    a = cls(4, 0, 0, 1, -1, 1)
    assert a.tensor_line(2) == cls(4, 0, 0, 1, -5, 19)
    assert a.tensor_line(0) == a
    degree_one = cls(4, 0, 2)
    assert a.tensor_line(degree_one) == a.tensor_line(2)


def test_tensor_line_rejects_mixed_degree():
    with pytest.raises(ValueError):
        cls(3, 1).tensor_line(cls(3, 0, 1, 1))


def test_component_and_integral():
    a = cls(4, 0, 2, 7)
    assert a.component(2) == cls(4, 0, 0, 7)
    with pytest.raises(ValueError):
        a.component(5)
    assert cls(4, 0, 2, 7, 9, 5).integral() == 5
    assert zero(4).integral() == 0


def test_integer_coeff_check():
    assert cls(2, 1, 2).is_integral()
    assert not cls(2, Fraction(1, 2)).is_integral()
    with pytest.raises(ValueError):
        cls(2, Fraction(1, 2)).integer_coeffs()


# -- formatting -------------------------------------------------------------

@pytest.mark.parametrize(
    "value,text",
    [
        (cls(4, 0, 2, 6, 8, 4), "2H + 6H^2 + 8H^3 + 4H^4"),
        (cls(4, 0, 0, 1, -5, 19), "H^2 - 5H^3 + 19H^4"),
        (cls(3, 0, 0, 0, -1), "-H^3"),
        (cls(2, 1, 0, -3), "1 - 3H^2"),
        (cls(2, Fraction(1, 2), 1), "(1/2) + H"),
        (zero(3), "0"),
    ],
)
def test_format_class(value, text):
    assert format_class(value) == text


# -- ring laws (hypothesis) -------------------------------------------------

@given(classes(count=3))
def test_ring_axioms(abc):
    a, b, c = abc
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    n = a.ambient_dim
    assert a * one(n) == a
    assert a + zero(n) == a


@given(unit_classes())
def test_invert_is_inverse(u):
    assert u * u.invert() == one(u.ambient_dim)


@given(classes())
def test_dual_involution(a):
    assert a.dual().dual() == a


@given(classes(count=2))
def test_dual_is_multiplicative(ab):
    a, b = ab
    assert (a * b).dual() == a.dual() * b.dual()


@given(classes(min_dim=1), st.integers(-4, 4), st.integers(-4, 4))
def test_tensor_line_composes(a, u, v):
    assert a.tensor_line(u).tensor_line(v) == a.tensor_line(u + v)


@given(classes(min_dim=1), st.integers(-4, 4))
def test_dual_tensor_compatibility(a, u):
    assert a.tensor_line(u).dual() == a.dual().tensor_line(-u)


def test_invert_sweep_200_units_per_dimension():
    rng = random.Random(20260811)
    for n in range(2, 9):
        for _ in range(200):
            coeffs = [rng.randint(-9, 9) for _ in range(n + 1)]
            coeffs[0] = rng.choice([q for q in range(-9, 10) if q])
            u = make_class(n, coeffs)
            assert u * u.invert() == one(n)


def test_docstring_examples():
    import doctest

    import milnorcalc.chow as chow

    results = doctest.testmod(chow)
    assert results.failed == 0 and results.attempted >= 3
