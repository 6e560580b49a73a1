import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from splicesig.torus import (
    UNIT,
    Angle,
    angle,
    char_power,
    character,
    conjugate_character,
    defect,
    defect1,
    delete_color,
    ind,
    insert_unit,
    is_open,
    log_sum,
    parse_character,
    serialize_character,
)

rationals = st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=60)
angles = st.builds(Angle, st.fractions(min_value=0, max_value=Fraction(59, 60), max_denominator=60))


def test_ind_values():
    assert ind(Fraction(0)) == 0
    assert ind(Fraction(1)) == 2
    assert ind(Fraction(-2)) == -4
    assert ind(Fraction(1, 2)) == 1
    assert ind(Fraction(7, 8)) == 1
    assert ind(Fraction(9, 8)) == 3
    assert ind(Fraction(-1, 3)) == -1


@given(rationals)
def test_ind_floor_identity(x):
    # ind(x) = 2*floor(x)+1 off the integers and 2x on them
    if x.denominator == 1:
        assert ind(x) == 2 * x
    else:
        assert ind(x) == 2 * math.floor(x) + 1


@given(rationals)
def test_ind_odd(x):
    assert ind(-x) == -ind(x)


def test_angle_normalization():
    assert Angle(Fraction(9, 8)).value == Fraction(1, 8)
    assert Angle(Fraction(-1, 8)).value == Fraction(7, 8)
    assert Angle(2) == UNIT
    assert angle("5/8").value == Fraction(5, 8)


def test_angle_is_immutable():
    a = angle("1/3")
    with pytest.raises(AttributeError):
        a.value = Fraction(1, 2)


@given(angles, st.integers(min_value=-5, max_value=5))
def test_angle_power(a, k):
    assert (k * a).value == (k * a.value) % 1


@given(angles)
def test_angle_conjugate_involution(a):
    assert a.conjugate().conjugate() == a
    assert a.conjugate().value == (-a.value) % 1


def test_character_parsing_roundtrip():
    om = character("1/8,5/8,0")
    assert serialize_character(om) == ["1/8", "5/8", "0"]
    assert parse_character(serialize_character(om)) == om
    assert character(["1/2"]) == (angle("1/2"),)
    assert character("") == ()


def test_character_edits():
    om = character("1/8,5/8")
    assert delete_color(om, 0) == character("5/8")
    assert insert_unit(om, 1) == character("1/8,0,5/8")
    assert conjugate_character(om) == character("7/8,3/8")
    assert is_open(om)
    assert not is_open(character("1/8,0"))
    assert is_open(())  # nothing is pinned to 1 on the empty torus


def test_log_sum_is_plain_sum():
    # tuple logs add up in [0, mu); they are NOT reduced mod 1
    assert log_sum(character("5/8,5/8")) == Fraction(5, 4)
    assert log_sum(()) == 0


def test_char_power():
    om = character("1/8,5/8")
    assert char_power(om, (1, 1)) == angle("3/4")
    assert char_power(om, (2, 0)) == angle("1/4")
    assert char_power(om, (-1, 1)) == angle("1/2")
    assert char_power((), ()) == UNIT
    with pytest.raises(ValueError):
        char_power(om, (1,))


def test_defect_examples():
    assert defect1(character("1/8,5/8")) == -1
    assert defect1(character("5/8,5/8")) == 1
    assert defect((1, 2), character("1/2,1/4")) == -1  # ind(1) - (ind(1/2) + 2*ind(1/4))
    assert defect((2,), character("3/4")) == ind(Fraction(3, 2)) - 2 * ind(Fraction(3, 4))


def test_defect_trivial_cases():
    # no defect on zero or one coordinate
    assert defect1(()) == 0
    for num in range(12):
        assert defect1((Angle(Fraction(num, 12)),)) == 0
    assert defect1(character("0,0,0")) == 0


def grid(mu, order):
    if mu == 0:
        yield ()
        return
    for rest in grid(mu - 1, order):
        for num in range(order):
            yield rest + (Angle(Fraction(num, order)),)


@pytest.mark.parametrize("mu", [2, 3])
def test_defect_conjugation_flips_sign(mu):
    for om in grid(mu, 8):
        assert defect1(conjugate_character(om)) == -defect1(om)


def test_defect_symmetric():
    import itertools

    for om in grid(3, 6):
        for perm in itertools.permutations(range(3)):
            assert defect1(tuple(om[i] for i in perm)) == defect1(om)


def test_defect_unit_coordinate_drops():
    for om in grid(2, 8):
        assert defect1(om + (UNIT,)) == defect1(om)


def test_defect_conjugate_pair_drops():
    for om in grid(1, 12):
        for num in range(12):
            eta = Angle(Fraction(num, 12))
            assert defect1(om + (eta, eta.conjugate())) == defect1(om)


@given(st.lists(angles, min_size=0, max_size=4),
       st.lists(st.integers(min_value=-3, max_value=3), min_size=0, max_size=4))
def test_defect_definition(om, lam):
    om = tuple(om)
    lam = tuple(lam[: len(om)]) + (1,) * (len(om) - len(lam))
    expected = ind(sum((l * a.value for l, a in zip(lam, om)), Fraction(0)))
    expected -= sum(l * ind(a.value) for l, a in zip(lam, om))
    assert defect(lam, om) == expected
