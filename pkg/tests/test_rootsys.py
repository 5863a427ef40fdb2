import pytest

from minuscule_lab.rootsys import (
    InvalidTypeError,
    SemisimpleType,
    SimpleType,
    cartan_matrix,
    components,
    coxeter_number,
    fundamental_weight,
    highest_root,
    langlands_dual,
    normalize,
    positive_roots,
    rho,
    rho_check_pairing,
    root_lengths,
    subdiagram_type,
    weyl_degrees,
)
from minuscule_lab.weyl import number_of_positive_roots, weyl_group_order

S = SimpleType.parse


def test_g2_orientation():
    assert cartan_matrix(S("G2")) == ((2, -1), (-3, 2))
    lengths = root_lengths(cartan_matrix(S("G2")))
    assert lengths[1] == 3 * lengths[0]


def test_bc_are_transposes():
    b, c = cartan_matrix(S("B4")), cartan_matrix(S("C4"))
    assert b == tuple(zip(*c))
    assert b[2][3] == -2 and b[3][2] == -1


@pytest.mark.parametrize("text", ["D2", "A0", "E9", "G3", "Q4", "F5"])
def test_invalid_types(text):
    with pytest.raises(InvalidTypeError):
        S(text)


@pytest.mark.parametrize("text,count,height", [
    ("A2", 3, 2), ("B2", 4, 3), ("C3", 9, 5), ("G2", 6, 5), ("F4", 24, 11),
    ("E6", 36, 11), ("E7", 63, 17), ("E8", 120, 29), ("D4", 12, 5)])
def test_roots_and_highest_root(text, count, height):
    t = S(text)
    assert len(positive_roots(t)) == count == number_of_positive_roots(t)
    assert highest_root(t).height == height == coxeter_number(t) - 1


@pytest.mark.parametrize("text", ["A2", "B2", "G2", "F4", "D4", "E6", "E7", "E8", "A8", "B8"])
def test_degrees_against_frozen_orders(frozen, text):
    t = S(text)
    deg = weyl_degrees(t)
    assert deg.product == frozen["weyl_order"][text] == weyl_group_order(t)
    assert deg.exponent_sum == number_of_positive_roots(t)


def test_rho_check_pairing_of_rho_is_sum_of_heights():
    t = S("E6")
    assert 2 * rho_check_pairing(rho(t)) == sum(a.height for a in positive_roots(t))


def test_fundamental_weight_rows():
    w = fundamental_weight(S("E7"), 7)
    assert w.coords == (0,) * 6 + (1,)
    with pytest.raises(IndexError):
        fundamental_weight(S("A2"), 3)


def test_subdiagram_identification():
    assert str(subdiagram_type(S("E7"), range(1, 7))) == "E6"
    assert str(subdiagram_type(S("D6"), range(2, 7))) == "D5"
    assert str(subdiagram_type(S("E6"), [1, 2, 3, 4, 5])) == "D5"
    assert str(subdiagram_type(S("F4"), [2, 3])) == "B2"
    assert normalize(subdiagram_type(S("C5"), [1, 2, 4, 5])) == (S("A2"), S("B2"))
    comp = components(cartan_matrix(S("E6")), [2, 3, 4, 5, 6])
    assert comp[0].type == S("D5") and comp[0].nodes[-2:] in ((3, 2), (2, 3))


def test_normalize_and_dual():
    assert normalize(SemisimpleType.parse("C2+D3")) == (S("A3"), S("B2"))
    assert langlands_dual(S("B5")) == S("C5")
    assert langlands_dual(S("E6")) == S("E6")
