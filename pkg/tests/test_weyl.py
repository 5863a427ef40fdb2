import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minuscule_lab.rootsys import SimpleType, Weight, as_semisimple, cartan_matrix, fundamental_weight, rho
from minuscule_lab.weyl import (
    NodePermutation,
    act,
    apply_w0,
    diagram_automorphisms,
    minus_w0_automorphism,
    number_of_positive_roots,
    orbit,
    reflect,
    stabilizer_subtype,
    w0_word,
)

S = SimpleType.parse


def test_reflect_g2_uses_cartan_row():
    t = S("G2")
    assert reflect(1, fundamental_weight(t, 1)).coords == (-1, 1)
    assert reflect(2, fundamental_weight(t, 2)).coords == (3, -1)


@pytest.mark.parametrize("text", ["A4", "B3", "C4", "D5", "E6", "E7", "F4", "G2"])
def test_w0_word_is_reduced_and_sends_rho_to_minus_rho(text):
    t = S(text)
    word = w0_word(t)
    assert len(word) == number_of_positive_roots(t)
    r = rho(t)
    assert act(word, r) == -r
    assert apply_w0(r) == -r


@pytest.mark.parametrize("text,cycles", [
    ("A2", [(1, 2)]), ("E6", [(1, 6), (3, 5)]), ("D5", [(4, 5)]),
    ("D4", []), ("E7", []), ("B3", [])])
def test_minus_w0(text, cycles):
    t = S(text)
    assert minus_w0_automorphism(t) == NodePermutation.from_cycles(t.rank, *cycles)


def test_diagram_automorphism_counts():
    assert len(diagram_automorphisms(cartan_matrix(S("D4")))) == 6
    assert len(diagram_automorphisms(cartan_matrix(S("E6")))) == 2
    assert len(diagram_automorphisms(cartan_matrix(S("B4")))) == 1


def test_orbit_sizes():
    assert len(orbit(fundamental_weight(S("E6"), 1))) == 27
    assert len(orbit(fundamental_weight(S("E7"), 7))) == 56
    assert len(orbit(fundamental_weight(S("B8"), 8))) == 256
    assert len(orbit(rho(S("B3")))) == 48


def test_stabilizer():
    assert str(stabilizer_subtype(fundamental_weight(S("E7"), 7))) == "E6"


@settings(max_examples=60, deadline=None, derandomize=True)
@given(st.sampled_from(["A3", "B3", "C3", "D4", "G2", "F4"]), st.data())
def test_w0_is_an_involution_on_weights(text, data):
    t = S(text)
    coords = tuple(data.draw(st.integers(-3, 3)) for _ in range(t.rank))
    mu = Weight(coords, as_semisimple(t))
    assert apply_w0(apply_w0(mu)) == mu
    assert apply_w0(mu) == act(w0_word(t), mu)
