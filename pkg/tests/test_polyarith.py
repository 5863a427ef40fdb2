import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import product_ratio
from minuscule_lab.polyarith import (
    INDETERMINATE,
    CycloRatio,
    IntPoly,
    NotAPolynomialError,
    cyclotomic,
    eval_ratio_at_minus1,
    eval_ratio_at_one,
    even_part,
    is_polynomial,
    multiply,
    ratio_to_poly,
)


def test_render_and_parse():
    p = IntPoly((1, 0, 0, 0, 1, 0, 0, 0, 1))
    assert p.render() == "1 + q^4 + q^8"
    assert p.render(unicode=True) == "1 + q⁴ + q⁸"
    assert IntPoly((0, 0, 2)).render() == "2q^2"
    for c in [(1,), (0, -1), (3, 0, -2, 1), (-1, 1, 0, 0, 7)]:
        assert IntPoly.parse(IntPoly(c).render()) == IntPoly(c)
    assert IntPoly().render() == "0"


def test_cyclotomic_values():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)


def test_ratio_basic():
    r = CycloRatio((12,), (4,))
    assert ratio_to_poly(r).render() == "1 + q^4 + q^8"
    assert ratio_to_poly(r, "division") == ratio_to_poly(r)
    assert str(CycloRatio((9, 12, 3), (3, 1, 4))) == "num {9,12} / den {1,4}"
    with pytest.raises(NotAPolynomialError, match="not a polynomial"):
        ratio_to_poly(CycloRatio((4,), (3,)))
    with pytest.raises(NotAPolynomialError):
        ratio_to_poly(CycloRatio((4,), (3,)), "division")
    assert not is_polynomial(CycloRatio((2,), (4,)))


def test_evaluation_at_minus_one_limits():
    assert eval_ratio_at_minus1(CycloRatio((9, 12), (1, 4))) == 3
    assert eval_ratio_at_minus1(CycloRatio((9, 12), (4,))) == 6
    assert eval_ratio_at_minus1(CycloRatio((2,), ())) == 0
    assert eval_ratio_at_minus1(CycloRatio((), (2,))) is INDETERMINATE
    assert eval_ratio_at_minus1(CycloRatio((6,), (4,))) == Fraction(3, 2)
    assert eval_ratio_at_one(CycloRatio((9, 12), (1, 4))) == 27
    assert eval_ratio_at_one(CycloRatio((), (1,))) is INDETERMINATE


def test_even_part():
    assert even_part(CycloRatio((9, 12), (1, 4))) == CycloRatio((12,), (4,))


def test_multiply_requires_same_kind():
    assert multiply(IntPoly((1, 1)), IntPoly((1, -1))) == IntPoly((1, 0, -1))
    with pytest.raises(TypeError):
        multiply(IntPoly((1,)), CycloRatio())


def _random_ratio(rng: random.Random) -> CycloRatio:
    """A ratio that is a polynomial by construction (Gaussian-style) or a
    random one that may not be."""
    if rng.random() < 0.6:
        n = rng.randint(1, 12)
        k = rng.randint(0, n)
        extra = [rng.randint(1, 9) for _ in range(rng.randint(0, 2))]
        return CycloRatio(tuple(range(n - k + 1, n + 1)) + tuple(extra), tuple(range(1, k + 1)))
    return CycloRatio(tuple(rng.randint(1, 12) for _ in range(rng.randint(0, 4))),
                      tuple(rng.randint(1, 12) for _ in range(rng.randint(0, 3))))


def test_two_routes_agree_on_1000_random_ratios():
    rng = random.Random(1729)
    polys = 0
    for _ in range(1000):
        r = _random_ratio(rng)
        try:
            a = ratio_to_poly(r)
        except NotAPolynomialError:
            with pytest.raises(NotAPolynomialError):
                ratio_to_poly(r, "division")
            continue
        polys += 1
        b = ratio_to_poly(r, "division")
        assert a == b
        assert list(a.coeffs) == product_ratio(list(r.num), list(r.den))
        v = eval_ratio_at_minus1(r)
        if v is not INDETERMINATE:
            assert a(-1) == v
    assert polys > 500


@settings(max_examples=200, deadline=None, derandomize=True)
@given(st.lists(st.integers(-5, 5), max_size=8), st.lists(st.integers(-5, 5), max_size=8))
def test_ring_laws(a, b):
    p, q = IntPoly(tuple(a)), IntPoly(tuple(b))
    assert p * q == q * p
    assert (p + q) - q == p
    if q and q.coeffs[-1] in (1, -1):
        quot, rem = (p * q).divmod_exact(q)
        assert quot == p and not rem
    for x in (-2, -1, 0, 1, 3):
        assert (p * q)(x) == p(x) * q(x)
