import random

import pytest

from unitsums.arith import IntPoly, cubic_discriminant, is_perfect_square, poly_reflect
from unitsums.classifier.minpoly import (
    AllIntegers,
    CaseTag,
    DISC_POLYS,
    MinPolyPair,
    complex_a_candidates,
    complex_uv_candidates,
    cyclic_a_candidates,
    disc_formula,
    minpoly_candidates_small_n,
    minpoly_general,
    minpoly_uv,
    uv_disc,
    uv_quartic,
)

P = IntPoly.parse
COMPLEX_UV_10 = {(1, -2), (1, 0), (1, 1), (1, 2), (1, 3), (2, -3), (2, -1), (3, -4), (3, -2), (4, -3)}


def test_small_n_examples():
    minus, plus = minpoly_candidates_small_n(1, 0)
    assert minus.case_tag is CaseTag.N1_MINUS and plus.case_tag is CaseTag.N1_PLUS
    assert minus.f_delta == P("x^3 + x - 1")
    pair = minpoly_candidates_small_n(2, -6)[0]
    assert pair.f_delta == P("x^3 - 6x^2 + 9x - 1")
    assert pair.f_eps == P("x^3 - 3x - 1")


@pytest.mark.parametrize("n", [0, 3, -1])
def test_small_n_rejects(n):
    with pytest.raises(ValueError):
        minpoly_candidates_small_n(n, 1)


def test_general_examples():
    assert minpoly_general(2, -1).f_eps == P("x^3 - 5x^2 + 6x - 1")
    assert minpoly_uv(2, 1) == minpoly_general(2, -1)
    assert minpoly_general(1, 3).f_eps == P("x^3 + x^2 - 2x - 1")
    assert minpoly_general(1, 3).param == (1, -3)
    zero = minpoly_general(0, 5)
    assert zero.f_eps == poly_reflect(zero.f_delta, 0)


def test_pair_invariant_enforced():
    p = minpoly_general(3, 1)
    with pytest.raises(ValueError):
        MinPolyPair(p.f_eps, p.f_eps, p.n, p.case_tag, p.param)


def test_disc_formula_examples():
    assert disc_formula(minpoly_candidates_small_n(1, -5)[0]) == 49
    assert disc_formula(minpoly_candidates_small_n(2, -6)[0]) == 81
    assert disc_formula(minpoly_uv(2, 1)) == 49 == cubic_discriminant(P("x^3 - 5x^2 + 6x - 1"))


def _random_pairs(rng, count):
    for _ in range(count):
        if rng.random() < 0.5:
            yield minpoly_candidates_small_n(rng.choice([1, 2]), rng.randint(-10**6, 10**6))[rng.randint(0, 1)]
        else:
            yield minpoly_uv(rng.randint(-10**5, 10**5), rng.randint(-10**5, 10**5))


def test_reflection_and_disc_agreement_random():
    rng = random.Random(2024)
    for pair in _random_pairs(rng, 1000):
        assert poly_reflect(pair.f_delta, pair.n) == pair.f_eps
        assert poly_reflect(pair.f_eps, pair.n) == pair.f_delta
        d = disc_formula(pair)
        assert cubic_discriminant(pair.f_eps) == d == cubic_discriminant(pair.f_delta)
        assert abs(pair.f_eps[0]) == abs(pair.f_delta[0]) == 1
        assert pair.f_delta(pair.n) == -pair.f_eps[0]
        assert pair.f_delta(pair.n) in (1, -1)


def test_cyclic_candidates_examples():
    c = cyclic_a_candidates()
    assert c[CaseTag.N1_MINUS] == {-5, 2}
    assert c[CaseTag.N2_MINUS] == {-10, -6, 0, 4}
    assert c[CaseTag.N2_PLUS] == {-4, -2}
    assert isinstance(c[CaseTag.N1_PLUS], AllIntegers)
    assert 12345 in c[CaseTag.N1_PLUS]


def test_complex_candidates_examples():
    c = complex_a_candidates()
    assert c[CaseTag.N1_MINUS] == {-4, -3, -2, -1, 0, 1}
    assert c[CaseTag.N1_PLUS] == set()
    assert c[CaseTag.N2_MINUS] == {-5, -4, -2, -1}
    assert c[CaseTag.N2_PLUS] == set()


def test_candidates_vs_bruteforce():
    cyc = cyclic_a_candidates()
    cpx = complex_a_candidates()
    for tag, poly in DISC_POLYS.items():
        for a in range(-30, 31):
            d = poly(a)
            assert (a in cyc[tag]) == (d != 0 and is_perfect_square(d) is not None), (tag, a)
            assert (a in cpx[tag]) == (d < 0), (tag, a)
            assert d == cubic_discriminant(minpoly_candidates_small_n(1 if "1" in tag.value else 2, a)[tag.value.endswith("plus")].f_eps)


def test_complex_uv_examples():
    assert uv_quartic(1)(-2) == -23 == uv_disc(1, -2)
    got = set(complex_uv_candidates(4))
    assert got == COMPLEX_UV_10 | {(U, -U) for U in range(1, 5)}
    assert [v for u, v in complex_uv_candidates(10) if u == 10] == [-10]
    with pytest.raises(ValueError):
        complex_uv_candidates(0)


def test_complex_uv_vs_bruteforce():
    got = set(complex_uv_candidates(40))
    brute = {(U, V) for U in range(1, 41) for V in range(-300, 301) if uv_disc(U, V) < 0}
    assert got == brute


def test_uv_quartic_matches_disc():
    for U in range(-20, 21):
        F = uv_quartic(U)
        assert all(F(V) == uv_disc(U, V) for V in range(-20, 21))
