import pytest

from unitsums.arith import IntPoly
from unitsums.classifier.isomorphism import (
    detect_La,
    detect_simplest_cubic,
    fields_isomorphic,
    frobenius_compatible,
    g_poly,
    hoshi_miyake_n,
    iso_La_hoshi_miyake,
    root_count_mod,
    simplest_cubic,
)
from unitsums.field import make_field, roots_in_field

P = IntPoly.parse
L1 = make_field(g_poly(1))


@pytest.mark.parametrize(
    "a, aliases",
    [(-1, [-1, 5, 12, 1259]), (0, [0, 3, 54]), (1, [1, 66])],
)
def test_simplest_cubic_aliases(a, aliases):
    assert detect_simplest_cubic(make_field(simplest_cubic(a))) == aliases


def test_simplest_cubic_vs_bruteforce():
    # exhaustive root search for every a in the window agrees with the filtered scan
    K = make_field(simplest_cubic(-1))
    brute = [a for a in range(-1, 301) if roots_in_field(simplest_cubic(a), K)]
    assert detect_simplest_cubic(K, 300) == brute == [-1, 5, 12]


def test_detect_simplest_cubic_rejects_complex():
    with pytest.raises(ValueError):
        detect_simplest_cubic(L1)


def test_detect_La_examples():
    assert detect_La(L1, 1000) == [1, 67]
    assert detect_La(make_field(g_poly(-1)), 1000) == [-1]
    assert detect_La(make_field(P("x^3 - x^2 - x - 1")), 1000) == []
    with pytest.raises(ValueError):
        detect_La(make_field(simplest_cubic(0)))


def test_detect_La_vs_bruteforce():
    K = make_field(g_poly(2))
    brute = [a for a in range(-1, 121) if a not in (0, -2) and roots_in_field(g_poly(a), K)]
    assert detect_La(K, 120) == brute == [2]
    brute = [a for a in range(-1, 121) if a not in (0, -2) and roots_in_field(g_poly(a), L1)]
    assert detect_La(L1, 120) == brute == [1, 67]


def test_hoshi_miyake_route():
    res, hits = iso_La_hoshi_miyake(1, with_hits=True)
    assert res == [1, 67]
    assert hits[0] == (1, 1, 0, 1)
    for b, x, y, lam in hits[1:]:
        assert hoshi_miyake_n(1, x, y) == b**3
    assert iso_La_hoshi_miyake(2) == [2]


def test_hoshi_miyake_guards():
    with pytest.raises(ValueError):
        iso_La_hoshi_miyake(0)
    with pytest.raises(ValueError):
        iso_La_hoshi_miyake(1001)


def test_frobenius_filter():
    K = make_field(simplest_cubic(-1))
    assert frobenius_compatible(K, simplest_cubic(5))
    assert not frobenius_compatible(K, simplest_cubic(2))
    assert root_count_mod(simplest_cubic(-1), 13) == 3
    assert fields_isomorphic(K, simplest_cubic(1259))
    assert not fields_isomorphic(K, simplest_cubic(1))
    assert not fields_isomorphic(K, g_poly(1))
