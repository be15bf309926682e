from math import comb

import pytest

from unitsums.arith import IntPoly
from unitsums.classifier.families import (
    QuotientRing,
    ennola_checks,
    ennola_poly,
    ennola_solutions,
    md_construction,
    md_poly,
    theoretical_bound,
)


def test_md_examples():
    c = md_construction(2)
    assert c.distinct_values == {2}
    assert md_poly(2) == IntPoly.parse("x^2 - 6x + 7")
    assert md_construction(4).distinct_values == {2, 4, 6, 8, 12, 14}
    assert len(md_construction(6).values) == 15


@pytest.mark.parametrize("d", range(2, 13))
def test_md_counts(d):
    c = md_construction(d)
    assert c.poly.degree == d
    assert len(c.values) == comb(d, 2)
    assert all(n == 2**j - 2**i for i, j, n in c.values)


@pytest.mark.parametrize("d", [1, 13])
def test_md_range(d):
    with pytest.raises(ValueError):
        md_construction(d)


def test_quotient_ring():
    R = QuotientRing(md_poly(3))
    x = R.linear(0)
    # x^3 reduced equals 14x^2 - 56x + 65 modulo (x-2)(x-4)(x-8) - 1
    assert R.mul(R.mul(x, x), x) == (65, -56, 14)
    with pytest.raises(ValueError):
        QuotientRing(IntPoly((1, 2)))


def test_ennola_l3():
    checks = {c.label: c for c in ennola_checks(3)}
    assert checks["l"].verified and checks["l"].n == 3
    assert checks["l+1"].verified and checks["l+1"].n == 4
    assert ennola_poly(3) == IntPoly.parse("x^3 + 2x^2 - 3x - 1")


@pytest.mark.parametrize("l", range(3, 21))
def test_ennola_sign_variant(l):
    checks = {c.label: c for c in ennola_checks(l)}
    assert not checks["l+3 (+rho^2)"].sum_ok
    assert checks["l+3 (-rho^2)"].verified
    sols = ennola_solutions(l)
    assert sorted(s.n for s in sols) == [l, l + 1, l + 2, l + 3]
    for s in sols:
        assert s.eps + s.delta == s.field.element(s.n)


def test_ennola_range():
    with pytest.raises(ValueError):
        ennola_checks(2)


def test_theoretical_bound():
    b1 = theoretical_bound(1)
    assert b1 == 24**1296 + 2
    assert b1 % 10 == 8
    assert len(str(b1)) == 1789
    assert theoretical_bound(3) == 3 * 24**2592 + 2
    vals = [theoretical_bound(d) for d in range(1, 6)]
    assert vals == sorted(vals) and len(set(vals)) == 5
    with pytest.raises(ValueError):
        theoretical_bound(0)
