import random
from fractions import Fraction

import mpmath
import pytest

from unitsums.arith import IntPoly
from unitsums.field import (
    Classification,
    InvalidFieldError,
    PrecisionExhausted,
    eval_poly_in_field,
    galois_conjugates,
    make_field,
    precision_cap,
    roots_in_field,
)

F_M1 = IntPoly.parse("x^3+x^2-2x-1")
G_1 = IntPoly.parse("x^3-x^2-1")


def simplest(a):
    return IntPoly.monic(-a, -(a + 3), -1)


def g(a):
    return IntPoly.monic(-a, 0, -1)


def test_make_field_classification():
    K = make_field(F_M1)
    assert K.classification is Classification.CYCLIC and K.disc == 49
    L = make_field(IntPoly.parse("x^3-x^2-x-1"))
    assert L.classification is Classification.COMPLEX and L.disc == -44
    T = make_field(IntPoly.parse("x^3-4x+1"))
    assert T.classification is Classification.TOTALLY_REAL_NONCYCLIC


@pytest.mark.parametrize("p", ["x^3-2x", "x^3-1", "x^2+1", "2x^3+1", "x^3-3x+2"])
def test_make_field_rejects(p):
    with pytest.raises(InvalidFieldError):
        make_field(IntPoly.parse(p))


def test_reduction_example():
    L = make_field(G_1)
    w = L.gen
    assert w * (w * w) == w * w + 1
    assert w + 0 == w
    for a in range(-3, 8):
        K = make_field(simplest(a))
        r = K.gen
        assert (-r) + (r + 1) == K.one


def test_minpoly_norm_trace():
    K = make_field(F_M1)
    r = K.gen
    assert r.int_minpoly() == F_M1
    assert K.element(3).minpoly() == (Fraction(-3), Fraction(1))
    sq = (r * r).int_minpoly()
    assert sq.degree == 3 and sq.coeffs[0] in (1, -1)
    assert K.element(Fraction(2, 3)).trace() == 2
    for a in range(-2, 6):
        assert make_field(simplest(a)).gen.norm() == 1
        if a not in (0, -2):  # g_0 and g_-2 have the root 1, -1
            assert make_field(g(a)).gen.norm() == 1


def test_is_unit_examples():
    for a in range(-2, 6):
        K = make_field(simplest(a))
        assert (K.gen + 1).is_unit() and K.gen.is_unit()
        if a not in (0, -2):
            L = make_field(g(a))
            assert (L.gen - a).is_unit()
    K = make_field(F_M1)
    assert not K.element(2).is_unit()
    assert K.element(-1).is_unit()
    assert not K.element(Fraction(1, 2), 1).is_unit()


def random_element(K, rng):
    return K.element(*(rng.randint(-9, 9) for _ in range(3)))


FIELDS = [F_M1, G_1, IntPoly.parse("x^3-x^2-x-1"), IntPoly.parse("x^3-4x+1"), IntPoly.parse("x^3+5x^2-7x+3")]


def test_norm_multiplicative_trace_additive():
    rng = random.Random(2024)
    for _ in range(100):
        K = make_field(rng.choice(FIELDS))
        x, y = random_element(K, rng), random_element(K, rng)
        assert (x * y).norm() == x.norm() * y.norm()
        assert (x + y).trace() == x.trace() + y.trace()


def test_inverse_and_division():
    rng = random.Random(7)
    for _ in range(100):
        K = make_field(rng.choice(FIELDS))
        x = random_element(K, rng)
        if x == K.element(0):
            continue
        assert x * x.inverse() == K.one
        y = random_element(K, rng)
        assert (y / x) * x == y
        assert x ** -2 * x**2 == K.one
    with pytest.raises(ZeroDivisionError):
        make_field(F_M1).element(0).inverse()


def test_field_mismatch():
    with pytest.raises(ValueError):
        make_field(F_M1).gen + make_field(G_1).gen


def test_unit_closure():
    rng = random.Random(99)
    K = make_field(F_M1)
    units = [K.gen, K.gen + 1, K.gen * K.gen - 2, K.element(-1)]
    for _ in range(100):
        u = rng.choice(units) ** rng.randint(-3, 3) * rng.choice(units)
        assert u.is_unit()
        assert u.inverse().is_unit()


def test_roots_in_field_cyclic():
    K = make_field(F_M1)
    roots = roots_in_field(F_M1, K)
    r = K.gen
    assert set(roots) == {r, r * r - 2, -r * r - r + 1}
    for x in roots:
        assert eval_poly_in_field(F_M1, x) == K.element(0)


def test_roots_in_field_complex_and_isomorphism():
    L = make_field(G_1)
    assert roots_in_field(G_1, L) == [L.gen]
    roots = roots_in_field(g(67), L)
    assert len(roots) == 1
    w = L.gen
    assert roots[0] == 19 * w * w + 9 * w + 13
    assert roots_in_field(g(2), L) == []
    assert roots_in_field(g(-1), L) == []


def test_roots_in_field_other_degrees():
    K = make_field(F_M1)
    assert roots_in_field(IntPoly((-4, 0, 1)), K) == [K.element(-2), K.element(2)]
    assert roots_in_field(IntPoly((3,)), K) == []
    with pytest.raises(ValueError):
        roots_in_field(IntPoly(()), K)


def test_precision_cap_exhaustion():
    K = make_field(F_M1)
    huge = 2**40 * K.gen + 1
    p = huge.int_minpoly()
    with precision_cap(128):
        with pytest.raises(PrecisionExhausted):
            roots_in_field(p, K)
    assert huge in roots_in_field(p, K)
    with pytest.raises(ValueError):
        with precision_cap(64):
            pass


def test_galois_conjugates():
    K = make_field(F_M1)
    r = K.gen
    orbit = galois_conjugates(r)
    assert set(orbit) == set(roots_in_field(F_M1, K))
    x = 3 * r * r - r + 5
    assert all(c.trace() == x.trace() for c in galois_conjugates(x))
    assert galois_conjugates(K.element(Fraction(1, 3))) == [K.element(Fraction(1, 3))]
    L = make_field(G_1)
    assert galois_conjugates(L.gen) == [L.gen]
    assert len(K.automorphisms) == 3 and K.automorphisms[0] == r


def test_embeddings():
    for p in FIELDS:
        K = make_field(p)
        e = K.embeddings(128)
        assert e.check()
        with mpmath.workprec(128):
            assert abs(sum(e.roots) + p.coeffs[2]) < mpmath.mpf(2) ** -64
        assert e.refine(256).prec == 256
    w = make_field(G_1).gen
    with mpmath.workprec(200):
        ref = mpmath.findroot(lambda t: t**3 - t**2 - 1, mpmath.mpf("1.46"))
        assert abs(w.numeric(0) - ref) < mpmath.mpf(2) ** -100
