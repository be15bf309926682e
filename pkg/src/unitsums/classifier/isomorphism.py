"""Deciding when a cubic field is isomorphic to K_a or L_a.

The cheap filters (shared squarefree discriminant kernel, matching root
counts modulo small unramified primes) only discard candidates; every
reported isomorphism is confirmed by exhibiting a root of the family
polynomial inside K.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from ..arith import IntPoly, cubic_discriminant, factorize, integer_root, is_perfect_square, primes_up_to
from ..field import CubicField, FieldElement, make_field, roots_in_field
from ..thue import BinaryCubicForm, thue_bounded

SIMPLEST_CUBIC_CAP = 3000
HOSHI_MIYAKE_MAX_A = 1000
_FILTER_PRIMES = primes_up_to(200)


def simplest_cubic(a: int) -> IntPoly:
    """f_a = x^3 - a x^2 - (a+3) x - 1."""
    return IntPoly.monic(-a, -(a + 3), -1)


def g_poly(a: int) -> IntPoly:
    """g_a = x^3 - a x^2 - 1."""
    return IntPoly.monic(-a, 0, -1)


def root_count_mod(p: IntPoly, q: int) -> int:
    return sum(1 for x in range(q) if p(x) % q == 0)


@lru_cache(maxsize=4096)
def _field_counts(poly: IntPoly) -> tuple[tuple[int, int], ...]:
    disc = cubic_discriminant(poly)
    return tuple((q, root_count_mod(poly, q)) for q in _FILTER_PRIMES if disc % q)


def frobenius_compatible(K: CubicField, p: IntPoly, max_primes: int = 12) -> bool:
    """False only if some unramified prime splits differently in K and Q[x]/p."""
    dp = cubic_discriminant(p)
    used = 0
    for q, count in _field_counts(K.poly):
        if dp % q == 0:
            continue
        if root_count_mod(p, q) != count:
            return False
        used += 1
        if used >= max_primes:
            break
    return True


def embed(p: IntPoly, K: CubicField) -> FieldElement | None:
    """A root of p in K, or None; the generator itself when p is K's own polynomial."""
    if p == K.poly:
        return K.gen
    roots = roots_in_field(p, K)
    return roots[0] if roots else None


def fields_isomorphic(K: CubicField, p: IntPoly) -> bool:
    if cubic_discriminant(p) * K.disc <= 0:
        return False
    if is_perfect_square(cubic_discriminant(p) * K.disc) is None:
        return False
    return frobenius_compatible(K, p) and embed(p, K) is not None


def detect_simplest_cubic(K: CubicField, cap: int = SIMPLEST_CUBIC_CAP) -> list[int]:
    """All -1 <= a <= cap with K isomorphic to K_a.

    The conductor of K divides both sqrt(disc) of the defining polynomial and
    a^2 + 3a + 9, and is at least 7, which prunes most a before the
    Frobenius check and the exact root search.
    """
    if not K.is_cyclic:
        raise ValueError(f"{K} is not cyclic")
    s = isqrt(K.disc)
    out = []
    for a in range(-1, cap + 1):
        if gcd(a * a + 3 * a + 9, s) < 7:
            continue
        f = simplest_cubic(a)
        if frobenius_compatible(K, f) and embed(f, K) is not None:
            out.append(a)
    return out


def detect_La(K: CubicField, a_cap: int = 1000) -> list[int]:
    """All nonzero -1 <= a <= a_cap with K isomorphic to L_a."""
    if not K.is_complex:
        raise ValueError(f"{K} is not complex")
    d = -K.disc
    out = []
    for a in range(-1, a_cap + 1):
        if a == 0:
            continue
        # disc(g_a) = -(4a^3 + 27) must share its squarefree kernel with disc(K)
        if is_perfect_square((4 * a**3 + 27) * d) is None:
            continue
        g = g_poly(a)
        if frobenius_compatible(K, g) and embed(g, K) is not None:
            out.append(a)
    return out


def _lambda_values(a: int) -> list[int]:
    """All lam with lam^2 | m^3 (4m+27)^5 for m = a^3, from the factors of a and 4a^3+27."""
    exps: dict[int, int] = {}
    for p, e in factorize(a).items():
        exps[p] = exps.get(p, 0) + 9 * e
    for p, e in factorize(4 * a**3 + 27).items():
        exps[p] = exps.get(p, 0) + 5 * e
    vals = [1]
    for p, e in exps.items():
        vals = [v * p**k for v in vals for k in range(e // 2 + 1)]
    return sorted(vals + [-v for v in vals])


def hoshi_miyake_n(m: int, x: int, y: int) -> Fraction:
    lam = BinaryCubicForm.hoshi_miyake(m)(x, y)
    num = m * (4 * m + 27) * y * (x * x + 9 * x * y + 27 * y * y + m * y * y) * (x**3 - m * x * x * y - m * m * y**3)
    return m + Fraction(num, lam * lam)


def iso_La_hoshi_miyake(
    a: int,
    a_cap: int = 1000,
    y_bound: int = 10**4,
    max_a: int = HOSHI_MIYAKE_MAX_A,
    with_hits: bool = False,
):
    """Values b <= a_cap with L_b isomorphic to L_a, through the cubic Thue route.

    Runs a bounded search over primitive (x, y), y > 0, for every admissible
    lam; each resulting b = n^(1/3) is confirmed by an exact root of g_b in L_a.
    b = a itself corresponds to the point (1, 0) and is always included.
    With ``with_hits`` the (b, x, y, lam) witnesses are returned as well.
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    if abs(a) > max_a:
        raise ValueError(f"|a| = {abs(a)} exceeds the lambda-enumeration guard {max_a}")
    m = a**3
    La = make_field(g_poly(a))
    form = BinaryCubicForm.hoshi_miyake(m)
    found = {a}
    witnesses = [(a, 1, 0, 1)]
    for hit in thue_bounded(form, _lambda_values(a), y_bound, require_primitive=True, require_y_positive=True):
        n = hoshi_miyake_n(m, hit.x, hit.y)
        if n.denominator != 1:
            continue
        b = integer_root(int(n), 3)
        if b is None or b == 0 or not -1 <= b <= a_cap:
            continue
        if b not in found and embed(g_poly(b), La) is None:
            continue
        found.add(b)
        witnesses.append((b, hit.x, hit.y, hit.value))
    result = sorted(found)
    return (result, witnesses) if with_hits else result
