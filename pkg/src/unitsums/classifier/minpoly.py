"""Candidate minimal polynomials for eps + delta = n over cubic fields.

Every solution with eps, delta irrational has f_eps(x) = -f_delta(n - x).  Writing
f_delta = x^3 + a x^2 + b x +- 1, either n^3 + a n^2 + b n = 0 (the "general"
branch, parametrised by (U, V) = (n, -n_delta)) or n in {1, 2} with one free
integer a.  The discriminant of the pair must be a square (cyclic K) or
negative (complex K), which cuts the parameters down to finite lists.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from ..arith import (
    IntPoly,
    cauchy_bound,
    cubic_discriminant,
    fujiwara_bound,
    is_perfect_square,
    poly_reflect,
    signed_divisors,
)


class CaseTag(str, enum.Enum):
    N1_MINUS = "n1_minus"  # n = 1, a + b = 1
    N1_PLUS = "n1_plus"  # n = 1, a + b = -3
    N2_MINUS = "n2_minus"  # n = 2, b = -2a - 3
    N2_PLUS = "n2_plus"  # n = 2, b = -2a - 5
    GENERAL = "general"


SMALL_N_TAGS = {1: (CaseTag.N1_MINUS, CaseTag.N1_PLUS), 2: (CaseTag.N2_MINUS, CaseTag.N2_PLUS)}


class AllIntegers:
    """Stand-in for the full parameter line (the simplest-cubic branch)."""

    def __contains__(self, a) -> bool:
        return isinstance(a, int)

    def __repr__(self) -> str:
        return "Z"

    def __eq__(self, other) -> bool:
        return isinstance(other, AllIntegers)

    def __hash__(self) -> int:
        return hash("AllIntegers")


@dataclass(frozen=True)
class MinPolyPair:
    f_eps: IntPoly
    f_delta: IntPoly
    n: int
    case_tag: CaseTag
    param: tuple[int, ...]  # (a,) for the n = 1, 2 branches, (U, V) for general

    def __post_init__(self):
        if self.f_eps != poly_reflect(self.f_delta, self.n):
            raise ValueError(f"f_eps != -f_delta(n - x) for {self}")

    @property
    def a(self) -> int:
        return self.param[0]

    def swapped(self) -> "MinPolyPair":
        return MinPolyPair(self.f_delta, self.f_eps, self.n, self.case_tag, self.param)


def _n1_minus(a: int) -> MinPolyPair:
    return MinPolyPair(IntPoly.monic(-(a + 3), a + 4, -1), IntPoly.monic(a, -(a - 1), -1), 1, CaseTag.N1_MINUS, (a,))


def _n1_plus(a: int) -> MinPolyPair:
    return MinPolyPair(IntPoly.monic(-(a + 3), a, 1), IntPoly.monic(a, -(a + 3), 1), 1, CaseTag.N1_PLUS, (a,))


def _n2_minus(a: int) -> MinPolyPair:
    return MinPolyPair(IntPoly.monic(-(a + 6), 2 * a + 9, -1), IntPoly.monic(a, -(2 * a + 3), -1), 2, CaseTag.N2_MINUS, (a,))


def _n2_plus(a: int) -> MinPolyPair:
    return MinPolyPair(IntPoly.monic(-(a + 6), 2 * a + 7, 1), IntPoly.monic(a, -(2 * a + 5), 1), 2, CaseTag.N2_PLUS, (a,))


_BUILDERS = {
    CaseTag.N1_MINUS: _n1_minus,
    CaseTag.N1_PLUS: _n1_plus,
    CaseTag.N2_MINUS: _n2_minus,
    CaseTag.N2_PLUS: _n2_plus,
}


def pair_for(tag: CaseTag, a: int) -> MinPolyPair:
    return _BUILDERS[CaseTag(tag)](a)


def minpoly_candidates_small_n(n: int, a: int) -> list[MinPolyPair]:
    """The two (f_eps, f_delta) pairs for n in {1, 2}: minus branch first."""
    if n not in SMALL_N_TAGS:
        raise ValueError(f"n must be 1 or 2, got {n}")
    return [pair_for(tag, a) for tag in SMALL_N_TAGS[n]]


def minpoly_general(n: int, n_delta: int) -> MinPolyPair:
    f_delta = IntPoly.monic(-(n + n_delta), n * n_delta, 1)
    f_eps = IntPoly.monic(-(2 * n - n_delta), n * n - n * n_delta, -1)
    return MinPolyPair(f_eps, f_delta, n, CaseTag.GENERAL, (n, -n_delta))


def minpoly_uv(U: int, V: int) -> MinPolyPair:
    """General-branch pair with n = U and n_delta = -V."""
    return minpoly_general(U, -V)


# closed-form discriminants, as coefficient lists (lowest first) in the parameter a
DISC_POLYS: dict[CaseTag, IntPoly] = {
    CaseTag.N1_MINUS: IntPoly((-31, -6, 7, 6, 1)),
    CaseTag.N1_PLUS: IntPoly((9, 3, 1)) * IntPoly((9, 3, 1)),
    CaseTag.N2_MINUS: IntPoly((9, 24, 4)) * IntPoly((9, 6, 1)),
    CaseTag.N2_PLUS: IntPoly((473, 510, 229, 48, 4)),
}


def uv_disc(U: int, V: int) -> int:
    return (U * V) ** 2 * (U + V) ** 2 - 2 * (U - V) ** 3 + 6 * (U**3 - V**3) - 27


def uv_quartic(U: int) -> IntPoly:
    """F_U(z) with F_U(V) = uv_disc(U, V)."""
    return IntPoly((4 * U**3 - 27, 6 * U * U, U**4 - 6 * U, 2 * U**3 - 4, U * U))


def disc_formula(pair: MinPolyPair) -> int:
    if pair.case_tag is CaseTag.GENERAL:
        return uv_disc(*pair.param)
    return DISC_POLYS[pair.case_tag](pair.a)


def _int_roots_quadratic(alpha: int, beta: int, gamma: int) -> set[int]:
    r = is_perfect_square(beta * beta - 4 * alpha * gamma)
    if r is None:
        return set()
    return {num // (2 * alpha) for num in (-beta + r, -beta - r) if num % (2 * alpha) == 0}


def cyclic_a_candidates() -> dict[CaseTag, object]:
    """Parameters a whose discriminant is a nonzero square, per branch.

    n = 1 minus:  (a^2+3a-1)^2 - 32 = k^2   ->  a^2+3a-1 = d/2 + 16/d,  d | 32
    n = 2 minus:  (2a+6)^2 - 27 = k^2       ->  2a+6 = d/2 + 27/(2d),   d | 27
    n = 2 plus:   (8a^2+48a+85)^2 + 343 = (4k)^2  ->  8a^2+48a+85 = d/2 - 343/(2d), d | 343
    n = 1 plus is the simplest-cubic family: every a.
    """
    n1 = set()
    for d in signed_divisors(32):
        num = d * d + 32
        if num % (2 * d) == 0:
            n1 |= _int_roots_quadratic(1, 3, -1 - num // (2 * d))
    n2m = set()
    for d in signed_divisors(27):
        num = d * d + 27
        if num % (2 * d) == 0:
            B = num // (2 * d)
            if (B - 6) % 2 == 0:
                n2m.add((B - 6) // 2)
    n2p = set()
    for d in signed_divisors(343):
        num = d * d - 343
        if num % (2 * d) == 0:
            n2p |= _int_roots_quadratic(8, 48, 85 - num // (2 * d))

    def nonzero_square(tag, a):
        v = DISC_POLYS[tag](a)
        return v != 0 and is_perfect_square(v) is not None

    return {
        CaseTag.N1_MINUS: frozenset(a for a in n1 if nonzero_square(CaseTag.N1_MINUS, a)),
        CaseTag.N1_PLUS: AllIntegers(),
        CaseTag.N2_MINUS: frozenset(a for a in n2m if nonzero_square(CaseTag.N2_MINUS, a)),
        CaseTag.N2_PLUS: frozenset(a for a in n2p if nonzero_square(CaseTag.N2_PLUS, a)),
    }


def negative_integer_points(p: IntPoly) -> set[int]:
    """Integers z with p(z) < 0, by exact evaluation over the Cauchy window."""
    B = cauchy_bound(p.coeffs)
    return {z for z in range(-B, B + 1) if p(z) < 0}


def complex_a_candidates() -> dict[CaseTag, frozenset[int]]:
    return {tag: frozenset(negative_integer_points(poly)) for tag, poly in DISC_POLYS.items()}


def complex_uv_candidates(u_max: int) -> list[tuple[int, int]]:
    """All (U, V) with 1 <= U <= u_max and uv_disc(U, V) < 0.

    The window for V comes from the Fujiwara root bound of F_U; a float64
    evaluation with a rigorous rounding margin discards points that are
    certainly positive, the rest are decided exactly.
    """
    if u_max < 1:
        raise ValueError("u_max must be >= 1")
    out: list[tuple[int, int]] = []
    eps = np.finfo(float).eps
    for U in range(1, u_max + 1):
        F = uv_quartic(U)
        B = fujiwara_bound(F.coeffs)
        z = np.arange(-B, B + 1, dtype=float)
        c = [float(v) for v in F.coeffs]
        val = (((c[4] * z + c[3]) * z + c[2]) * z + c[1]) * z + c[0]
        za = np.abs(z)
        mag = (((abs(c[4]) * za + abs(c[3])) * za + abs(c[2])) * za + abs(c[1])) * za + abs(c[0])
        maybe = val < 16 * eps * mag + 1.0
        for zi in np.nonzero(maybe)[0]:
            V = int(z[zi])
            if F(V) < 0:
                out.append((U, V))
    return out


def small_n_pairs(candidates: dict[CaseTag, object]) -> list[MinPolyPair]:
    """Materialise the finite branches of a candidate map (skips the family)."""
    pairs = []
    for tag, values in candidates.items():
        if isinstance(values, AllIntegers):
            continue
        for a in sorted(values):
            pairs.append(pair_for(tag, a))
    return pairs


def pair_discriminant(pair: MinPolyPair) -> int:
    return cubic_discriminant(pair.f_eps)
