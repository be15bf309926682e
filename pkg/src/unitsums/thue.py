"""Bounded searches over binary cubic forms.

``thue_bounded`` locates the real roots of F(x, y) = lam in float64 (vectorised
over all targets and a block of y values) and confirms every candidate with
exact integer arithmetic.  Whenever the float estimate cannot be trusted to
within one unit the row is re-solved with the exact integer solver
:func:`int_roots_monic_cubic`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable

import numpy as np

from .arith import cauchy_bound, integer_root, is_perfect_square

_EPS = np.finfo(float).eps
_BLOCK = 200_000


@dataclass(frozen=True)
class BinaryCubicForm:
    """c30 x^3 + c21 x^2 y + c12 x y^2 + c03 y^3."""

    c30: int
    c21: int
    c12: int
    c03: int

    def __post_init__(self):
        if self.c30 == self.c21 == self.c12 == self.c03 == 0:
            raise ValueError("zero form")

    def __call__(self, x: int, y: int) -> int:
        return ((self.c30 * x + self.c21 * y) * x + self.c12 * y * y) * x + self.c03 * y**3

    def __neg__(self) -> "BinaryCubicForm":
        return BinaryCubicForm(-self.c30, -self.c21, -self.c12, -self.c03)

    @classmethod
    def uvw(cls, W: int) -> "BinaryCubicForm":
        """U^3 - W U^2 V - (W+3) U V^2 - V^3."""
        return cls(1, -W, -(W + 3), -1)

    @classmethod
    def hoshi_miyake(cls, m: int) -> "BinaryCubicForm":
        """x^3 - 2m x^2 y - 9m x y^2 - m(2m+27) y^3."""
        return cls(1, -2 * m, -9 * m, -m * (2 * m + 27))


@dataclass(frozen=True)
class ThueHit:
    x: int
    y: int
    value: int
    primitive: bool


def int_roots_monic_cubic(b2: int, b1: int, b0: int) -> list[int]:
    """Integer roots of x^3 + b2 x^2 + b1 x + b0, exactly.

    Splits the integers into the (at most three) ranges on which the cubic is
    monotone and bisects each one.
    """

    def p(x: int) -> int:
        return ((x + b2) * x + b1) * x + b0

    bound = cauchy_bound([b0, b1, b2, 1])
    d = b2 * b2 - 3 * b1
    if d <= 0:
        ranges = [(-bound, bound, 1)]
    else:
        r = isqrt(d)
        # critical points (-b2 -+ sqrt d)/3, bracketed by integers
        lo_crit = (-b2 - r - 1) // 3  # <= x_minus
        hi_crit = -((b2 - r - 1) // 3)  # >= x_plus
        ranges = [
            (-bound, lo_crit, 1),
            (lo_crit + 1, hi_crit - 1, -1),
            (hi_crit, bound, 1),
        ]
    roots: set[int] = set()
    # points adjacent to the critical points are checked directly
    if d > 0:
        for x in range(lo_crit - 1, lo_crit + 3):
            if p(x) == 0:
                roots.add(x)
        for x in range(hi_crit - 2, hi_crit + 2):
            if p(x) == 0:
                roots.add(x)
    for lo, hi, direction in ranges:
        if lo > hi:
            continue
        a, b = lo, hi
        while a <= b:
            mid = (a + b) // 2
            v = p(mid) * direction
            if v == 0:
                roots.add(mid)
                break
            if v < 0:
                a = mid + 1
            else:
                b = mid - 1
    return sorted(roots)


def _real_roots_depressed(P: float, Q: np.ndarray):
    """Real roots of s^3 + P s + Q (vectorised in Q); NaN where absent.

    Also returns a mask of entries close to a double root, where the
    classification into one/three real roots is not trustworthy.
    """
    n = Q.shape[0]
    out = np.full((n, 3), np.nan)
    disc = 4 * P**3 + 27 * Q * Q  # < 0 <=> three real roots
    scale = 4 * abs(P) ** 3 + 27 * Q * Q
    near_double = np.abs(disc) <= 1e-8 * scale
    three = disc < 0
    if P < 0:
        m = 2 * np.sqrt(-P / 3)
        with np.errstate(invalid="ignore"):
            arg = np.clip(3 * Q / (P * m), -1.0, 1.0)
        phi = np.arccos(arg) / 3
        for k in range(3):
            vals = m * np.cos(phi - 2 * np.pi * k / 3)
            out[three, k] = vals[three]
    one = ~three
    if np.any(one):
        q = Q[one]
        inner = q * q / 4 + P**3 / 27
        inner = np.maximum(inner, 0.0)
        A = -np.sign(q) * np.cbrt(np.abs(q) / 2 + np.sqrt(inner))
        with np.errstate(divide="ignore", invalid="ignore"):
            s = np.where(A != 0, A - P / (3 * A), 0.0)
        out[one, 0] = s
    return out, near_double


def _search_positive_y(p2: int, p1: int, p0: int, targets: list[int], y_bound: int) -> list[tuple[int, int, int]]:
    """All (x, y, lam) with 1 <= y <= y_bound and x^3 + p2 x^2 y + p1 x y^2 + p0 y^3 = lam."""
    if y_bound < 1 or not targets:
        return []
    shift = Fraction(p2, 3)
    P_exact = p1 - Fraction(p2 * p2, 3)
    Q0_exact = Fraction(2 * p2**3, 27) - Fraction(p2 * p1, 3) + p0
    P, Q0, sh = float(P_exact), float(Q0_exact), float(shift)
    lam_f = np.array([float(t) for t in targets])
    L = len(targets)
    rows_per_block = max(1, _BLOCK // L)
    hits: list[tuple[int, int, int]] = []
    exact_rows: set[tuple[int, int]] = set()

    def F(x: int, y: int) -> int:
        return ((x + p2 * y) * x + p1 * y * y) * x + p0 * y**3

    for y0 in range(1, y_bound + 1, rows_per_block):
        ys = np.arange(y0, min(y_bound, y0 + rows_per_block - 1) + 1, dtype=float)
        yy = np.repeat(ys, L)
        li = np.tile(np.arange(L), len(ys))
        v = lam_f[li] / yy**3
        Q = Q0 - v
        S, near_double = _real_roots_depressed(P, Q)
        for k in range(3):
            s = S[:, k]
            ok = ~np.isnan(s)
            # two Newton steps on the depressed cubic
            for _ in range(2):
                g = (s * s + P) * s + Q
                dg = 3 * s * s + P
                with np.errstate(divide="ignore", invalid="ignore"):
                    step = np.where(ok & (dg != 0), g / dg, 0.0)
                s = s - np.nan_to_num(step)
            g = (s * s + P) * s + Q
            dg = np.abs(3 * s * s + P)
            mag = np.abs(s) ** 3 + abs(P) * np.abs(s) + abs(Q0) + np.abs(v)
            with np.errstate(divide="ignore", invalid="ignore"):
                err_s = (np.abs(g) + 8 * _EPS * mag) / dg
            t = s - sh
            xt = t * yy
            err_x = yy * err_s + 4 * _EPS * (np.abs(xt) + abs(sh) * yy) + 1e-9
            bad = ok & ~(err_x < 0.5)
            near = ok & (err_x < 0.5) & (np.abs(xt - np.round(xt)) <= err_x)
            for idx in np.nonzero(bad | (near_double & ok))[0]:
                exact_rows.add((int(yy[idx]), int(li[idx])))
            for idx in np.nonzero(near)[0]:
                y = int(yy[idx])
                lam = targets[li[idx]]
                c = int(np.round(xt[idx]))
                for x in (c - 1, c, c + 1):
                    if F(x, y) == lam:
                        hits.append((x, y, lam))
    for y, j in sorted(exact_rows):
        lam = targets[j]
        for x in int_roots_monic_cubic(p2 * y, p1 * y * y, p0 * y**3 - lam):
            hits.append((x, y, lam))
    return sorted(set(hits), key=lambda h: (h[1], h[0], h[2]))


def thue_bounded(
    form: BinaryCubicForm,
    targets: Iterable[int],
    y_bound: int,
    require_primitive: bool = False,
    require_y_positive: bool = False,
) -> list[ThueHit]:
    """Integer (x, y) with |y| <= y_bound (or 0 < y <= y_bound) and form(x, y) in targets."""
    if form.c30 not in (1, -1):
        raise ValueError("leading x-coefficient must be +-1")
    if y_bound < 0:
        raise ValueError("y_bound must be >= 0")
    tset = sorted(set(int(t) for t in targets))
    if form.c30 == -1:
        work, wtargets, flip = -form, [-t for t in tset], -1
    else:
        work, wtargets, flip = form, tset, 1
    found: set[tuple[int, int, int]] = set()
    if not require_y_positive:
        for lam in wtargets:
            x = integer_root(lam, 3)
            if x is not None:
                found.add((x, 0, lam))
    search = set(wtargets)
    if not require_y_positive:
        search |= {-t for t in wtargets}
    wset = set(wtargets)
    for x, y, lam in _search_positive_y(work.c21, work.c12, work.c03, sorted(search), y_bound):
        if lam in wset:
            found.add((x, y, lam))
        if not require_y_positive and -lam in wset:
            found.add((-x, -y, -lam))
    out = []
    for x, y, lam in sorted(found, key=lambda h: (h[1], h[0])):
        value = lam * flip
        assert form(x, y) == value
        prim = gcd(x, y) == 1
        if require_primitive and not prim:
            continue
        out.append(ThueHit(x, y, value, prim))
    return out


def uvw_solve_W(U: int, V: int) -> list[int]:
    """Integers W with U^3 - W U^2 V - (W+3) U V^2 - V^3 = W^2 + 3W + 9.

    For fixed (U, V) this is the quadratic
    W^2 + (3 + U^2 V + U V^2) W + (9 - U^3 + 3 U V^2 + V^3) = 0.
    """
    B = 3 + U * U * V + U * V * V
    C = 9 - U**3 + 3 * U * V * V + V**3
    r = is_perfect_square(B * B - 4 * C)
    if r is None:
        return []
    return sorted({w // 2 for w in (-B + r, -B - r) if w % 2 == 0})


def uvw_lhs(U: int, V: int, W: int) -> int:
    return U**3 - W * U * U * V - (W + 3) * U * V * V - V**3


def uvw_rhs(W: int) -> int:
    return W * W + 3 * W + 9


def uvw_search(bound: int) -> list[tuple[int, int, int]]:
    """All (U, V, W) with |U|, |V| <= bound solving the (U, V, W) equation.

    Only pairs with U + V >= 0 are solved; the rest come from the involution
    (U, V, W) -> (-V, -U, -W - 3).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out: set[tuple[int, int, int]] = set()
    for U in range(-bound, bound + 1):
        for V in range(max(-bound, -U), bound + 1):
            for W in uvw_solve_W(U, V):
                out.add((U, V, W))
                out.add((-V, -U, -W - 3))
    return sorted(out)
