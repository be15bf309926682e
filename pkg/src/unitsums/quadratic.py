"""N_K for the rationals and quadratic fields.

Real quadratic fields reduce to the Pell-type equation x^2 - D y^2 = +-4; the
fundamental solution comes from an exact continued-fraction expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import factorize

PERIOD_CAP = 10**6


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    sign: int  # +4 or -4

    def __post_init__(self):
        if self.sign not in (4, -4):
            raise ValueError("sign must be +4 or -4")


def _check_squarefree(D: int) -> None:
    if D < 2:
        raise ValueError(f"D must be >= 2, got {D}")
    if any(e > 1 for e in factorize(D).values()):
        raise ValueError(f"D = {D} is not squarefree")


def _convergents(P: int, Q: int, D: int):
    """Convergents h/k of (P + sqrt(D))/Q; requires Q | D - P^2."""
    r = isqrt(D)
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    for _ in range(PERIOD_CAP):
        # reduced from the first step on, so Q stays positive
        a = (P + r) // Q
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        yield h1, k1
        P = a * Q - P
        Q = (D - P * P) // Q
    raise RuntimeError(f"continued fraction of sqrt({D}) exceeded {PERIOD_CAP} steps")


def pell_pm4_fundamental(D: int) -> PellSolution:
    """Smallest x, y >= 1 with x^2 - D y^2 = +-4."""
    _check_squarefree(D)
    if D % 4 == 1:
        # expand (1 + sqrt D)/2; norm(h - k*(1+sqrt D)/2) = +-1 gives (2h - k, k)
        for h, k in _convergents(1, 2, D):
            x, y = 2 * h - k, k
            v = x * x - D * y * y
            if v in (4, -4) and x >= 1:
                return PellSolution(x, y, v)
    else:
        for h, k in _convergents(0, 1, D):
            v = h * h - D * k * k
            if v in (1, -1):
                return PellSolution(2 * h, 2 * k, 4 * v)
    raise AssertionError("unreachable")


def nk_real_quadratic(D: int, X: int) -> list[int]:
    """Elements n <= X of N_K for K = Q(sqrt D), via traces of unit powers."""
    _check_squarefree(D)
    if X < 1:
        raise ValueError("X must be >= 1")
    fund = pell_pm4_fundamental(D)
    out = {2} if X >= 2 else set()
    # (x + y sqrt D)/2 times the fundamental unit
    x, y = fund.x, fund.y
    while x <= X:
        out.add(x)
        x, y = (fund.x * x + D * fund.y * y) // 2, (fund.x * y + fund.y * x) // 2
    return sorted(out)


def nk_real_quadratic_bruteforce(D: int, X: int, y_max: int | None = None) -> list[int]:
    """Direct scan of 1 <= x <= X, 0 <= y <= y_max for x^2 - D y^2 = +-4."""
    y_max = X if y_max is None else y_max
    out = set()
    for x in range(1, X + 1):
        for y in range(0, y_max + 1):
            if x * x - D * y * y in (4, -4):
                out.add(x)
                break
    return sorted(out)


def nk_rank_zero(kind: str, D: int | None = None) -> set[int]:
    """``kind`` is "rationals" or "imag_quadratic" (with squarefree D < 0)."""
    if kind == "rationals":
        return {2}
    if kind == "imag_quadratic":
        if D is None or D >= 0:
            raise ValueError("imaginary quadratic field needs D < 0")
        if D != -1 and any(e > 1 for e in factorize(D).values()):
            raise ValueError(f"D = {D} is not squarefree")
        return {1, 2} if D == -3 else {2}
    raise ValueError(f"unknown kind {kind!r}")
