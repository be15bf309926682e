"""Explicit constructions: the M_d lower-bound fields, Ennola's fields, the bound formula."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ..arith import IntPoly
from ..field import CubicField, FieldElement, make_field
from .solutions import Provenance, UnitSolution


class QuotientRing:
    """Z[x]/(P) for a monic P, elements as coefficient tuples of length deg P."""

    def __init__(self, P: IntPoly):
        if P.leading != 1 or P.degree < 1:
            raise ValueError("need a monic modulus of positive degree")
        self.P = P
        self.d = P.degree

    def reduce(self, coeffs) -> tuple[int, ...]:
        c = list(coeffs)
        for k in range(len(c) - 1, self.d - 1, -1):
            top = c[k]
            if top:
                for i in range(self.d):
                    c[k - self.d + i] -= top * self.P.coeffs[i]
            c[k] = 0
        c += [0] * (self.d - len(c))
        return tuple(c[: self.d])

    def mul(self, a, b) -> tuple[int, ...]:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self.reduce(out)

    def const(self, c: int) -> tuple[int, ...]:
        return self.reduce([c])

    def linear(self, shift: int) -> tuple[int, ...]:
        """x + shift."""
        return self.reduce([shift, 1])

    def one(self) -> tuple[int, ...]:
        return self.const(1)


MD_MAX = 12


@dataclass(frozen=True)
class MdConstruction:
    poly: IntPoly
    values: list[tuple[int, int, int]]  # (i, j, n) with (x - 2^i) - (x - 2^j) = n

    @property
    def distinct_values(self) -> set[int]:
        return {n for _, _, n in self.values}


def md_poly(d: int) -> IntPoly:
    P = IntPoly((1,))
    for i in range(1, d + 1):
        P = P * IntPoly((-(2**i), 1))
    return P - IntPoly((1,))


def md_construction(d: int) -> MdConstruction:
    """P = (x-2)(x-4)...(x-2^d) - 1 and the binom(d, 2) unit sums it carries.

    Each x - 2^i is a unit of Z[x]/(P) with inverse prod_{j != i} (x - 2^j);
    (x - 2^i) + (-(x - 2^j)) = 2^j - 2^i for i < j.
    """
    if not 2 <= d <= MD_MAX:
        raise ValueError(f"d must be in 2..{MD_MAX}")
    P = md_poly(d)
    R = QuotientRing(P)
    lin = {i: R.linear(-(2**i)) for i in range(1, d + 1)}
    for i in lin:
        inv = R.one()
        for j in lin:
            if j != i:
                inv = R.mul(inv, lin[j])
        if R.mul(lin[i], inv) != R.one():
            raise ArithmeticError(f"x - 2^{i} is not a unit modulo {P}")
    values = []
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            diff = tuple(a - b for a, b in zip(lin[i], lin[j]))
            n = 2**j - 2**i
            if diff != R.const(n):
                raise ArithmeticError(f"difference for ({i}, {j}) is not {n}")
            values.append((i, j, n))
    assert len(values) == comb(d, 2)
    return MdConstruction(P, values)


def ennola_poly(l: int) -> IntPoly:
    """x^3 + (l-1) x^2 - l x - 1."""
    return IntPoly.monic(l - 1, -l, -1)


@dataclass(frozen=True)
class EnnolaCheck:
    label: str
    eps: FieldElement
    delta: FieldElement
    n: int
    sum_ok: bool
    units_ok: bool

    @property
    def verified(self) -> bool:
        return self.sum_ok and self.units_ok

    @property
    def solution(self) -> UnitSolution | None:
        if not self.verified:
            return None
        return UnitSolution(self.eps.field, self.eps, self.delta, self.n, Provenance.FAMILY_SIMPLEST_CUBIC, self.label)


def _check(label: str, eps: FieldElement, delta: FieldElement, n: int) -> EnnolaCheck:
    K = eps.field
    return EnnolaCheck(label, eps, delta, n, eps + delta == K.element(n), eps.is_unit() and delta.is_unit())


def ennola_checks(l: int) -> list[EnnolaCheck]:
    """The four identities over x^3 + (l-1)x^2 - lx - 1, with both readings of the last one.

    Labels: "l", "l+1", "l+2", and "l+3 (+rho^2)" / "l+3 (-rho^2)" for the two
    sign variants of the second summand of the fourth identity.
    """
    if l < 3:
        raise ValueError("l must be >= 3")
    K: CubicField = make_field(ennola_poly(l))
    r = K.gen
    r2 = r * r
    return [
        _check("l", -r, l + r, l),
        _check("l+1", 1 - r, l + r, l + 1),
        _check("l+2", l * r + r2, l + 2 - l * r - r2, l + 2),
        _check("l+3 (+rho^2)", 1 + l * r + r2, l + 2 - l * r + r2, l + 3),
        _check("l+3 (-rho^2)", 1 + l * r + r2, l + 2 - l * r - r2, l + 3),
    ]


def ennola_solutions(l: int) -> list[UnitSolution]:
    """The verified identities as unit solutions (failures are visible via ennola_checks)."""
    return [c.solution for c in ennola_checks(l) if c.verified]


def theoretical_bound(d: int) -> int:
    """d * 24^(324 (2d + 2)) + 2."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return d * 24 ** (324 * (2 * d + 2)) + 2
