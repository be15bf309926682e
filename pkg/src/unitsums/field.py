"""Cubic number fields presented by a monic integral defining polynomial.

Elements live in the power basis {1, w, w^2} with exact rational coordinates.
Numerical embeddings (mpmath) are only used to *find* candidate roots in
:func:`roots_in_field`; every returned value is confirmed by exact substitution.
"""

from __future__ import annotations

import contextlib
import contextvars
import enum
import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import mpmath

from .arith import IntPoly, cubic_discriminant, is_perfect_square, rational_roots_monic

DEFAULT_PRECISION = 128
PRECISION_CAP = 4096

_prec_cap: contextvars.ContextVar[int] = contextvars.ContextVar("prec_cap", default=PRECISION_CAP)


@contextlib.contextmanager
def precision_cap(bits: int):
    """Temporarily change the largest working precision roots_in_field may reach."""
    if bits < DEFAULT_PRECISION:
        raise ValueError(f"precision cap must be >= {DEFAULT_PRECISION}")
    token = _prec_cap.set(bits)
    try:
        yield
    finally:
        _prec_cap.reset(token)


class Classification(str, enum.Enum):
    CYCLIC = "cyclic"
    COMPLEX = "complex"
    TOTALLY_REAL_NONCYCLIC = "totally_real_noncyclic"


class InvalidFieldError(ValueError):
    """The polynomial does not define a cubic field (wrong shape or reducible)."""


class PrecisionExhausted(RuntimeError):
    pass


class CubicField:
    """Q(w) for w a root of a monic irreducible integer cubic."""

    def __init__(self, poly: IntPoly, label: str | None = None):
        if poly.degree != 3 or poly.leading != 1:
            raise InvalidFieldError(f"need a monic cubic, got {poly}")
        roots = rational_roots_monic(poly)
        if roots:
            raise InvalidFieldError(f"{poly} is reducible (root {roots[0]})")
        disc = cubic_discriminant(poly)
        if disc == 0:
            raise InvalidFieldError(f"{poly} has a repeated root")
        if disc < 0:
            cls = Classification.COMPLEX
        elif is_perfect_square(disc) is not None:
            cls = Classification.CYCLIC
        else:
            cls = Classification.TOTALLY_REAL_NONCYCLIC
        self.poly = poly
        self.disc = disc
        self.classification = cls
        self.label = label
        a0, a1, a2 = poly.coeffs[:3]
        # w^3 and w^4 expressed in the power basis
        self._w3 = (Fraction(-a0), Fraction(-a1), Fraction(-a2))
        self._w4 = (a2 * a0, a2 * a1 - a0, a2 * a2 - a1)
        self._w4 = tuple(Fraction(c) for c in self._w4)
        self._embeddings: dict[int, EmbeddingSet] = {}

    def __repr__(self) -> str:
        tag = f" {self.label}" if self.label else ""
        return f"<CubicField{tag} {self.poly} disc={self.disc} {self.classification.value}>"

    def __eq__(self, other) -> bool:
        return isinstance(other, CubicField) and self.poly == other.poly

    def __hash__(self) -> int:
        return hash(("CubicField", self.poly))

    @property
    def is_cyclic(self) -> bool:
        return self.classification is Classification.CYCLIC

    @property
    def is_complex(self) -> bool:
        return self.classification is Classification.COMPLEX

    def element(self, c0=0, c1=0, c2=0) -> "FieldElement":
        return FieldElement(self, (c0, c1, c2))

    @property
    def gen(self) -> "FieldElement":
        return self.element(0, 1, 0)

    @property
    def one(self) -> "FieldElement":
        return self.element(1)

    def embeddings(self, prec: int = DEFAULT_PRECISION) -> "EmbeddingSet":
        if prec not in self._embeddings:
            self._embeddings[prec] = EmbeddingSet.compute(self.poly, prec)
        return self._embeddings[prec]

    @cached_property
    def automorphisms(self) -> tuple["FieldElement", ...]:
        """Images of the generator under Aut(K); just (w,) unless K is cyclic."""
        if not self.is_cyclic:
            return (self.gen,)
        images = roots_in_field(self.poly, self)
        if len(images) != 3:
            raise RuntimeError(f"cyclic field {self} has {len(images)} automorphisms")
        # identity first, then the rest in sorted order
        images.sort(key=lambda e: (e != self.gen, e.sort_key()))
        return tuple(images)


def make_field(p: IntPoly, label: str | None = None) -> CubicField:
    return CubicField(p, label)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class FieldElement:
    __slots__ = ("field", "c")

    def __init__(self, field: CubicField, coords: Sequence):
        self.field = field
        self.c = tuple(_frac(v) for v in coords)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, (other, 0, 0))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, [a + b for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, [a - b for a, b in zip(self.c, o.c)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.c, o.c
        d0 = a[0] * b[0]
        d1 = a[0] * b[1] + a[1] * b[0]
        d2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        d3 = a[1] * b[2] + a[2] * b[1]
        d4 = a[2] * b[2]
        w3, w4 = self.field._w3, self.field._w4
        return FieldElement(
            self.field,
            [d0 + d3 * w3[0] + d4 * w4[0], d1 + d3 * w3[1] + d4 * w4[1], d2 + d3 * w3[2] + d4 * w4[2]],
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.field.one, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.c == (Fraction(other), 0, 0)
        return isinstance(other, FieldElement) and self.field == other.field and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.field.poly, self.c))

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        return format_element(self.c, "w")

    # structure ------------------------------------------------------------
    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0

    def sort_key(self) -> tuple:
        return self.c

    def mult_matrix(self) -> list[list[Fraction]]:
        """Columns are the coordinates of x*1, x*w, x*w^2."""
        w = self.field.gen
        cols = [self.c, (self * w).c, (self * w * w).c]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    def charpoly(self) -> tuple[Fraction, ...]:
        """Characteristic polynomial of multiplication-by-x, lowest degree first."""
        m = self.mult_matrix()
        tr = m[0][0] + m[1][1] + m[2][2]
        e2 = (
            m[0][0] * m[1][1] - m[0][1] * m[1][0]
            + m[0][0] * m[2][2] - m[0][2] * m[2][0]
            + m[1][1] * m[2][2] - m[1][2] * m[2][1]
        )
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        return (-det, e2, -tr, Fraction(1))

    def minpoly(self) -> tuple[Fraction, ...]:
        """Monic minimal polynomial over Q (degree 1 or 3), lowest degree first."""
        if self.is_rational():
            return (-self.c[0], Fraction(1))
        return self.charpoly()

    def int_minpoly(self) -> IntPoly | None:
        mp = self.minpoly()
        if any(c.denominator != 1 for c in mp):
            return None
        return IntPoly(int(c) for c in mp)

    def norm(self) -> Fraction:
        return -self.charpoly()[0]

    def trace(self) -> Fraction:
        return -self.charpoly()[2]

    def is_integral(self) -> bool:
        return self.int_minpoly() is not None

    def is_unit(self) -> bool:
        mp = self.int_minpoly()
        return mp is not None and mp.coeffs[0] in (1, -1)

    def inverse(self) -> "FieldElement":
        if all(v == 0 for v in self.c):
            raise ZeroDivisionError("inverse of zero")
        c0, c1, c2, _ = self.charpoly()
        # Cayley-Hamilton: x^3 + c2 x^2 + c1 x + c0 = 0
        return (self * self + self * c2 + c1) * (-1 / c0)

    def apply(self, image_of_gen: "FieldElement") -> "FieldElement":
        """Image under the embedding w -> image_of_gen."""
        s = image_of_gen
        return s * s * self.c[2] + s * self.c[1] + self.c[0]

    def numeric(self, index: int, prec: int = DEFAULT_PRECISION):
        theta = self.field.embeddings(prec).roots[index]
        with mpmath.workprec(prec):
            return (mpmath.mpf(self.c[0].numerator) / self.c[0].denominator
                    + mpmath.mpf(self.c[1].numerator) / self.c[1].denominator * theta
                    + mpmath.mpf(self.c[2].numerator) / self.c[2].denominator * theta * theta)


def format_element(c: Sequence[Fraction], var: str = "w") -> str:
    terms = []
    for deg in (2, 1, 0):
        v = Fraction(c[deg])
        if v == 0:
            continue
        mag = abs(v)
        mag_s = str(mag)
        if deg == 0:
            body = mag_s
        else:
            xs = var if deg == 1 else f"{var}^2"
            body = xs if mag == 1 else f"{mag_s}*{xs}"
        terms.append(("-" if v < 0 else "+", body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


def galois_conjugates(x: FieldElement) -> list[FieldElement]:
    """The orbit of x under Aut(K).

    For non-cyclic cubic fields Aut(K) is trivial and [x] is returned; callers
    can tell via ``x.field.is_cyclic``.
    """
    orbit: list[FieldElement] = []
    for s in x.field.automorphisms:
        y = x.apply(s)
        if y not in orbit:
            orbit.append(y)
    return orbit


@dataclass(frozen=True)
class EmbeddingSet:
    """Complex approximations of the three roots of a cubic at ``prec`` bits.

    Real roots come first in ascending order, then the complex pair with
    positive imaginary part first.  Index 0 is the distinguished embedding.
    """

    poly: IntPoly
    prec: int
    roots: tuple = dc_field(repr=False)

    @classmethod
    def compute(cls, poly: IntPoly, prec: int) -> "EmbeddingSet":
        return cls(poly, prec, tuple(_numeric_roots(poly, prec)))

    def refine(self, prec: int) -> "EmbeddingSet":
        return EmbeddingSet.compute(self.poly, prec)

    def check(self) -> bool:
        """Sum and product of roots agree with the coefficients to 2^(-prec/2)."""
        with mpmath.workprec(self.prec):
            tol = mpmath.mpf(2) ** (-self.prec // 2)
            s = sum(self.roots)
            pr = self.roots[0] * self.roots[1] * self.roots[2]
            ok_sum = abs(s + self.poly.coeffs[2]) <= tol * (1 + abs(self.poly.coeffs[2]))
            ok_prod = abs(pr + self.poly.coeffs[0]) <= tol * (1 + abs(self.poly.coeffs[0]))
            distinct = all(abs(a - b) > tol for a, b in itertools.combinations(self.roots, 2))
        return bool(ok_sum and ok_prod and distinct)

    @cached_property
    def vandermonde_inverse(self):
        with mpmath.workprec(self.prec + 32):
            v = mpmath.matrix([[1, t, t * t] for t in self.roots])
            return v**-1


def _numeric_roots(poly: IntPoly, prec: int) -> list:
    coeffs = list(reversed(poly.coeffs))
    with mpmath.workprec(prec + 32):
        steps = 100
        while True:
            try:
                rts = mpmath.polyroots(coeffs, maxsteps=steps, extraprec=prec)
                break
            except mpmath.libmp.NoConvergence:
                if steps > 3200:
                    raise PrecisionExhausted(f"no convergence rooting {poly}")
                steps *= 2
        tol = mpmath.mpf(2) ** (-(prec // 2))
        cleaned = []
        for r in rts:
            r = mpmath.mpc(r)
            if abs(r.imag) <= tol * (1 + abs(r)):
                cleaned.append(mpmath.mpc(r.real, 0))
            else:
                cleaned.append(r)
    reals = sorted((r for r in cleaned if r.imag == 0), key=lambda r: r.real)
    cplx = sorted((r for r in cleaned if r.imag != 0), key=lambda r: (r.real, -r.imag))
    return reals + cplx


def _eval_in_field(p: IntPoly, x: FieldElement) -> FieldElement:
    acc = x.field.element(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def roots_in_field(
    p: IntPoly,
    K: CubicField,
    prec: int = DEFAULT_PRECISION,
    prec_cap: int | None = None,
) -> list[FieldElement]:
    """All roots of p in K, exactly.

    Each ordered choice of roots of p under the three embeddings determines a
    candidate through the Vandermonde system; coordinates are rounded to the
    grid (1/(lc(p)*|disc|)) Z and confirmed by exact substitution.
    """
    if not p.coeffs:
        raise ValueError("roots of the zero polynomial")
    if p.degree == 0:
        return []
    if prec_cap is None:
        prec_cap = _prec_cap.get()
    denom = abs(K.disc) * abs(p.leading)
    while prec <= prec_cap:
        emb = K.embeddings(prec)
        proots = _numeric_roots(p, prec)
        vinv = emb.vandermonde_inverse
        found: dict[tuple, FieldElement] = {}
        unsure = False
        with mpmath.workprec(prec + 32):
            tol = mpmath.mpf(2) ** (-(prec // 2))
            limit = mpmath.mpf(2) ** (prec // 4)
            for triple in itertools.product(proots, repeat=3):
                c = vinv * mpmath.matrix(list(triple))
                coords = []
                for i in range(3):
                    ci = c[i]
                    if abs(mpmath.im(ci)) > tol * (1 + abs(ci)):
                        break
                    z = mpmath.re(ci) * denom
                    r = mpmath.nint(z)
                    if abs(z - r) > tol * max(1, abs(z)):
                        break
                    if abs(z) > limit:
                        unsure = True
                    coords.append(Fraction(int(r), denom))
                else:
                    x = K.element(*coords)
                    if x.c in found:
                        continue
                    if _eval_in_field(p, x) == 0:
                        found[x.c] = x
                    else:
                        unsure = True
        if not unsure:
            return [found[k] for k in sorted(found)]
        prec *= 2
    raise PrecisionExhausted(f"roots of {p} in {K} not resolved at {prec_cap} bits")


def eval_poly_in_field(p: IntPoly, x: FieldElement) -> FieldElement:
    return _eval_in_field(p, x)
