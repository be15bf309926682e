"""Exact integer helpers and dense integer polynomials.

Python ints are the big integers and :class:`fractions.Fraction` the
rationals; nothing in this module ever touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntPoly:
    """Dense univariate polynomial with integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monic(cls, *lower: int) -> "IntPoly":
        """``IntPoly.monic(a2, a1, a0)`` is x^3 + a2 x^2 + a1 x + a0."""
        return cls(list(reversed(lower)) + [1])

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse ``"x^3-2*x+1"`` style strings (``**`` also accepted)."""
        s = re.sub(r"\s+", "", text).replace("**", "^").replace("−", "-")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        terms = re.findall(r"[+-][^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        out: dict[int, int] = {}
        for t in terms:
            m = re.fullmatch(r"([+-])(\d*)\*?(x(?:\^(\d+))?)?", t)
            if m is None or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse term {t!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) else 1
            deg = 0 if not m.group(3) else int(m.group(4) or 1)
            out[deg] = out.get(deg, 0) + sign * coef
        top = max(out) if out else 0
        return cls(out.get(i, 0) for i in range(top + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def compose_linear(self, shift: int, scale: int) -> "IntPoly":
        """Return p(shift + scale*x)."""
        result = IntPoly(())
        lin = IntPoly((shift, scale))
        for c in reversed(self.coeffs):
            result = result * lin + IntPoly((c,))
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for deg in range(self.degree, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                xs = "x" if deg == 1 else f"x^{deg}"
                body = xs if mag == 1 else f"{mag}*{xs}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def poly_eval(p: IntPoly, x):
    return p(x)


def poly_reflect(p: IntPoly, n: int) -> IntPoly:
    """The monic cubic -p(n - x); an involution for fixed n."""
    if p.degree != 3:
        raise ValueError(f"poly_reflect needs a cubic, got degree {p.degree}")
    return -p.compose_linear(n, -1)


def cubic_discriminant(p: IntPoly) -> int:
    if p.degree != 3 or p.leading != 1:
        raise ValueError(f"expected a monic cubic, got {p}")
    c, b, a = p.coeffs[0], p.coeffs[1], p.coeffs[2]
    return 18 * a * b * c - 4 * a**3 * c + a * a * b * b - 4 * b**3 - 27 * c * c


def poly_discriminant(p: IntPoly) -> int:
    """Discriminant via the Sylvester resultant of p and p' (any degree >= 1).

    Slow and generic; the closed cubic formula is the one used on hot paths.
    """
    n = p.degree
    if n < 1:
        raise ValueError("discriminant of a constant")
    dp = IntPoly(i * p.coeffs[i] for i in range(1, n + 1))
    res = resultant(p, dp)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q = Fraction(sign * res, p.leading)
    assert q.denominator == 1
    return int(q)


def resultant(p: IntPoly, q: IntPoly) -> int:
    """Resultant via fraction-free determinant of the Sylvester matrix."""
    m, n = p.degree, q.degree
    size = m + n
    if size == 0:
        return 1
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return bareiss_det(rows)


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def is_perfect_square(x: int) -> int | None:
    if x < 0:
        return None
    r = isqrt(x)
    return r if r * r == x else None


def integer_root(x: int, k: int) -> int | None:
    """Exact integer k-th root of x, or None. Odd k keeps the sign of x."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return x
    if x < 0:
        if k % 2 == 0:
            return None
        r = integer_root(-x, k)
        return None if r is None else -r
    if x < 2:
        return x
    # Newton on integers, starting above the root
    r = 1 << -(-x.bit_length() // k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    return r if r**k == x else None


def factorize(x: int) -> dict[int, int]:
    """Trial division; intended for the small inputs in this package."""
    x = abs(x)
    if x == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3):
        while x % p == 0:
            out[p] = out.get(p, 0) + 1
            x //= p
    p = 5
    while p * p <= x:
        for q in (p, p + 2):
            while x % q == 0:
                out[q] = out.get(q, 0) + 1
                x //= q
        p += 6
    if x > 1:
        out[x] = out.get(x, 0) + 1
    return out


def divisors_from_factorization(fac: dict[int, int]) -> list[int]:
    divs = [1]
    for p, e in fac.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def signed_divisors(x: int) -> list[int]:
    """All divisors of x of both signs, ascending by absolute value (+d before -d)."""
    if x == 0:
        raise ValueError("0 has infinitely many divisors")
    x = abs(x)
    small, large = [], []
    d = 1
    while d * d <= x:
        if x % d == 0:
            small.append(d)
            if d * d != x:
                large.append(x // d)
        d += 1
    out = []
    for d in small + large[::-1]:
        out += [d, -d]
    return out


def squarefree_part(x: int) -> int:
    """Signed squarefree kernel, e.g. -44 -> -11."""
    s = -1 if x < 0 else 1
    for p, e in factorize(x).items():
        if e % 2:
            s *= p
    return s


def primes_up_to(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def rational_roots_monic(p: IntPoly) -> list[int]:
    """Integer roots of a monic integer polynomial (rational-root test)."""
    if p.leading not in (1, -1):
        raise ValueError("rational_roots_monic needs a monic polynomial")
    if p.coeffs[0] == 0:
        rest = IntPoly(p.coeffs[1:])
        return sorted(set([0] + (rational_roots_monic(rest) if rest.degree > 0 else [])))
    return sorted({d for d in signed_divisors(p.coeffs[0]) if p(d) == 0})


def cauchy_bound(coeffs: Sequence[int]) -> int:
    """Integer bound on |root| for a polynomial given lowest degree first."""
    lead = abs(coeffs[-1])
    return 1 + max((-(-abs(c) // lead) for c in coeffs[:-1]), default=0)


def fujiwara_bound(coeffs: Sequence[int]) -> int:
    """Integer upper bound 2*max|c_{n-k}/c_n|^(1/k) on root moduli (Fujiwara)."""
    n = len(coeffs) - 1
    lead = abs(coeffs[-1])
    best = 0
    for k in range(1, n + 1):
        c = abs(coeffs[n - k])
        if c == 0:
            continue
        # smallest integer r with r^k * lead >= c (halved for the constant term)
        target = Fraction(c, lead) / (2 if k == n else 1)
        r = integer_ceil_root(target, k)
        best = max(best, r)
    return 2 * best + 1


def integer_ceil_root(q: Fraction, k: int) -> int:
    hi = 1
    while Fraction(hi) ** k < q:
        hi *= 2
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if Fraction(mid) ** k >= q:
            hi = mid
        else:
            lo = mid + 1
    return lo


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out
