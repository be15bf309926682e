"""Unit solutions, their equivalence classes, and N_K reports."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from typing import Iterable

from ..arith import IntPoly, cubic_discriminant, is_perfect_square, poly_reflect
from ..field import Classification, CubicField, FieldElement, InvalidFieldError, make_field, roots_in_field
from .isomorphism import (
    SIMPLEST_CUBIC_CAP,
    detect_La,
    detect_simplest_cubic,
    embed,
    frobenius_compatible,
    g_poly,
    simplest_cubic,
)
from .minpoly import MinPolyPair, minpoly_candidates_small_n, minpoly_uv
from .tables import COMPLEX_SPORADIC, CYCLIC_SPORADIC, SporadicRow, SporadicTable


class Provenance(str, enum.Enum):
    TRIVIAL_N0 = "trivial_n0"
    TRIVIAL_RATIONAL = "trivial_rational"
    FAMILY_SIMPLEST_CUBIC = "family_simplest_cubic"
    FAMILY_LA = "family_La"
    SPORADIC = "sporadic"
    DERIVED = "derived"
    BOUNDED_SEARCH = "bounded_search"


class UnverifiedSolution(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class UnitSolution:
    field: CubicField
    eps: FieldElement
    delta: FieldElement
    n: int
    provenance: Provenance
    detail: object = None  # family parameter a, sporadic row index, (U, V), ...

    def __post_init__(self):
        if self.eps.field != self.field or self.delta.field != self.field:
            raise UnverifiedSolution("summands live in a different field")
        if self.eps + self.delta != self.field.element(self.n):
            raise UnverifiedSolution(f"{self.eps} + {self.delta} != {self.n}")
        if not (self.eps.is_unit() and self.delta.is_unit()):
            raise UnverifiedSolution(f"{self.eps}, {self.delta} are not both units")

    def __repr__(self) -> str:
        tag = self.provenance.value if self.detail is None else f"{self.provenance.value}({self.detail})"
        return f"UnitSolution(({self.eps}) + ({self.delta}) = {self.n}, {tag})"

    def orbit(self) -> set[tuple]:
        """(n, eps, delta) coordinate keys of every equivalent solution with n >= 0."""
        out = set()
        signs = (1, -1) if self.n == 0 else ((1,) if self.n > 0 else (-1,))
        for s in self.field.automorphisms:
            e, d = self.eps.apply(s), self.delta.apply(s)
            for sg in signs:
                for x, y in ((e, d), (d, e)):
                    out.add((sg * self.n, (x * sg).c, (y * sg).c))
        return out

    def canonical_key(self) -> tuple:
        return min(self.orbit())

    def canonical(self) -> "UnitSolution":
        n, e, d = self.canonical_key()
        K = self.field
        return UnitSolution(K, K.element(*e), K.element(*d), n, self.provenance, self.detail)

    def equivalent(self, other: "UnitSolution") -> bool:
        return self.field == other.field and self.canonical_key() == other.canonical_key()

    def transport(self, K: CubicField, image: FieldElement | None = None) -> "UnitSolution":
        """The same solution inside an isomorphic field K."""
        if image is None:
            image = embed(self.field.poly, K)
            if image is None:
                raise ValueError(f"{self.field} does not embed in {K}")
        return UnitSolution(K, self.eps.apply(image), self.delta.apply(image), self.n, self.provenance, self.detail)


def dedupe(solutions: Iterable[UnitSolution]) -> list[UnitSolution]:
    """One solution per equivalence class, first occurrence kept, sorted by canonical key."""
    seen: dict[tuple, UnitSolution] = {}
    for s in solutions:
        seen.setdefault((s.field.poly.coeffs, s.canonical_key()), s)
    return [seen[k] for k in sorted(seen)]


def normalized(K: CubicField, eps: FieldElement, delta: FieldElement, n: int, prov, detail=None) -> UnitSolution:
    if n < 0:
        eps, delta, n = -eps, -delta, -n
    return UnitSolution(K, eps, delta, n, prov, detail)


def realize_solution(pair: MinPolyPair) -> list[UnitSolution]:
    """The solution (w, n - w) in Q(w), w a root of f_eps."""
    K = make_field(pair.f_eps)  # raises InvalidFieldError for spurious reducible candidates
    eps = K.gen
    delta = pair.n - eps
    if delta.int_minpoly() != pair.f_delta:
        raise UnverifiedSolution(f"minimal polynomial of n - w is not {pair.f_delta}")
    return [UnitSolution(K, eps, delta, pair.n, Provenance.DERIVED, pair.param)]


def trivial_solutions(K: CubicField) -> list[UnitSolution]:
    one = K.one
    return [
        UnitSolution(K, one, -one, 0, Provenance.TRIVIAL_N0),
        UnitSolution(K, one, one, 2, Provenance.TRIVIAL_RATIONAL),
    ]


def simplest_cubic_witness(K: CubicField, a: int) -> UnitSolution:
    """(-rho_a) + (1 + rho_a) = 1."""
    rho = embed(simplest_cubic(a), K)
    if rho is None:
        raise ValueError(f"{K} is not isomorphic to K_{a}")
    return UnitSolution(K, -rho, rho + 1, 1, Provenance.FAMILY_SIMPLEST_CUBIC, a)


def La_witness(K: CubicField, a: int) -> UnitSolution:
    """omega_a + (a - omega_a) = a, negated when a < 0."""
    w = embed(g_poly(a), K)
    if w is None:
        raise ValueError(f"{K} is not isomorphic to L_{a}")
    return normalized(K, w, a - w, a, Provenance.FAMILY_LA, a)


def is_simplest_cubic_poly(f: IntPoly) -> bool:
    return f.coeffs[0] == -1 and f[1] == f[2] - 3


def is_La_poly(f: IntPoly, a: int) -> bool:
    return f == g_poly(a)


def is_family_solution(s: UnitSolution) -> bool:
    """Whether s is equivalent to a member of the simplest-cubic or L_a families."""
    fe, fd = s.eps.int_minpoly(), s.delta.int_minpoly()
    if s.field.is_cyclic:
        return s.n == 1 and (is_simplest_cubic_poly(poly_reflect(fe, 0)) or is_simplest_cubic_poly(poly_reflect(fd, 0)))
    if s.field.is_complex:
        if is_La_poly(fe, s.n) or is_La_poly(fd, s.n):
            return True
        return s.n == 1 and (is_La_poly(poly_reflect(fe, 0), -1) or is_La_poly(poly_reflect(fd, 0), -1))
    return False


def sporadic_table_for(K: CubicField) -> SporadicTable | None:
    if K.is_cyclic:
        return CYCLIC_SPORADIC
    if K.is_complex:
        return COMPLEX_SPORADIC
    return None


def row_solution(row: SporadicRow, index: int) -> UnitSolution:
    K = make_field(row.poly, row.field_label)
    return UnitSolution(K, K.element(*row.eps), K.element(*row.delta), row.n, Provenance.SPORADIC, index)


def sporadic_solutions(K: CubicField, table: SporadicTable | None = None) -> list[UnitSolution]:
    """Table rows whose field embeds in K, transported into K."""
    table = table if table is not None else sporadic_table_for(K)
    if table is None:
        return []
    out = []
    for poly, rows in _group_rows(table).items():
        if cubic_discriminant(poly) * K.disc <= 0:
            continue
        if is_perfect_square(cubic_discriminant(poly) * K.disc) is None or not frobenius_compatible(K, poly):
            continue
        image = embed(poly, K)
        if image is None:
            continue
        for i, row in rows:
            out.append(row_solution(row, i).transport(K, image))
    return out


def _group_rows(table: SporadicTable) -> dict[IntPoly, list[tuple[int, SporadicRow]]]:
    groups: dict[IntPoly, list] = {}
    for i, row in enumerate(table.rows):
        groups.setdefault(row.poly, []).append((i, row))
    return groups


def candidate_pairs(a_bound: int, uv_bound: int) -> Iterable[MinPolyPair]:
    """Every n = 1, 2 pair with |a| <= a_bound and every general pair with 1 <= U, |V| <= uv_bound."""
    for a in range(-a_bound, a_bound + 1):
        yield from minpoly_candidates_small_n(1, a)
        yield from minpoly_candidates_small_n(2, a)
    for U in range(1, uv_bound + 1):
        for V in range(-uv_bound, uv_bound + 1):
            yield minpoly_uv(U, V)


def solutions_from_pairs(K: CubicField, pairs: Iterable[MinPolyPair], prov=Provenance.DERIVED) -> list[UnitSolution]:
    """Solutions (r, n - r) in K for every root r of some candidate f_eps."""
    out = []
    for pair in pairs:
        f = pair.f_eps
        d = cubic_discriminant(f)
        if d == 0 or d * K.disc <= 0 or is_perfect_square(d * K.disc) is None:
            continue
        if not frobenius_compatible(K, f):
            continue
        for r in roots_in_field(f, K):
            out.append(UnitSolution(K, r, pair.n - r, pair.n, prov, pair.param))
    return out


def bounded_search(K: CubicField, a_bound: int = 100, uv_bound: int = 60) -> list[UnitSolution]:
    return dedupe(solutions_from_pairs(K, candidate_pairs(a_bound, uv_bound), Provenance.BOUNDED_SEARCH))


@dataclass
class NkEntry:
    n: int
    witness: UnitSolution
    lemma: str


@dataclass
class NkReport:
    field: CubicField
    entries: list[NkEntry]
    complete: bool
    caveats: list[str] = dc_field(default_factory=list)
    simplest_cubic_aliases: list[int] = dc_field(default_factory=list)
    La_aliases: list[int] = dc_field(default_factory=list)

    @property
    def values(self) -> list[int]:
        return [e.n for e in self.entries]


_LEMMA = {
    Provenance.TRIVIAL_RATIONAL: "rational units",
    Provenance.FAMILY_SIMPLEST_CUBIC: "simplest cubic family",
    Provenance.FAMILY_LA: "L_a family",
    Provenance.SPORADIC: "sporadic table",
    Provenance.BOUNDED_SEARCH: "bounded candidate search",
}


@dataclass
class _Classes:
    solutions: list[UnitSolution]
    simplest: list[int]
    la: list[int]
    complete: bool
    caveats: list[str]


def _all_classes(
    K: CubicField,
    a_cap: int,
    sc_cap: int,
    search_a: int,
    search_uv: int,
) -> _Classes:
    sols = trivial_solutions(K)
    simplest: list[int] = []
    la: list[int] = []
    caveats: list[str] = []
    if K.is_cyclic:
        simplest = detect_simplest_cubic(K, sc_cap)
        sols += [simplest_cubic_witness(K, a) for a in simplest]
        sols += sporadic_solutions(K)
        caveats.append(
            "exhaustive by the cyclic classification; the (U, V, W) solution list is complete by Hoshi's theorem"
        )
        caveats.append(f"isomorphisms with K_a searched for -1 <= a <= {sc_cap}; coincidences beyond rely on Hoshi's list")
        complete = True
    elif K.is_complex:
        la = detect_La(K, a_cap)
        sols += [La_witness(K, a) for a in la]
        sols += sporadic_solutions(K)
        caveats.append("exhaustive by the complex classification; L_a coincidences follow Hoshi-Miyake")
        caveats.append(f"isomorphisms with L_a searched for -1 <= a <= {a_cap}; larger a would add n = a")
        complete = True
    else:
        sols += bounded_search(K, search_a, search_uv)
        caveats.append(
            "classification theorem not applicable (totally real, non-cyclic): trivial solutions plus bounded search"
            f" hits for |a| <= {search_a}, 1 <= U <= {search_uv}, |V| <= {search_uv}; consistent with, not a proof"
        )
        complete = False
    return _Classes(dedupe(sols), simplest, la, complete, caveats)


def _height(s: UnitSolution) -> int:
    return max(max(abs(c.numerator), c.denominator) for c in s.eps.c + s.delta.c)


def _witness_rank(s: UnitSolution) -> tuple:
    # simplest explanation first (rational, family, sporadic, search), then smallest coordinates
    return (list(Provenance).index(s.provenance), _height(s), s.canonical_key())


def compute_nk(
    K: CubicField,
    a_cap: int = 1000,
    sc_cap: int = SIMPLEST_CUBIC_CAP,
    search_a: int = 100,
    search_uv: int = 60,
) -> NkReport:
    cl = _all_classes(K, a_cap, sc_cap, search_a, search_uv)
    best: dict[int, UnitSolution] = {}
    for s in cl.solutions:
        if s.n <= 0:
            continue
        cur = best.get(s.n)
        if cur is None or _witness_rank(s) < _witness_rank(cur):
            best[s.n] = s
    entries = [NkEntry(n, best[n], _LEMMA[best[n].provenance]) for n in sorted(best)]
    return NkReport(K, entries, cl.complete, cl.caveats, cl.simplest, cl.la)


def enumerate_solutions(
    K: CubicField,
    n: int,
    a_cap: int = 1000,
    sc_cap: int = SIMPLEST_CUBIC_CAP,
    search_a: int = 100,
    search_uv: int = 60,
) -> list[UnitSolution]:
    """One solution per equivalence class with eps + delta = n (n >= 0).

    For n = 0 the single representative 1 + (-1) stands for the family u + (-u).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    cl = _all_classes(K, a_cap, sc_cap, search_a, search_uv)
    return [s for s in cl.solutions if s.n == n]


__all__ = [
    "InvalidFieldError",
    "Classification",
    "NkEntry",
    "NkReport",
    "Provenance",
    "UnitSolution",
    "UnverifiedSolution",
    "bounded_search",
    "candidate_pairs",
    "compute_nk",
    "dedupe",
    "enumerate_solutions",
    "is_family_solution",
    "realize_solution",
    "solutions_from_pairs",
    "sporadic_solutions",
]
