"""Re-derive the candidate tables and diff them against the embedded data.

Each section compares a set of row keys produced by the pipeline with the
corresponding embedded table; the sporadic sections additionally re-check
every embedded row by exact field arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..arith import IntPoly, cubic_discriminant, is_perfect_square
from ..field import CubicField, InvalidFieldError, make_field
from ..thue import uvw_search
from .isomorphism import embed, frobenius_compatible
from .minpoly import (
    MinPolyPair,
    complex_a_candidates,
    complex_uv_candidates,
    cyclic_a_candidates,
    minpoly_uv,
    small_n_pairs,
)
from .solutions import (
    UnitSolution,
    UnverifiedSolution,
    dedupe,
    is_family_solution,
    row_solution,
    solutions_from_pairs,
)
from .tables import (
    CANONICAL_COMPLEX,
    CANONICAL_CYCLIC,
    COMPLEX_SMALL_N,
    COMPLEX_SPORADIC,
    COMPLEX_UV,
    CYCLIC_SMALL_N,
    CYCLIC_SPORADIC,
    CYCLIC_UV,
    SmallNRow,
    SporadicTable,
    UVRow,
)


@dataclass
class SectionResult:
    name: str
    expected: int
    matched: int = 0
    missing: list[str] = dc_field(default_factory=list)  # embedded but not derived
    extra: list[str] = dc_field(default_factory=list)  # derived but not embedded
    row_errors: list[str] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.row_errors)


@dataclass
class VerificationReport:
    sections: list[SectionResult]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.sections)

    def section(self, name: str) -> SectionResult:
        return next(s for s in self.sections if s.name == name)

    def summary(self) -> str:
        cyc = self.section("cyclic_sporadic")
        cpx = self.section("complex_sporadic")
        if self.ok:
            return f"{cyc.matched} cyclic + {cpx.matched} complex sporadic classes verified"
        bad = [s.name for s in self.sections if not s.ok]
        return "mismatch in " + ", ".join(bad)


class _Identifier:
    """Finds which canonical field (if any) contains a root of a given cubic."""

    def __init__(self, canon: dict[str, IntPoly]):
        self.fields = {lab: make_field(p, lab) for lab, p in canon.items()}

    def __call__(self, f: IntPoly) -> str | None:
        d = cubic_discriminant(f)
        for lab, K in self.fields.items():
            if d * K.disc <= 0 or is_perfect_square(d * K.disc) is None:
                continue
            if frobenius_compatible(K, f) and embed(f, K) is not None:
                return lab
        return None


def _diff(section: SectionResult, expected: set, derived: set) -> None:
    section.matched = len(expected & derived)
    section.missing = sorted(map(str, expected - derived))
    section.extra = sorted(map(str, derived - expected))


def _small_n_section(name, rows: tuple[SmallNRow, ...], pairs: list[MinPolyPair], ident, field_key) -> SectionResult:
    res = SectionResult(name, len(rows))
    expected = {(r.n, r.a, str(r.f_eps), r.field) for r in rows}
    derived = set()
    for pair in pairs:
        lab = ident(pair.f_eps)
        derived.add((pair.n, pair.a, str(pair.f_eps), field_key(lab)))
    _diff(res, expected, derived)
    return res


def _uv_section(name, rows: tuple[UVRow, ...], uv: list[tuple[int, int]], ident, field_key) -> SectionResult:
    res = SectionResult(name, len(rows))
    expected = {(r.U, r.V, str(r.f_eps), r.n, r.field) for r in rows}
    derived = set()
    for U, V in uv:
        pair = minpoly_uv(U, V)
        derived.add((U, V, str(pair.f_eps), pair.n, field_key(ident(pair.f_eps))))
    _diff(res, expected, derived)
    return res


def _check_rows(table: SporadicTable, res: SectionResult) -> list[UnitSolution]:
    sols = []
    for i, row in enumerate(table.rows):
        where = f"row {i} ({row.field_label}: {row.eps} + {row.delta} = {row.n})"
        try:
            s = row_solution(row, i)
        except (UnverifiedSolution, InvalidFieldError) as exc:
            res.row_errors.append(f"{where}: {exc}")
            continue
        if s.field.disc != row.disc:
            res.row_errors.append(f"{where}: discriminant {s.field.disc} != stated {row.disc}")
            continue
        if is_family_solution(s):
            res.row_errors.append(f"{where}: belongs to a parametric family")
        sols.append(s)
    return sols


def _class_key(s: UnitSolution) -> tuple:
    n, e, d = s.canonical_key()
    return (s.field.label, n, tuple(str(c) for c in e), tuple(str(c) for c in d))


def _sporadic_section(name, table: SporadicTable, canon: dict[str, IntPoly], pairs: list[MinPolyPair]) -> SectionResult:
    res = SectionResult(name, len(table))
    table_sols = _check_rows(table, res)
    keys = [_class_key(s) for s in table_sols]
    if len(set(keys)) != len(keys):
        res.row_errors.append("embedded rows contain equivalent solutions")
    derived: list[UnitSolution] = []
    for lab, p in canon.items():
        K = make_field(p, lab)
        derived += [s for s in solutions_from_pairs(K, pairs) if not is_family_solution(s)]
    _diff(res, set(keys), {_class_key(s) for s in dedupe(derived)})
    return res


def _canonical_disc(canon: dict[str, IntPoly]):
    discs = {lab: cubic_discriminant(p) for lab, p in canon.items()}
    return lambda lab: discs.get(lab)


def verify_tables(
    uvw_bound: int = 100,
    u_max: int = 1000,
    cyclic_small_n: tuple[SmallNRow, ...] = CYCLIC_SMALL_N,
    cyclic_uv: tuple[UVRow, ...] = CYCLIC_UV,
    cyclic_sporadic: SporadicTable = CYCLIC_SPORADIC,
    complex_small_n: tuple[SmallNRow, ...] = COMPLEX_SMALL_N,
    complex_uv: tuple[UVRow, ...] = COMPLEX_UV,
    complex_sporadic: SporadicTable = COMPLEX_SPORADIC,
) -> VerificationReport:
    """Re-derive every candidate table and the sporadic classes; tables can be swapped for testing."""
    cyc_ident = _Identifier(CANONICAL_CYCLIC)
    cpx_ident = _Identifier(CANONICAL_COMPLEX)

    cyc_pairs = small_n_pairs(cyclic_a_candidates())
    cyc_uv = sorted({(U, V) for U, V, _ in uvw_search(uvw_bound) if U > 0})
    cyc_general = [minpoly_uv(U, V) for U, V in cyc_uv]

    cpx_pairs = small_n_pairs(complex_a_candidates())
    cpx_uv_all = complex_uv_candidates(u_max)
    cpx_uv = [(U, V) for U, V in cpx_uv_all if V != -U]
    cpx_general = [minpoly_uv(U, V) for U, V in cpx_uv_all]

    def same(lab):
        return lab

    sections = [
        _small_n_section("cyclic_small_n", cyclic_small_n, cyc_pairs, cyc_ident, same),
        _uv_section("cyclic_uv", cyclic_uv, cyc_uv, cyc_ident, same),
        _sporadic_section("cyclic_sporadic", cyclic_sporadic, CANONICAL_CYCLIC, cyc_pairs + cyc_general),
        _small_n_section("complex_small_n", complex_small_n, cpx_pairs, cpx_ident, _canonical_disc(CANONICAL_COMPLEX)),
        _uv_section("complex_uv", complex_uv, cpx_uv, cpx_ident, _canonical_disc(CANONICAL_COMPLEX)),
        _sporadic_section("complex_sporadic", complex_sporadic, CANONICAL_COMPLEX, cpx_pairs + cpx_general),
    ]
    return VerificationReport(sections)
