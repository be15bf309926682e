"""Embedded reference data: candidate tables and the sporadic solution lists.

Everything here is re-derived or re-verified by :mod:`unitsums.classifier.verify`.
Coordinates are (c0, c1, c2) in the power basis {1, w, w^2} of the row's field.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..arith import IntPoly


@dataclass(frozen=True)
class SporadicRow:
    field_label: str
    poly: IntPoly
    disc: int
    eps: tuple[int, int, int]
    delta: tuple[int, int, int]
    n: int


@dataclass(frozen=True)
class SmallNRow:
    """One (n, a) candidate with f_eps and its field (label or discriminant)."""

    n: int
    a: int
    f_eps: IntPoly
    field: str | int


@dataclass(frozen=True)
class UVRow:
    U: int
    V: int
    f_eps: IntPoly
    n: int
    field: str | int


@dataclass(frozen=True)
class SporadicTable:
    kind: str  # "cyclic" or "complex"
    rows: tuple[SporadicRow, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def fields(self) -> dict[str, IntPoly]:
        out: dict[str, IntPoly] = {}
        for r in self.rows:
            out.setdefault(r.field_label, r.poly)
        return out


P = IntPoly.parse

F_M1 = P("x^3 + x^2 - 2x - 1")
F_0 = P("x^3 - 3x - 1")
F_1 = P("x^3 - x^2 - 4x - 1")
G_M1 = P("x^3 + x^2 - 1")
G_1 = P("x^3 - x^2 - 1")
H_44 = P("x^3 - x^2 - x - 1")

CANONICAL_CYCLIC = {"K_-1": F_M1, "K_0": F_0, "K_1": F_1}
CANONICAL_COMPLEX = {"L_-1": G_M1, "L_1": G_1, "D-44": H_44}


def _rows(label, poly, disc, entries):
    return tuple(SporadicRow(label, poly, disc, e, d, n) for e, d, n in entries)


CYCLIC_SPORADIC = SporadicTable(
    "cyclic",
    _rows(
        "K_-1",
        F_M1,
        49,
        [
            ((0, 1, 0), (1, -1, 0), 1),
            ((0, 0, 1), (1, 0, -1), 1),
            ((0, -1, 1), (1, 1, -1), 1),
            ((0, -1, 0), (2, 1, 0), 2),
            ((1, 1, 0), (1, -1, 0), 2),
            ((-6, 1, 3), (8, -1, -3), 2),
            ((0, 0, 1), (3, 0, -1), 3),
            ((0, -5, 4), (3, 5, -4), 3),
            ((0, 2, 1), (4, -2, -1), 4),
            ((0, -1, 1), (5, 1, -1), 5),
            ((0, 9, 5), (19, -9, -5), 19),
            ((0, -5, 4), (22, 5, -4), 22),
        ],
    )
    + _rows("K_0", F_0, 81, [((0, 1, 0), (2, -1, 0), 2), ((0, 0, 1), (3, 0, -1), 3)])
    + _rows(
        "K_1",
        F_1,
        169,
        [((0, 0, 1), (2, 0, -1), 2), ((-2, 0, 1), (7, 0, -1), 5), ((0, 0, 1), (7, 0, -1), 7)],
    ),
)

COMPLEX_SPORADIC = SporadicTable(
    "complex",
    _rows(
        "L_-1",
        G_M1,
        -23,
        [
            ((0, 1, 0), (1, -1, 0), 1),
            ((0, 0, 1), (1, 0, -1), 1),
            ((0, 1, 1), (1, -1, -1), 1),
            ((0, -1, -1), (1, 1, 1), 1),
            ((2, 2, 1), (-1, -2, -1), 1),
            ((1, 1, 0), (1, -1, 0), 2),
            ((1, 1, 1), (1, -1, -1), 2),
            ((1, 2, 1), (2, -2, -1), 3),
            ((2, 2, 1), (2, -2, -1), 4),
        ],
    )
    + _rows(
        "L_1",
        G_1,
        -31,
        [
            ((0, 0, -1), (1, 0, 1), 1),
            ((0, -1, 1), (1, 1, -1), 1),
            ((0, 0, 1), (2, 0, -1), 2),
            ((1, 0, 1), (2, 0, -1), 3),
        ],
    )
    + _rows("D-44", H_44, -44, [((0, 1, 0), (2, -1, 0), 2)]),
)

CYCLIC_SMALL_N = tuple(
    SmallNRow(n, a, P(f), k)
    for n, a, f, k in [
        (1, -5, "x^3 + 2x^2 - x - 1", "K_-1"),
        (1, 2, "x^3 - 5x^2 + 6x - 1", "K_-1"),
        (2, -10, "x^3 + 4x^2 - 11x - 1", "K_-1"),
        (2, -6, "x^3 - 3x - 1", "K_0"),
        (2, -4, "x^3 - 2x^2 - x + 1", "K_-1"),
        (2, -2, "x^3 - 4x^2 + 3x + 1", "K_-1"),
        (2, 0, "x^3 - 6x^2 + 9x - 1", "K_0"),
        (2, 4, "x^3 - 10x^2 + 17x - 1", "K_-1"),
    ]
)

CYCLIC_UV = tuple(
    UVRow(U, V, P(f), n, k)
    for (U, V), f, n, k in [
        ((1, -3), "x^3 + x^2 - 2x - 1", 1, "K_-1"),
        ((1, 4), "x^3 - 6x^2 + 5x - 1", 1, "K_-1"),
        ((2, 1), "x^3 - 5x^2 + 6x - 1", 2, "K_-1"),
        ((2, 5), "x^3 - 9x^2 + 14x - 1", 2, "K_1"),
        ((3, -22), "x^3 + 16x^2 - 57x - 1", 3, "K_-1"),
        ((3, -1), "x^3 - 5x^2 + 6x - 1", 3, "K_-1"),
        ((3, 0), "x^3 - 6x^2 + 9x - 1", 3, "K_0"),
        ((4, -5), "x^3 - 3x^2 - 4x - 1", 4, "K_-1"),
        ((5, -7), "x^3 - 3x^2 - 10x - 1", 5, "K_1"),
        ((5, -4), "x^3 - 6x^2 + 5x - 1", 5, "K_-1"),
        ((7, -5), "x^3 - 9x^2 + 14x - 1", 7, "K_1"),
        ((19, 3), "x^3 - 41x^2 + 418x - 1", 19, "K_-1"),
        ((22, -3), "x^3 - 41x^2 + 418x - 1", 22, "K_-1"),
    ]
)

COMPLEX_SMALL_N = tuple(
    SmallNRow(n, a, P(f), d)
    for n, a, f, d in [
        (1, -4, "x^3 + x^2 - 1", -23),
        (1, -3, "x^3 + x - 1", -31),
        (1, -2, "x^3 - x^2 + 2x - 1", -23),
        (1, -1, "x^3 - 2x^2 + 3x - 1", -23),
        (1, 0, "x^3 - 3x^2 + 4x - 1", -31),
        (1, 1, "x^3 - 4x^2 + 5x - 1", -23),
        (2, -5, "x^3 - x^2 - x - 1", -44),
        (2, -4, "x^3 - 2x^2 + x - 1", -23),
        (2, -2, "x^3 - 4x^2 + 5x - 1", -23),
        (2, -1, "x^3 - 5x^2 + 7x - 1", -44),
    ]
)

COMPLEX_UV = tuple(
    UVRow(U, V, P(f), n, d)
    for (U, V), f, n, d in [
        ((1, -2), "x^3 - x - 1", 1, -23),
        ((1, 0), "x^3 - 2x^2 + x - 1", 1, -23),
        ((1, 1), "x^3 - 3x^2 + 2x - 1", 1, -23),
        ((1, 2), "x^3 - 4x^2 + 3x - 1", 1, -31),
        ((1, 3), "x^3 - 5x^2 + 4x - 1", 1, -23),
        ((2, -3), "x^3 - x^2 - 2x - 1", 2, -31),
        ((2, -1), "x^3 - 3x^2 + 2x - 1", 2, -23),
        ((3, -4), "x^3 - 2x^2 - 3x - 1", 3, -23),
        ((3, -2), "x^3 - 4x^2 + 3x - 1", 3, -31),
        ((4, -3), "x^3 - 5x^2 + 4x - 1", 4, -23),
    ]
)

# fields isomorphic to K_a, L_a, for the witnesses of the small isomorphism lists
SIMPLEST_CUBIC_ALIASES = {"K_-1": (-1, 5, 12, 1259), "K_0": (0, 3, 54), "K_1": (1, 66), "K_2": (2, 2389)}
