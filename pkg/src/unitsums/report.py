"""Serialisation of results (JSON, TSV, plain text) and optional figures.

Big integers and rationals are always written as decimal strings so JSON
consumers never lose precision.  Output is sorted and free of timestamps so
identical runs give byte-identical text.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .classifier.solutions import NkReport, UnitSolution
from .classifier.verify import VerificationReport
from .field import CubicField


def q(x) -> str:
    return str(Fraction(x))


def coords(e) -> list[str]:
    return [q(c) for c in e.c]


def field_dict(K: CubicField) -> dict:
    return {
        "polynomial": str(K.poly),
        "coefficients": [str(c) for c in K.poly.coeffs],
        "disc": str(K.disc),
        "classification": K.classification.value,
    }


def solution_dict(s: UnitSolution) -> dict:
    return {
        "n": str(s.n),
        "eps": coords(s.eps),
        "delta": coords(s.delta),
        "eps_str": str(s.eps),
        "delta_str": str(s.delta),
        "provenance": s.provenance.value,
        "detail": None if s.detail is None else str(s.detail),
    }


def nk_dict(r: NkReport) -> dict:
    return {
        "field": field_dict(r.field),
        "nk": [str(n) for n in r.values],
        "witnesses": [dict(solution_dict(e.witness), lemma=e.lemma) for e in r.entries],
        "complete": r.complete,
        "caveats": list(r.caveats),
        "simplest_cubic_aliases": [str(a) for a in r.simplest_cubic_aliases],
        "La_aliases": [str(a) for a in r.La_aliases],
    }


def verification_dict(r: VerificationReport) -> dict:
    return {
        "ok": r.ok,
        "summary": r.summary(),
        "sections": [
            {
                "name": s.name,
                "expected": s.expected,
                "matched": s.matched,
                "missing": s.missing,
                "extra": s.extra,
                "row_errors": s.row_errors,
            }
            for s in r.sections
        ],
    }


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def tsv(header: Iterable[str], rows: Iterable[Iterable]) -> str:
    lines = ["\t".join(header)]
    lines += ["\t".join("" if v is None else str(v) for v in row) for row in rows]
    return "\n".join(lines)


def nk_tsv(r: NkReport) -> str:
    rows = [(e.n, " ".join(coords(e.witness.eps)), " ".join(coords(e.witness.delta)), e.witness.provenance.value, e.lemma) for e in r.entries]
    return tsv(("n", "eps", "delta", "provenance", "lemma"), rows)


def nk_pretty(r: NkReport) -> str:
    K = r.field
    out = [f"field    {K.poly}  (disc {K.disc}, {K.classification.value})"]
    if r.simplest_cubic_aliases:
        out.append(f"K_a for  a in {r.simplest_cubic_aliases}")
    if r.La_aliases:
        out.append(f"L_a for  a in {r.La_aliases}")
    out.append("N_K      " + " ".join(map(str, r.values)))
    for e in r.entries:
        w = e.witness
        out.append(f"  {e.n:>4}  ({w.eps}) + ({w.delta})  [{e.lemma}]")
    out.append("complete " + ("yes" if r.complete else "no"))
    out += [f"note     {c}" for c in r.caveats]
    return "\n".join(out)


def verification_pretty(r: VerificationReport) -> str:
    out = []
    for s in r.sections:
        status = "ok" if s.ok else "MISMATCH"
        out.append(f"{s.name:<18} {s.matched:>3}/{s.expected:<3} {status}")
        out += [f"    missing   {m}" for m in s.missing]
        out += [f"    extra     {m}" for m in s.extra]
        out += [f"    row error {m}" for m in s.row_errors]
    out.append(r.summary())
    return "\n".join(out)


# figures -------------------------------------------------------------------


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save(fig, figdir: str | Path, name: str) -> Path:
    figdir = Path(figdir)
    figdir.mkdir(parents=True, exist_ok=True)
    path = figdir / name
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata={"Software": None})
    fig.clf()
    return path


def plot_nk(r: NkReport, figdir) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 2.4))
    colours = {"rational units": "0.5", "simplest cubic family": "C0", "L_a family": "C0", "sporadic table": "C3"}
    for e in r.entries:
        ax.vlines(e.n, 0, 1, color=colours.get(e.lemma, "C2"))
        ax.annotate(str(e.n), (e.n, 1.02), ha="center", fontsize=8)
    ax.set_xscale("symlog", linthresh=10)
    ax.set_yticks([])
    ax.set_ylim(0, 1.2)
    ax.set_xlabel("n")
    ax.set_title(f"N_K for {r.field.poly}", fontsize=9)
    for side in ("left", "right", "top"):
        ax.spines[side].set_visible(False)
    path = _save(fig, figdir, "nk.png")
    plt.close(fig)
    return path


def plot_uv(points: list[tuple[int, int]], figdir, name: str, title: str) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    off = [(u, v) for u, v in points if v != -u]
    diag = [(u, v) for u, v in points if v == -u]
    if diag:
        ax.plot(*zip(*diag), ".", color="0.7", ms=3, label="V = -U")
    if off:
        ax.plot(*zip(*off), "o", color="C3", ms=5, label="other")
    ax.axhline(0, color="0.85", lw=0.8)
    ax.set_xlabel("U")
    ax.set_ylabel("V")
    ax.set_title(title, fontsize=9)
    ax.legend(frameon=False, fontsize=8)
    path = _save(fig, figdir, name)
    plt.close(fig)
    return path


def plot_verification(r: VerificationReport, figdir) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 2.8))
    names = [s.name for s in r.sections]
    ax.barh(names, [s.expected for s in r.sections], color="0.85", label="embedded rows")
    ax.barh(names, [s.matched for s in r.sections], color=["C2" if s.ok else "C3" for s in r.sections], height=0.4, label="re-derived")
    ax.invert_yaxis()
    ax.set_xlabel("rows")
    ax.legend(frameon=False, fontsize=8, loc="lower right")
    path = _save(fig, figdir, "verify_tables.png")
    plt.close(fig)
    return path


def plot_md(rows: list[tuple[int, int, int]], figdir) -> Path:
    """rows of (d, distinct values, binom(d, 2))."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(4.5, 3))
    ds = [r[0] for r in rows]
    ax.plot(ds, [r[1] for r in rows], "o-", label="distinct n found")
    ax.plot(ds, [r[2] for r in rows], "k--", lw=0.8, label="binom(d, 2)")
    ax.set_xlabel("d")
    ax.set_ylabel("|N|")
    ax.legend(frameon=False, fontsize=8)
    path = _save(fig, figdir, "md_construction.png")
    plt.close(fig)
    return path
