"""Command line entry point: ``unitsums <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 invalid field (reducible or degenerate polynomial).
"""

from __future__ import annotations

import argparse
import re
import sys
from math import comb

from . import report
from .arith import IntPoly
from .classifier.families import ennola_checks, md_construction, theoretical_bound
from .classifier.isomorphism import detect_La, detect_simplest_cubic, iso_La_hoshi_miyake
from .classifier.minpoly import complex_uv_candidates
from .classifier.solutions import compute_nk, enumerate_solutions
from .classifier.verify import verify_tables
from .config import FORMATS, CliConfig, load_config
from .field import InvalidFieldError, make_field, precision_cap
from .quadratic import nk_real_quadratic
from .thue import uvw_search

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INVALID_FIELD = 0, 1, 2, 3

_TRIPLE = re.compile(r"^\s*-?\d+\s*,\s*-?\d+\s*,\s*-?\d+\s*$")


class UsageError(Exception):
    pass


def parse_field_spec(text: str) -> IntPoly:
    """``"a2,a1,a0"`` for x^3 + a2 x^2 + a1 x + a0, or a polynomial in x."""
    s = text.replace("−", "-").strip()
    if _TRIPLE.match(s):
        a2, a1, a0 = (int(t) for t in s.split(","))
        return IntPoly.monic(a2, a1, a0)
    try:
        return IntPoly.parse(s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _field(text: str):
    return make_field(parse_field_spec(text))


def _emit(text: str) -> None:
    sys.stdout.write(text.rstrip("\n") + "\n")
    sys.stdout.flush()


def _progress(cfg: CliConfig, msg: str) -> None:
    if cfg.verbosity > 0:
        print(msg, file=sys.stderr, flush=True)


def _figure(cfg: CliConfig, path) -> None:
    print(f"figure: {path}", file=sys.stderr, flush=True)


# commands ------------------------------------------------------------------


def cmd_classify(args, cfg: CliConfig) -> int:
    K = _field(args.field)
    info = report.field_dict(K)
    if K.is_cyclic:
        info["simplest_cubic_aliases"] = [str(a) for a in detect_simplest_cubic(K, cfg.sc_cap)]
    elif K.is_complex:
        info["La_aliases"] = [str(a) for a in detect_La(K, cfg.a_cap)]
    else:
        info["note"] = "totally real, non-cyclic: classification theorem not applicable, reports are partial"
    if args.n is not None:
        sols = enumerate_solutions(K, args.n, a_cap=cfg.a_cap, sc_cap=cfg.sc_cap)
        info["n"] = str(args.n)
        info["solutions"] = [report.solution_dict(s) for s in sols]
    if cfg.format == "json":
        _emit(report.to_json(info))
    elif cfg.format == "tsv":
        rows = [(k, " ".join(v) if isinstance(v, list) and all(isinstance(x, str) for x in v) else v)
                for k, v in info.items() if k != "solutions"]
        text = report.tsv(("key", "value"), rows)
        if "solutions" in info:
            text += "\n\n" + report.tsv(
                ("n", "eps", "delta", "provenance"),
                [(s["n"], " ".join(s["eps"]), " ".join(s["delta"]), s["provenance"]) for s in info["solutions"]],
            )
        _emit(text)
    else:
        lines = [f"field           {K.poly}", f"disc            {K.disc}", f"classification  {K.classification.value}"]
        if "simplest_cubic_aliases" in info:
            lines.append("K_a for a in    " + (" ".join(info["simplest_cubic_aliases"]) or "(none)"))
        if "La_aliases" in info:
            lines.append("L_a for a in    " + (" ".join(info["La_aliases"]) or "(none)"))
        if "note" in info:
            lines.append("note            " + info["note"])
        if "solutions" in info:
            lines.append(f"classes for n = {args.n}: {len(info['solutions'])}")
            lines += [f"  ({s['eps_str']}) + ({s['delta_str']})  [{s['provenance']}]" for s in info["solutions"]]
        _emit("\n".join(lines))
    return EXIT_OK


def cmd_nk(args, cfg: CliConfig) -> int:
    if args.quadratic is not None:
        if args.field is not None:
            raise UsageError("give either a field or --quadratic, not both")
        values = nk_real_quadratic(args.quadratic, args.max)
        if cfg.format == "json":
            _emit(report.to_json({"field": {"quadratic": str(args.quadratic)}, "max": str(args.max), "nk": [str(v) for v in values]}))
        elif cfg.format == "tsv":
            _emit(report.tsv(("n",), [(v,) for v in values]))
        else:
            _emit(" ".join(map(str, values)))
        return EXIT_OK
    if args.field is None:
        raise UsageError("nk needs a field or --quadratic D")
    K = _field(args.field)
    _progress(cfg, f"computing N_K for {K.poly}")
    r = compute_nk(K, a_cap=cfg.a_cap, sc_cap=cfg.sc_cap)
    if cfg.format == "json":
        _emit(report.to_json(report.nk_dict(r)))
    elif cfg.format == "tsv":
        _emit(report.nk_tsv(r))
    else:
        _emit(report.nk_pretty(r))
    if args.figdir:
        _figure(cfg, report.plot_nk(r, args.figdir))
    return EXIT_OK


def cmd_verify_tables(args, cfg: CliConfig) -> int:
    r = verify_tables(uvw_bound=cfg.uvw_bound, u_max=cfg.u_max)
    if cfg.format == "json":
        _emit(report.to_json(report.verification_dict(r)))
    elif cfg.format == "tsv":
        rows = [(s.name, s.expected, s.matched, len(s.missing), len(s.extra), len(s.row_errors)) for s in r.sections]
        _emit(report.tsv(("section", "rows", "matched", "missing", "extra", "row_errors"), rows))
    else:
        _emit(report.verification_pretty(r))
    if args.figdir:
        _figure(cfg, report.plot_verification(r, args.figdir))
    return EXIT_OK if r.ok else EXIT_MISMATCH


def cmd_search(args, cfg: CliConfig) -> int:
    modes = [m for m in ("uvw", "complex_uv", "iso") if getattr(args, m) not in (None, False)]
    if len(modes) != 1:
        raise UsageError("choose exactly one of --uvw, --complex-uv, --iso")
    mode = modes[0]
    rows: list[tuple]
    if mode == "uvw":
        bound = args.bound or cfg.uvw_bound
        _progress(cfg, f"solving the (U, V, W) equation for |U|, |V| <= {bound}")
        header, rows = ("U", "V", "W"), uvw_search(bound)
        if args.positive:
            # one line per pair; the two W roots of each pair sum to -(3 + U^2 V + U V^2)
            ws: dict[tuple[int, int], list[int]] = {}
            for u, v, w in rows:
                if u > 0:
                    ws.setdefault((u, v), []).append(w)
            rows = [(u, v, ",".join(map(str, ws[u, v]))) for u, v in sorted(ws)]
        fig = lambda d: report.plot_uv([(u, v) for u, v, _ in rows], d, "uvw.png", f"(U, V, W) solutions, bound {bound}")
    elif mode == "complex_uv":
        umax = args.umax or cfg.u_max
        header, rows = ("U", "V"), complex_uv_candidates(umax)
        fig = lambda d: report.plot_uv(rows, d, "complex_uv.png", f"F_U(V) < 0, U <= {umax}")
    else:
        a_cap = args.acap or cfg.a_cap
        y_bound = args.y_bound or cfg.y_bound
        _progress(cfg, f"Thue search for L_{args.iso}, y <= {y_bound}")
        try:
            _, hits = iso_La_hoshi_miyake(args.iso, a_cap=a_cap, y_bound=y_bound, with_hits=True)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        header, rows = ("b", "x", "y", "lambda"), sorted(hits)
        fig = None
    if cfg.format == "json":
        _emit(report.to_json({"header": list(header), "rows": [[str(v) for v in r] for r in rows]}))
    else:
        _emit("\t".join(header))
        for r in rows:
            _emit("\t".join(map(str, r)))
    if args.figdir and fig is not None:
        _figure(cfg, fig(args.figdir))
    return EXIT_OK


def cmd_families(args, cfg: CliConfig) -> int:
    if (args.md is None) == (args.ennola is None):
        raise UsageError("choose exactly one of --md D or --ennola L")
    if args.md is not None:
        try:
            m = md_construction(args.md)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        data = {
            "polynomial": str(m.poly),
            "values": [[str(i), str(j), str(n)] for i, j, n in m.values],
            "distinct": [str(n) for n in sorted(m.distinct_values)],
            "lower_bound": str(comb(args.md, 2)),
        }
        if cfg.format == "json":
            _emit(report.to_json(data))
        else:
            _emit(f"# {m.poly}\n" + report.tsv(("i", "j", "n"), m.values))
        if args.figdir:
            rows = [(d, len(md_construction(d).distinct_values), comb(d, 2)) for d in range(2, args.md + 1)]
            _figure(cfg, report.plot_md(rows, args.figdir))
        return EXIT_OK
    if args.ennola < 3:
        raise UsageError("l must be >= 3")
    checks = ennola_checks(args.ennola)
    rows = [(c.label, c.n, str(c.eps), str(c.delta), c.sum_ok, c.units_ok) for c in checks]
    if cfg.format == "json":
        keys = ("label", "n", "eps", "delta", "sum_ok", "units_ok")
        _emit(report.to_json([dict(zip(keys, (r[0], str(r[1]), r[2], r[3], r[4], r[5]))) for r in rows]))
    else:
        _emit(report.tsv(("identity", "n", "eps", "delta", "sum_ok", "units_ok"), rows))
    return EXIT_OK


def cmd_bound(args, cfg: CliConfig) -> int:
    if args.d < 1:
        raise UsageError("d must be >= 1")
    v = theoretical_bound(args.d)
    if cfg.format == "json":
        _emit(report.to_json({"d": str(args.d), "bound": str(v), "digits": len(str(v))}))
    elif args.digits:
        _emit(str(len(str(v))))
    else:
        _emit(str(v))
    return EXIT_OK


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value config file (default: $UNITSUMS_CONFIG)")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--json", action="store_true", help="shorthand for --format json")
    common.add_argument("--figdir", help="also write figures into this directory")
    common.add_argument("-v", "--verbose", action="count", default=None)
    common.add_argument("--a-cap", type=int)
    common.add_argument("--precision-cap", type=int)

    p = argparse.ArgumentParser(prog="unitsums", description="Sums of two units in quadratic and cubic fields.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify a cubic field")
    c.add_argument("field", help='"a2,a1,a0" or a polynomial such as "x^3-x^2-1"')
    c.add_argument("--n", type=int)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("nk", parents=[common], help="compute N_K")
    c.add_argument("field", nargs="?")
    c.add_argument("--quadratic", type=int, metavar="D", help="real quadratic field Q(sqrt D)")
    c.add_argument("--max", type=int, default=100, metavar="X")
    c.set_defaults(func=cmd_nk)

    c = sub.add_parser("verify-tables", parents=[common], help="re-derive and check all tables")
    c.add_argument("--uvw-bound", type=int)
    c.add_argument("--umax", type=int)
    c.set_defaults(func=cmd_verify_tables)

    c = sub.add_parser("search", parents=[common], help="run one of the bounded searches")
    c.add_argument("--uvw", action="store_true")
    c.add_argument("--bound", type=int)
    c.add_argument("--positive", action="store_true", help="with --uvw: distinct pairs with U > 0")
    c.add_argument("--complex-uv", action="store_true")
    c.add_argument("--umax", type=int)
    c.add_argument("--iso", type=int, metavar="A")
    c.add_argument("--acap", type=int)
    c.add_argument("--y-bound", type=int)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("search-uvw", parents=[common], help="TSV rows U, V, W of the (U, V, W) equation")
    c.add_argument("--bound", type=int)
    c.add_argument("--positive", action="store_true", help="distinct pairs with U > 0")
    c.set_defaults(func=cmd_search, uvw=True, complex_uv=False, iso=None, umax=None, acap=None, y_bound=None)

    c = sub.add_parser("families", parents=[common], help="M_d and Ennola constructions")
    c.add_argument("--md", type=int, metavar="D")
    c.add_argument("--ennola", type=int, metavar="L")
    c.set_defaults(func=cmd_families)

    c = sub.add_parser("bound", parents=[common], help="the general upper bound on |N_K|")
    c.add_argument("d", type=int)
    c.add_argument("--digits", action="store_true", help="print only the number of digits")
    c.set_defaults(func=cmd_bound)
    return p


def _protect_negative_triples(argv: list[str]) -> list[str]:
    # argparse would read "-1,0,-1" as an option; a leading space keeps it positional
    return [" " + a if a[:1] in "-−" and _TRIPLE.match(a.replace("−", "-")) else a for a in argv]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative_triples(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args.config)
        fmt = "json" if args.json else args.format
        cfg = cfg.updated(format=fmt, verbosity=args.verbose, a_cap=args.a_cap, precision_cap=args.precision_cap)
        if args.command == "verify-tables":
            cfg = cfg.updated(uvw_bound=args.uvw_bound, u_max=args.umax)
        with precision_cap(cfg.precision_cap):
            return args.func(args, cfg)
    except UsageError as exc:
        print(f"unitsums: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidFieldError as exc:
        print(f"unitsums: invalid field: {exc}", file=sys.stderr)
        return EXIT_INVALID_FIELD
    except (ValueError, OSError) as exc:
        print(f"unitsums: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
