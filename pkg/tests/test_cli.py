import json
import os
import subprocess
import sys
from dataclasses import replace

import pytest

from unitsums import cli
from unitsums.arith import IntPoly
from unitsums.classifier.tables import CYCLIC_SPORADIC, SporadicTable
from unitsums.classifier.verify import verify_tables


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_field_spec():
    assert cli.parse_field_spec("1,-2,-1") == IntPoly.monic(1, -2, -1)
    assert cli.parse_field_spec(" −1 , 0 , −1 ") == IntPoly.monic(-1, 0, -1)
    assert cli.parse_field_spec("x^3 - x^2 - 1") == IntPoly.monic(-1, 0, -1)
    with pytest.raises(cli.UsageError):
        cli.parse_field_spec("not a polynomial")


def test_classify_cyclic(capsys):
    code, out, _ = run(capsys, "classify", "1,-2,-1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["classification"] == "cyclic"
    assert data["simplest_cubic_aliases"] == ["-1", "5", "12", "1259"]


def test_classify_with_n(capsys):
    code, out, _ = run(capsys, "classify", "−1,0,−1", "--n", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["La_aliases"] == ["1", "67"]
    (s,) = data["solutions"]
    assert {tuple(s["eps"]), tuple(s["delta"])} == {("1", "0", "1"), ("2", "0", "-1")}


def test_classify_pure_cubic(capsys):
    code, out, _ = run(capsys, "classify", "0,0,-2")
    assert code == 0
    assert "complex" in out and "-108" in out


def test_exit_codes(capsys):
    assert run(capsys, "classify", "0,-1,0")[0] == 3  # x^3 - x
    assert run(capsys, "classify", "x^3 +* 2")[0] == 2
    assert run(capsys, "nopecommand")[0] == 2
    assert run(capsys, "nk")[0] == 2
    assert run(capsys, "search")[0] == 2
    assert run(capsys, "families", "--md", "40")[0] == 2
    assert run(capsys, "bound", "0")[0] == 2
    assert run(capsys, "nk", "1,-2,-1", "--a-cap", "0")[0] == 2


def test_nk_outputs(capsys):
    code, out, _ = run(capsys, "nk", "1,-2,-1", "--json")
    assert code == 0 and json.loads(out)["nk"] == ["1", "2", "3", "4", "5", "19", "22"]
    code, out, _ = run(capsys, "nk", "--quadratic", "5", "--max", "10")
    assert code == 0 and out.split() == ["1", "2", "3", "4", "7"]
    code, out, _ = run(capsys, "nk", "-1,0,-1")
    assert code == 0 and "N_K      1 2 3 67" in out
    code, out, _ = run(capsys, "nk", "-1,0,-1", "--format", "tsv")
    assert out.splitlines()[0].split("\t") == ["n", "eps", "delta", "provenance", "lemma"]
    assert [l.split("\t")[0] for l in out.splitlines()[1:]] == ["1", "2", "3", "67"]


def test_verify_tables(capsys):
    code, out, _ = run(capsys, "verify-tables")
    assert code == 0
    assert "17 cyclic + 14 complex sporadic classes verified" in out
    code, out, _ = run(capsys, "verify-tables", "--json")
    assert json.loads(out)["ok"] is True


def test_verify_tables_negative_control(capsys, monkeypatch):
    rows = list(CYCLIC_SPORADIC.rows)
    rows[2] = replace(rows[2], n=rows[2].n + 1)
    bad = SporadicTable("cyclic", tuple(rows))
    monkeypatch.setattr(cli, "verify_tables", lambda **kw: verify_tables(cyclic_sporadic=bad, **kw))
    code, out, _ = run(capsys, "verify-tables")
    assert code == 1
    assert "MISMATCH" in out and "row 2 " in out


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--uvw", "--bound", "25", "--positive")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "U\tV\tW" and len(lines) == 14
    code, out, _ = run(capsys, "search", "--complex-uv", "--umax", "4")
    pairs = {tuple(map(int, l.split("\t"))) for l in out.splitlines()[1:]}
    assert len(pairs) == 14 and {(U, -U) for U in range(1, 5)} <= pairs
    code, out, _ = run(capsys, "search", "--iso", "1", "--acap", "1000")
    assert code == 0 and sorted({int(l.split("\t")[0]) for l in out.splitlines()[1:]}) == [1, 67]
    assert run(capsys, "search", "--iso", "5000")[0] == 2


def test_search_uvw_alias(capsys):
    _, a, _ = run(capsys, "search-uvw", "--bound", "10")
    _, b, _ = run(capsys, "search", "--uvw", "--bound", "10")
    assert a == b


def test_families_and_bound(capsys):
    code, out, _ = run(capsys, "families", "--md", "4", "--json")
    assert code == 0 and sorted(map(int, json.loads(out)["distinct"])) == [2, 4, 6, 8, 12, 14]
    code, out, _ = run(capsys, "families", "--ennola", "5")
    assert code == 0 and len(out.splitlines()) == 6
    code, out, _ = run(capsys, "bound", "1", "--digits")
    assert out.strip() == "1789"


def test_figures(capsys, tmp_path):
    code, _, err = run(capsys, "nk", "1,-2,-1", "--figdir", str(tmp_path))
    assert code == 0 and (tmp_path / "nk.png").stat().st_size > 0
    assert "nk.png" in err
    run(capsys, "search", "--complex-uv", "--umax", "5", "--figdir", str(tmp_path))
    run(capsys, "families", "--md", "5", "--figdir", str(tmp_path))
    assert (tmp_path / "complex_uv.png").exists() and (tmp_path / "md_construction.png").exists()


def test_progress_goes_to_stderr(capsys):
    code, out, err = run(capsys, "search", "--uvw", "--bound", "5", "-v", "--json")
    assert code == 0 and "solving" in err
    json.loads(out)


def _subprocess(args, env_extra=None):
    env = dict(os.environ)
    env.pop("UNITSUMS_CONFIG", None)
    env.update(env_extra or {})
    return subprocess.run([sys.executable, "-m", "unitsums", *args], capture_output=True, env=env, check=False)


def test_json_byte_identical():
    a = _subprocess(["nk", "1,-2,-1", "--json"])
    b = _subprocess(["nk", "1,-2,-1", "--json"])
    assert a.returncode == 0 and a.stdout == b.stdout and a.stdout


def test_config_env_var(tmp_path):
    cfg = tmp_path / "u.cfg"
    cfg.write_text("# small window\nformat = json\nuvw_bound = 5\n")
    r = _subprocess(["search", "--uvw"], {"UNITSUMS_CONFIG": str(cfg)})
    assert r.returncode == 0
    rows = json.loads(r.stdout)["rows"]
    assert rows and all(abs(int(u)) <= 5 and abs(int(v)) <= 5 for u, v, _ in rows)
    cfg.write_text("bogus = 1\n")
    assert _subprocess(["bound", "1"], {"UNITSUMS_CONFIG": str(cfg)}).returncode == 2
