from __future__ import annotations

import csv
import hashlib
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from zzk import cli
from zzk.evaluate import Evaluator
from zzk.results import EvalResult
from zzk.zeros import bundled_zeros

BUNDLED = str(Path(cli.__file__).parent / "data" / "zeros_2k.txt")


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_plain(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "2", "--zeros", BUNDLED)
    assert code == 0
    lines = dict(l.split(" = ") for l in out.strip().splitlines())
    assert set(lines) == {"value ", "err   ", "method", "work  "}
    assert float(lines["value "]) == pytest.approx(0.0000372, abs=5e-8)


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "0.3", "--json", "--zeros", BUNDLED)
    assert code == 0
    point, res = cli.parse_result(out)
    assert point == 0.3
    direct = Evaluator(table=bundled_zeros()).Zcal(0.3)
    assert res == EvalResult(direct.value, direct.err, direct.method, direct.work)
    assert cli.render_result(point, res, "json").strip() == out.strip()


def test_eval_json_complex_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "1.2+0.5i", "--json", "--zeros", BUNDLED)
    assert code == 0
    point, res = cli.parse_result(out)
    assert point == complex(1.2, 0.5)
    assert isinstance(res.value, complex)
    assert cli.render_result(point, res, "json").strip() == out.strip()


def test_eval_csv_columns(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "-0.25", "--function", "Zquarter", "--csv", "--zeros", BUNDLED)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == cli.CSV_COLUMNS
    assert len(rows) == 2
    assert float(rows[1][1]) == pytest.approx(0.8008055262642, abs=1e-6)
    assert rows[1][3] == "expansion"


def test_eval_pole_exit_code(capsys):
    code, out, _ = run(capsys, "eval", "--sigma", "-0.5")
    assert code == cli.EXIT_POLE
    assert "simple pole" in out and "residue" in out
    code, out, _ = run(capsys, "eval", "--sigma", "0.5", "--json")
    assert code == cli.EXIT_POLE
    d = json.loads(out)
    assert d["pole"]["order"] == 2


def test_eval_other_functions(capsys):
    code, out, _ = run(capsys, "eval", "--function", "Zv", "--sigma", "2", "--v", "1", "--json", "--zeros", BUNDLED)
    assert code == 0
    assert json.loads(out)["method"] == "closed-form"
    code, out, _ = run(capsys, "eval", "--function", "Hz", "--sigma", "2", "--a", "0.5i", "--json", "--zeros", BUNDLED)
    assert code == 0
    code, out, _ = run(capsys, "eval", "--function", "Xi-hurwitz", "--s", "1", "--x", "0.5")
    assert code == cli.EXIT_POLE


def test_eval_usage_errors(capsys):
    assert run(capsys, "eval")[0] == cli.EXIT_USAGE
    assert run(capsys, "eval", "--sigma", "abc")[0] == cli.EXIT_USAGE
    assert run(capsys, "eval", "--function", "Zv", "--sigma", "2")[0] == cli.EXIT_USAGE
    assert run(capsys, "eval", "--sigma", "-0.3", "--method", "em")[0] == cli.EXIT_USAGE
    assert run(capsys, "eval", "--sigma", "2", "--zeros", "/nonexistent/zeros.txt")[0] == cli.EXIT_USAGE
    assert run(capsys, "nope")[0] == cli.EXIT_USAGE


def test_eval_tolerance_warning(capsys):
    code, _, err = run(capsys, "eval", "--sigma", "0.7", "--method", "em", "--zeros", BUNDLED, "--tol", "1e-30")
    assert code == 0
    assert "exceeds tolerance" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_table1(capsys):
    code, out, _ = run(capsys, "table", "table1")
    assert code == 0
    assert out.strip().endswith("54/54 cells pass")


def test_table1_json(capsys):
    code, out, _ = run(capsys, "table", "table1", "--json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 54 and all(r["pass"] for r in rows)


def test_table2_without_large_table(capsys, monkeypatch, tmp_path):
    monkeypatch.delenv("ZZK_ZEROS", raising=False)
    monkeypatch.setenv("ZZK_CACHE_DIR", str(tmp_path))
    code, _, err = run(capsys, "table", "table2")
    assert code == cli.EXIT_USAGE
    assert "zzk fetch" in err


def test_table2_with_large_table(capsys, zeros_100k):
    code, out, _ = run(capsys, "table", "table2", "--csv", "--zeros", str(zeros_100k.source))
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 22
    failing = {(r["row"], r["column"]) for r in rows if r["pass"] != "True"}
    # the printed Z(-3/4) = 1.69388 disagrees with every independent route
    assert failing == {("-3/4", "Z")}
    assert code == cli.EXIT_TOL


def test_identities(capsys):
    code, out, _ = run(capsys, "identities")
    assert code == 0
    code, out, _ = run(capsys, "identities", "--only", "power-sums", "--json")
    rows = json.loads(out)
    assert code == 0 and [r["identity"] for r in rows] == [f"power-sums:n={n}" for n in range(2, 7)]
    assert run(capsys, "identities", "--only", "xyz")[0] == cli.EXIT_USAGE
    assert run(capsys, "identities", "--tol", "1e-30")[0] == cli.EXIT_TOL


def test_fetch(capsys, tmp_path):
    src = Path(BUNDLED)
    url = src.resolve().as_uri()
    digest = hashlib.sha256(src.read_bytes()).hexdigest()
    dest = tmp_path / "z.txt"
    code, out, _ = run(capsys, "fetch", "--url", url, "--sha256", digest, "--dest", str(dest))
    assert code == 0 and "2000 zeros" in out
    assert dest.exists()
    code, _, err = run(capsys, "fetch", "--url", url, "--sha256", "0" * 64, "--dest", str(tmp_path / "y.txt"))
    assert code == cli.EXIT_USAGE and "does not match" in err


def test_parse_number():
    assert cli.parse_number("0.25") == 0.25
    assert cli.parse_number("0.2+0.3i") == complex(0.2, 0.3)
    assert cli.parse_number("1+0j") == 1.0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "zzk", "eval", "--sigma", "-1"], capture_output=True, text=True)
    assert r.returncode == 0
    assert "-0.28125" in r.stdout
