import json
import shutil
import subprocess
import sys

import pytest

from quandle_lab.cli import main
from quandle_lab.data import data_dir
from quandle_lab.groupring import GroupRingElement, parse


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cohomology_dimension(capsys):
    code, out, _ = run(capsys, "cohomology", "--quandle", "R:4", "--degree", "2", "--mod", "2")
    assert code == 0 and out.strip() == "dim = 4"


def test_cohomology_group(capsys):
    code, out, _ = run(capsys, "cohomology", "--quandle", "R:4", "--degree", "3")
    assert code == 0 and "Z^2 x (Z_2)^2" in out
    code, out, _ = run(capsys, "cohomology", "--quandle", "S4", "--degree", "3", "--mod", "4")
    assert code == 0 and "(Z_2)^2 x Z_4" in out


def test_fig8(capsys):
    code, out, _ = run(capsys, "invariant", "fig8", "--cocycle", "eta11")
    assert code == 0 and out.strip() == "16"
    code, out, _ = run(capsys, "invariant", "fig8", "--cocycle", "eta1", "--mod", "4", "--scale", "2")
    assert code == 0 and out.strip() == "4+12t^2"


def test_knot_braid(capsys):
    code, out, _ = run(capsys, "invariant", "knot", "--quandle", "S4", "--cocycle", "s4-phi",
                       "--braid", "1,1,1", "--strands", "2")
    assert code == 0 and out.strip() == "4+12t"


def test_torus_and_period(capsys):
    code, out, _ = run(capsys, "invariant", "torus", "--quandle", "R:8", "--cocycle", "theta3",
                       "--n", "4", "--k", "16")
    assert code == 0 and out.strip().endswith("2048+2048t")
    code, out, _ = run(capsys, "period", "--quandle", "L:8:3", "--n", "4")
    assert code == 0 and "color period 16" in out


def test_twistspin_both(capsys):
    code, out, _ = run(capsys, "invariant", "twistspin", "--m", "3", "--k", "2", "--quandle", "R:3",
                       "--cocycle", "3-2-A", "--method", "both")
    assert code == 0
    assert "movie: 3+6t" in out and "chart: 3+6t^2" in out


def test_chart_needs_k2(capsys):
    code, _, err = run(capsys, "invariant", "twistspin", "--m", "3", "--k", "3", "--quandle", "R:3",
                       "--cocycle", "3-2-A", "--method", "chart")
    assert code == 2 and "error" in err


@pytest.mark.parametrize("argv", [
    ["invariant", "fig8", "--cocycle", "eta11"],
    ["invariant", "knot", "--quandle", "S4", "--cocycle", "s4-phi", "--braid", "1,-2,1,-2", "--strands", "3"],
    ["invariant", "twistspin", "--m", "5", "--k", "2", "--quandle", "R:5", "--cocycle", "5-2-A"],
    ["cohomology", "--quandle", "R:3", "--degree", "3", "--mod", "3"],
])
def test_json_schema_and_text_agree(capsys, argv):
    code, text, _ = run(capsys, *argv)
    assert code == 0
    code, raw, _ = run(capsys, "--json", *argv)
    assert code == 0
    doc = json.loads(raw)
    assert {"command", "inputs", "value", "elapsed_ms"} <= set(doc)
    assert doc["command"].startswith(argv[0])
    if argv[0] == "invariant":
        value = GroupRingElement.from_json(doc["value"])
        assert parse(text.strip().split()[-1], value.modulus) == value
        assert isinstance(doc["colorings"], int)
    # flag after the subcommand behaves the same
    code, raw2, _ = run(capsys, *argv, "--json")
    assert json.loads(raw2)["value"] == doc["value"]


def test_deterministic_output(capsys):
    argv = ["invariant", "torus", "--quandle", "L:8:5", "--cocycle", "theta9", "--n", "3", "--k", "3"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize("argv", [
    ["quandle", "--quandle", "Q:3"],
    ["cohomology", "--quandle", "R:3", "--degree", "2", "--mod", "6"],
    ["invariant", "fig8", "--cocycle", "no-such"],
    ["invariant", "knot", "--quandle", "S4", "--cocycle", "s4-phi", "--braid", "1,9", "--strands", "2"],
    ["cocycle", "--check", "/nonexistent/file.txt"],
    ["bogus"],
    [],
    ["--budget", "-1", "quandle", "--quandle", "R:3"],
])
def test_user_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_budget_exceeded(capsys):
    code, _, err = run(capsys, "--budget", "0.001", "table", "--which", "cohomology")
    assert code == 2 and "exceeds budget" in err


def test_cocycle_check(capsys, tmp_path):
    good = tmp_path / "good.txt"
    code, out, _ = run(capsys, "cocycle", "--quandle", "R:3", "--degree", "3", "--mod", "3")
    assert code == 0
    block = out.split("# basis-vector: 2/")[0]
    good.write_text(block)
    code, out, _ = run(capsys, "cocycle", "--check", str(good))
    assert code == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("# quandle: R:3\n# degree: 2\n# modulus: 3\n0,1 1\n")
    code, _, err = run(capsys, "cocycle", "--check", str(bad))
    assert code == 2 and "cocycle condition" in err


def test_quandle_command(capsys):
    code, out, _ = run(capsys, "quandle", "--quandle", "S4", "--iso", "A:2:1,1,1")
    assert code == 0 and "isomorphic" in out


def test_table_exit_codes(capsys):
    code, out, _ = run(capsys, "table", "--which", "fig8")
    assert code == 0 and "5/5 PASS" in out
    code, out, _ = run(capsys, "table", "--which", "twistspin", "--failures-only")
    assert code == 1 and "3-3-A-a" in out


def test_data_override(capsys, tmp_path, monkeypatch):
    root = tmp_path / "data"
    shutil.copytree(data_dir(), root)
    path = root / "expected" / "fig8.tsv"
    path.write_text(path.read_text().replace("eta11\t0\t1\t16", "eta11\t0\t1\t17"))
    monkeypatch.setenv("QUANDLE_LAB_DATA", str(root))
    code, out, _ = run(capsys, "table", "--which", "fig8")
    assert code == 1 and "FAIL" in out


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "quandle_lab.cli", "invariant", "fig8", "--cocycle", "eta2",
                          "--mod", "4"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "4+12t"
