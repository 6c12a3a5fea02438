import json

import pytest
from click.testing import CliRunner

from fanbundle.cli import main
from fanbundle.core import save_graph
from conftest import complete_graph


@pytest.fixture
def run(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    runner = CliRunner()

    def go(*args):
        res = runner.invoke(main, list(args))
        return res.exit_code, res.stdout

    return go


def write_graph(path, g):
    path.write_text(save_graph(g))
    return str(path)


def test_k5_rejected(run, tmp_path):
    f = write_graph(tmp_path / "k5.graph", complete_graph(5))
    code, out = run("recognize", "--class", "outer3", "--in", f)
    assert code == 1
    assert json.loads(out)["reason"] == "edge count exceeds characterization"


def test_generate_then_validate(run, tmp_path):
    code, out = run("generate", "--family", "waterlily", "--n", "9", "--out", "wl")
    assert code == 0 and json.loads(out)["edges"] == 27
    for ext in ("graph", "drawing", "svg"):
        assert (tmp_path / f"wl.{ext}").exists()
    code, out = run("validate", "--in", "wl.drawing")
    assert code == 0 and json.loads(out)["valid"]
    code, out = run("validate", "--in", "wl.drawing", "--sides", "1")
    assert code == 1 and json.loads(out)["violations"]


def test_witness_files(run, tmp_path):
    f = write_graph(tmp_path / "k4.graph", complete_graph(4))
    code, _ = run("recognize", "--class", "outer3", "--in", f, "--witness", "w.drawing",
                  "--svg", "w.svg")
    assert code == 0
    code, _ = run("validate", "--in", "w.drawing")
    assert code == 0
    code, _ = run("render", "--in", "w.drawing", "--out", "again.svg")
    assert code == 0 and (tmp_path / "again.svg").read_text().startswith("<svg")


def test_k3n_and_d12(run, tmp_path):
    code, out = run("generate", "--family", "k3n", "--k", "2", "--mirror", "--out", "kk")
    assert code == 0 and json.loads(out)["crossingPairs"] == 20
    assert (tmp_path / "kk.geom").exists()
    code, out = run("generate", "--family", "d12", "--out", "d")
    assert code == 0 and json.loads(out)["edges"] == 90


def test_reduce3p(run, tmp_path):
    code, out = run("reduce3p", "--A", "2,2,2,3,3,3,4,5,6", "--B", "10", "--K", "4", "--out", "r")
    stats = json.loads(out)
    assert code == 0 and stats["beamVertices"] == 151 and stats["expectedYes"] is True
    assert "conventions" in stats
    assert (tmp_path / "r.rot").exists() and (tmp_path / "r.stats.json").exists()
    code, out = run("reduce3p", "--A", "1,1,1", "--B", "10", "--out", "bad")
    assert code == 2 and "error" in json.loads(out)


def test_oracle_and_density_report(run, tmp_path):
    f = write_graph(tmp_path / "k5.graph", complete_graph(5))
    code, out = run("oracle", "--which", "outer3", "--in", f)
    assert code == 1 and json.loads(out)["reason"]
    code, out = run("density-report", "--family", "bn", "--max-n", "20")
    rows = json.loads(out)["rows"]
    assert code == 0 and [r["n"] for r in rows] == [5, 8, 11, 14, 17, 20]
    assert all(r["tight"] for r in rows)


def test_usage_and_io_errors(run):
    code, _ = run("recognize", "--bogus")
    assert code == 2
    code, out = run("recognize", "--class", "outer3", "--in", "missing.graph")
    assert code == 2 and "cannot read" in json.loads(out)["error"]
    code, _ = run("generate", "--family", "waterlily", "--n", "4", "--out", "x")
    assert code == 2


def test_output_is_deterministic(run, tmp_path):
    f = write_graph(tmp_path / "k4.graph", complete_graph(4))
    a = run("recognize", "--class", "outer3", "--in", f, "--witness", "a.drawing")
    b = run("recognize", "--class", "outer3", "--in", f, "--witness", "b.drawing")
    assert a == b
    assert (tmp_path / "a.drawing").read_bytes() == (tmp_path / "b.drawing").read_bytes()


def test_help_documents_formats(run):
    code, out = run("recognize", "--help")
    assert code == 0 and "p <n> <m>" in out
