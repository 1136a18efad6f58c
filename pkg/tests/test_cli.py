import json

import pytest
from click.testing import CliRunner

from rmcert.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def test_fixture_exact_json(runner):
    res = runner.invoke(main, ["fixture", "p5"])
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["value"] == ["3/5", "1/5", "-1/5", "-3/5"]
    assert doc["schema"] == 1 and doc["anchor"]


def test_fixture_T_and_r0(runner):
    doc = json.loads(runner.invoke(main, ["fixture", "r0_5"]).output)
    assert doc["value"][0] == ["2/5", "3/5", "3/5", "2/5"]
    doc = json.loads(runner.invoke(main, ["fixture", "T"]).output)
    assert doc["value"][0] == ["0", "1", "0", "0"]


def test_usage_errors(runner):
    assert runner.invoke(main, ["verify", "nope"]).exit_code == 2
    assert runner.invoke(main, ["fixture", "nope"]).exit_code == 2
    assert runner.invoke(main, ["verify", "seaweed", "--specialize-s", "abc"]).exit_code == 2


def test_verify_embedding(runner, tmp_path):
    out = tmp_path / "r.json"
    res = runner.invoke(main, ["verify", "embedding", "--json", str(out)])
    assert res.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1
    names = [c["name"] for c in doc["checks"]]
    assert names == sorted(names)
    assert all(c["anchor"] for c in doc["checks"])


def test_seed_env_fallback(runner):
    res = runner.invoke(main, ["verify", "seaweed"], env={"RMF_SEED": "9"})
    assert json.loads(res.output)["seed"] == 9


def test_seaweed_index(runner):
    doc = json.loads(runner.invoke(main, ["seaweed", "index", "--n", "5", "--i", "1", "--j", "4"]).output)
    assert doc["frobenius"] and doc["dim"] == 16
    assert runner.invoke(main, ["seaweed", "index", "--n", "5", "--i", "7"]).exit_code == 2


def test_quasitrig_commands(runner, tmp_path):
    res = runner.invoke(main, ["quasitrig", "lagrangian"])
    assert res.exit_code == 0
    tfile = tmp_path / "t.json"
    tfile.write_text(json.dumps([[1, 0], [0, 1]]))
    doc = json.loads(runner.invoke(main, ["quasitrig", "transversal", "--T", str(tfile)]).output)
    assert doc["checks"][0]["residual_summary"]["intersection_dim"] == 3
    lfile = tmp_path / "l.json"
    lfile.write_text(json.dumps([[[[0, 1], [0, 0]], [[0, 0], [0, 0]]]]))
    doc = json.loads(runner.invoke(main, ["quasitrig", "transversal", "--T", str(tfile), "--L", str(lfile)]).output)
    assert doc["checks"][0]["residual_summary"]["intersection_dim"] == 0


def test_quantum_cocycle_prepass(runner):
    res = runner.invoke(main, ["quantum", "cocycle", "--target", "cg5", "--specialize-s", "3/2"])
    assert res.exit_code == 0
    doc = json.loads(res.output)
    names = {c["name"]: c["status"] for c in doc["checks"]}
    assert names["quantum.cocycle.K5.prepass"] == "pass"
    assert names["quantum.cocycle.F_CG5"] == "warn"
    assert doc["specialize_s"] == "3/2"
