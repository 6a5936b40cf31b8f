"""Command-line interface: enumerate, evaluate, reproduce."""
import json

import pytest
from click.testing import CliRunner

from spinorinv.cli import main
from spinorinv.contraction import find_descriptor
from spinorinv.states import random_state, save_state


@pytest.fixture
def runner():
    return CliRunner()


# -------------------------------------------------------------- enumerate

def test_enumerate_counts_only(runner):
    r = runner.invoke(main, ["enumerate", "--parties", "3", "--counts-only"])
    assert r.exit_code == 0
    assert "4" in r.output and "144" in r.output


def test_enumerate_json(runner):
    r = runner.invoke(main, ["enumerate", "--parties", "4",
                             "--format", "json"])
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["n_patterns"] == 13
    assert doc["total_assignments"] == 1768


def test_enumerate_degree2_odd_parties_flagged(runner):
    r = runner.invoke(main, ["enumerate", "--parties", "3", "--degree", "2",
                             "--format", "json"])
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert doc["identically_zero"] is True


def test_enumerate_invalid_args_exit_2(runner):
    assert runner.invoke(main, ["enumerate", "--parties", "3",
                                "--degree", "3"]).exit_code == 2
    assert runner.invoke(main, ["enumerate", "--parties", "0"]).exit_code == 2
    assert runner.invoke(main, ["enumerate"]).exit_code == 2


# --------------------------------------------------------------- evaluate

def test_evaluate_catalog_on_example(runner):
    r = runner.invoke(main, ["evaluate", "I_3a", "--example", "ghz3",
                             "--format", "json"])
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert abs(doc["magnitude"] - 0.5) < 1e-10
    assert abs(complex(doc["re"], doc["im"])) - 0.5 < 1e-10


def test_evaluate_state_file(runner, tmp_path):
    p = tmp_path / "s.json"
    save_state(random_state(3, 9), p)
    r = runner.invoke(main, ["evaluate", "I_2a", "--state", str(p)])
    assert r.exit_code == 0
    assert "I_2a" in r.output


def test_evaluate_descriptor_file(runner, tmp_path):
    d = find_descriptor("I_3a")
    dp = tmp_path / "desc.json"
    dp.write_text(json.dumps(d.to_dict()))
    r = runner.invoke(main, ["evaluate", str(dp), "--example", "ghz3",
                             "--format", "json"])
    assert r.exit_code == 0
    doc = json.loads(r.output)
    assert abs(doc["magnitude"] - 0.5) < 1e-10


def test_evaluate_errors_exit_2(runner, tmp_path):
    # unknown polynomial name
    assert runner.invoke(main, ["evaluate", "I_999x", "--example",
                                "ghz3"]).exit_code == 2
    # malformed state file
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert runner.invoke(main, ["evaluate", "I_2a", "--state",
                                str(bad)]).exit_code == 2
    # both or neither state sources
    assert runner.invoke(main, ["evaluate", "I_2a"]).exit_code == 2
    p = tmp_path / "s.json"
    save_state(random_state(3, 0), p)
    assert runner.invoke(main, ["evaluate", "I_2a", "--state", str(p),
                                "--example", "ghz3"]).exit_code == 2


# -------------------------------------------------------------- reproduce

def test_reproduce_dependence_passes(runner, tmp_path):
    out = tmp_path / "dep.json"
    r = runner.invoke(main, ["reproduce", "dependence", "--states", "5",
                             "--no-figures", "--format", "json",
                             "--out", str(out)])
    assert r.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["passed"] is True
    assert doc["header"]["seed"] == 0
    assert doc["header"]["n_states"] == 5
    assert len(doc["reports"]["dependence"]["rows"]) == 90


def test_reproduce_three_spinor_reports_rank_discrepancy(runner, tmp_path):
    out = tmp_path / "three.json"
    r = runner.invoke(main, ["reproduce", "three_spinor", "--no-figures",
                             "--format", "json", "--out", str(out)])
    assert r.exit_code == 1
    doc = json.loads(out.read_text())
    rows = doc["reports"]["three_spinor"]["rows"]
    fails = [row for row in rows if row["status"] == "FAIL"]
    assert {f["name"] for f in fails} == {"full catalog", "class +++"}
    by_name = {f["name"]: f for f in fails}
    assert by_name["full catalog"]["computed"] == "64"
    assert by_name["class +++"]["computed"] == "20"
    assert "seed-stable" in by_name["full catalog"]["detail"]


def test_reproduce_four_spinor_byte_identical(runner, tmp_path):
    outs = []
    for k in range(2):
        out = tmp_path / f"four_{k}.json"
        r = runner.invoke(main, ["reproduce", "four_spinor", "--no-figures",
                                 "--format", "json", "--out", str(out)])
        assert r.exit_code == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_reproduce_text_echoes_seed_and_tolerances(runner):
    r = runner.invoke(main, ["reproduce", "dependence", "--states", "3",
                             "--seed", "7", "--no-figures"])
    assert r.exit_code == 0
    assert "seed" in r.output and "7" in r.output
    assert "1e-09" in r.output or "1e-9" in r.output
    assert "claimed" in r.output and "computed" in r.output


def test_reproduce_renders_figures(runner, tmp_path):
    out = tmp_path / "dep.json"
    r = runner.invoke(main, ["reproduce", "dependence", "--states", "3",
                             "--format", "json", "--out", str(out)])
    assert r.exit_code == 0
    pngs = list(tmp_path.glob("*.png"))
    assert pngs, "expected a rendered metric chart next to the report"


def test_reproduce_unknown_report_exit_2(runner):
    assert runner.invoke(main, ["reproduce", "bogus"]).exit_code == 2
