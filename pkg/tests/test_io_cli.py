from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from incolour.cli import main
from incolour.families import FamilySpec, gen_basic, gen_grid
from incolour.graphs import GraphError, IncidenceColouring, ListAssignment
from incolour.harness import random_list_assignment
from incolour.jsonio import (
    colouring_from_json,
    colouring_to_json,
    graph_from_json,
    graph_to_json,
    lists_from_json,
    lists_to_json,
    pre_from_json,
    pre_to_json,
)
from incolour.dot import incidence_graph_dot


def test_graph_json_roundtrip():
    g, _ = gen_grid(3, 2)
    assert graph_from_json(graph_to_json(g)) == g


def test_lists_json_roundtrip_and_echo_guard():
    g, _ = gen_basic("cycle", 4)
    lists = random_list_assignment(g, 3, 9, 1)
    data = lists_to_json(g, lists)
    assert lists_from_json(g, data).lists == lists.lists
    other, _ = gen_basic("cycle", 5)
    with pytest.raises(GraphError):
        lists_from_json(other, data)


def test_colouring_json_roundtrip():
    g, _ = gen_basic("cycle", 3)
    col = IncidenceColouring({0: 1, 1: 2})
    data = colouring_to_json(g, col)
    assert colouring_from_json(g, data) == col
    data["assignment"]["99"] = 1
    with pytest.raises(GraphError):
        colouring_from_json(g, data)


def test_pre_json_roundtrip():
    pre = {3: 1, 7: 2}
    assert pre_from_json(pre_to_json(pre)) == pre
    assert pre_from_json(None) is None


def test_dot_export_mentions_colours():
    g, _ = gen_basic("cycle", 3)
    from incolour.solver import solve_list_colouring

    res = solve_list_colouring(g, ListAssignment.uniform(g, 3))
    text = incidence_graph_dot(g, res.colouring)
    assert text.startswith("graph incidences {")
    assert "fillcolor=" in text and "i0 --" in text


@pytest.fixture
def runner():
    return CliRunner()


def test_cli_generate_solve_chi(runner, tmp_path):
    out = str(tmp_path)
    r = runner.invoke(main, ["generate", "--family", "cycle", "--n", "6",
                             "--k", "3", "--universe", "0", "--out", out])
    assert r.exit_code == 0, r.output
    r = runner.invoke(main, ["solve", "--graph", f"{out}/graph.json",
                             "--lists", f"{out}/lists.json", "--out", out])
    assert r.exit_code == 0, r.output
    assert (tmp_path / "colouring.json").exists()
    r = runner.invoke(main, ["chi", "--graph", f"{out}/graph.json"])
    assert r.exit_code == 0 and r.output.strip() == "3"


def test_cli_solve_unsat_exit_code(runner, tmp_path):
    out = str(tmp_path)
    runner.invoke(main, ["generate", "--family", "cycle", "--n", "4",
                         "--k", "3", "--universe", "0", "--out", out])
    r = runner.invoke(main, ["solve", "--graph", f"{out}/graph.json",
                             "--lists", f"{out}/lists.json", "--out", out])
    assert r.exit_code == 1
    r = runner.invoke(main, ["solve", "--graph", f"{out}/graph.json",
                             "--lists", f"{out}/lists.json", "--node-budget", "1",
                             "--out", out])
    assert r.exit_code == 2


def test_cli_construct_with_trace(runner, tmp_path):
    out = str(tmp_path)
    runner.invoke(main, ["generate", "--family", "grid", "--m", "4", "--n", "3",
                         "--k", "6", "--out", out])
    r = runner.invoke(main, ["construct", "--from-spec", f"{out}/spec.json",
                             "--lists", f"{out}/lists.json",
                             "--trace", f"{out}/trace.json", "--out", out])
    assert r.exit_code == 0, r.output
    trace = json.loads((tmp_path / "trace.json").read_text())
    tags = {step[2].split(":")[0] for step in trace["trace"]}
    assert "grid-step-1" in tags


def test_cli_construct_corona_with_pre(runner, tmp_path):
    out = str(tmp_path)
    runner.invoke(main, ["generate", "--family", "corona", "--n", "4", "--p", "3",
                         "--k", "7", "--universe", "0", "--out", out])
    spec = FamilySpec("corona", {"n": 4, "p": 3})
    from incolour.families import corona_pendant, generate as build
    from incolour.graphs import incidence_id
    g, _ = build(spec)
    down = incidence_id(g, 0, corona_pendant(0, 1, 4, 3))
    up = incidence_id(g, corona_pendant(0, 1, 4, 3), 0)
    (tmp_path / "pre.json").write_text(json.dumps({"pre": [[down, 1], [up, 2]]}))
    r = runner.invoke(main, ["construct", "--from-spec", f"{out}/spec.json",
                             "--lists", f"{out}/lists.json", "--pre", f"{out}/pre.json",
                             "--out", out])
    assert r.exit_code == 0, r.output
    colouring = json.loads((tmp_path / "colouring.json").read_text())
    assert colouring["assignment"][str(down)] == 1
    assert colouring["assignment"][str(up)] == 2


def test_cli_construct_rejects_small_lists(runner, tmp_path):
    out = str(tmp_path)
    runner.invoke(main, ["generate", "--family", "grid", "--m", "4", "--n", "3",
                         "--k", "5", "--out", out])
    r = runner.invoke(main, ["construct", "--from-spec", f"{out}/spec.json",
                             "--lists", f"{out}/lists.json", "--out", out])
    assert r.exit_code == 2


def test_cli_fuzz_and_report(runner, tmp_path):
    out = str(tmp_path)
    r = runner.invoke(main, ["fuzz", "--family", "cycle", "--trials", "4", "--out", out])
    assert r.exit_code == 0, r.output
    report = json.loads((tmp_path / "fuzz-report.json").read_text())
    assert report["total_failures"] == 0
    # below the guaranteed bound failures are recorded, exit code 1
    r = runner.invoke(main, ["fuzz", "--family", "cycle", "--trials", "2",
                             "--k", "2", "--out", out])
    assert r.exit_code == 1


def test_cli_fuzz_single_spec(runner, tmp_path):
    out = str(tmp_path)
    spec = FamilySpec("corona", {"n": 3, "p": 1})
    (tmp_path / "spec.json").write_text(json.dumps(spec.to_json()))
    r = runner.invoke(main, ["fuzz", "--family", "corona", "--trials", "3",
                             "--from-spec", f"{out}/spec.json", "--pre", "--out", out])
    assert r.exit_code == 0, r.output


def test_cli_regress(runner):
    r = runner.invoke(main, ["regress"])
    assert r.exit_code == 0, r.output
    assert "K4: computed=4 expected=4 [ok]" in r.output


def test_cli_export_dot(runner, tmp_path):
    out = str(tmp_path)
    runner.invoke(main, ["generate", "--family", "cycle", "--n", "5", "--out", out])
    r = runner.invoke(main, ["export-dot", "--graph", f"{out}/graph.json", "--out", out])
    assert r.exit_code == 0
    assert (tmp_path / "incidences.dot").read_text().startswith("graph incidences")


def test_cli_out_dir_from_environment(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("INCOLOUR_OUT", str(tmp_path / "envout"))
    r = runner.invoke(main, ["generate", "--family", "path", "--n", "3"])
    assert r.exit_code == 0
    assert (tmp_path / "envout" / "graph.json").exists()


def test_cli_config_error_exit_code(runner):
    r = runner.invoke(main, ["generate", "--family", "wheel", "--n", "1"])
    assert r.exit_code == 2
    r = runner.invoke(main, ["fuzz", "--family", "nonsense"])
    assert r.exit_code == 2
