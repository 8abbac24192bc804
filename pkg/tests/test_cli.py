import json

import pytest
from click.testing import CliRunner

from excrystal.cli import main
from excrystal.serialize import GraphDocument, edge_count


@pytest.fixture
def runner():
    return CliRunner()


def test_gen_sum(runner):
    res = runner.invoke(main, ["gen", "--type", "E6", "--weight", "1,0,0,0,0,1", "--plus", "0,1,0,0,0,0",
                               "--format", "dot"])
    assert res.exit_code == 0
    assert res.stderr.strip() == "34749"
    assert edge_count(res.stdout) > 0


def test_gen_zero(runner):
    res = runner.invoke(main, ["gen", "--type", "E6", "--weight", "0,0,0,0,0,0"])
    assert res.exit_code == 0
    doc = GraphDocument.from_json(res.stdout)
    assert len(doc.nodes) == 1 and doc.edges == []


def test_gen_e7_with_figure(runner, tmp_path):
    out = tmp_path / "b7.json"
    res = runner.invoke(main, ["gen", "--type", "E7", "--weight", "0,0,0,0,0,0,1", "-o", str(out), "--figure"])
    assert res.exit_code == 0
    assert res.stdout.strip() == "56"
    assert len(GraphDocument.from_json(out.read_text()).nodes) == 56
    assert (tmp_path / "b7.png").read_bytes()[:4] == b"\x89PNG"


@pytest.mark.parametrize("weight", ["1,0", "1,0,0,0,0,-1", "a,b,c,d,e,f"])
def test_gen_bad_weight(runner, weight):
    res = runner.invoke(main, ["gen", "--type", "E6", "--weight", weight])
    assert res.exit_code == 2


def test_figure_needs_output(runner):
    res = runner.invoke(main, ["gen", "--type", "E6", "--weight", "1,0,0,0,0,0", "--figure"])
    assert res.exit_code == 2


def test_kr(runner):
    res = runner.invoke(main, ["kr", "--type", "E6affine", "-r", "1", "-s", "1", "--verify"])
    assert res.exit_code == 0
    assert "27 nodes, 6 zero-arrows" in res.stderr
    assert "PASS" in res.stderr
    doc = GraphDocument.from_json(res.stdout)
    assert sum(e.color == 0 for e in doc.edges) == 6


def test_kr_adjoint_count(runner, tmp_path):
    res = runner.invoke(main, ["kr", "--type", "E6affine", "-r", "2", "-s", "1", "-o", str(tmp_path / "b.json")])
    assert res.exit_code == 0
    assert res.stdout.startswith("79 nodes")


def test_kr_e7(runner, tmp_path):
    res = runner.invoke(main, ["kr", "--type", "E7affine", "-r", "1", "-s", "1", "--verify",
                               "-o", str(tmp_path / "e7.dot"), "--format", "dot"])
    assert res.exit_code == 0
    assert res.stdout.startswith("134 nodes")
    assert "pair 0,7" in res.stdout


def test_kr_unsupported(runner):
    res = runner.invoke(main, ["kr", "--type", "E6affine", "-r", "3", "-s", "1"])
    assert res.exit_code == 2


def test_circuits(runner):
    res = runner.invoke(main, ["circuits"])
    assert res.exit_code == 0
    assert res.stdout.splitlines()[0] == "80 circuits (160 signed), 80/80 violate chains"
    res = runner.invoke(main, ["circuits", "--json"])
    data = json.loads(res.stdout)
    assert data["circuits"] == 80 and data["violating"] == 80 and data["report"]["ok"]


def test_compgraph(runner):
    res = runner.invoke(main, ["compgraph", "--node", "2", "-J", "6"])
    assert res.exit_code == 0
    assert res.stderr.strip() == "6 vertices"
    res = runner.invoke(main, ["compgraph", "--node", "2", "-J", "6,1", "--level0"])
    assert res.stderr.strip() == "11 vertices"
    res = runner.invoke(main, ["compgraph", "--node", "3", "-J", "6"])
    assert res.exit_code == 2


def test_accept_single(runner):
    res = runner.invoke(main, ["accept", "--only", "1"])
    assert res.exit_code == 0
    assert res.stdout.startswith("criterion  1: PASS")
    assert runner.invoke(main, ["accept", "--only", "12"]).exit_code == 2


def test_accept_failure_exit(runner):
    res = runner.invoke(main, ["accept", "--only", "9"])
    assert "criterion  9:" in res.stdout
    assert res.exit_code == (0 if "PASS" in res.stdout else 1)


def test_version(runner):
    res = runner.invoke(main, ["--version"])
    assert res.exit_code == 0


def test_deterministic_output(runner):
    args = ["kr", "--type", "E6affine", "-r", "6", "-s", "1"]
    assert runner.invoke(main, args).stdout == runner.invoke(main, args).stdout
