import json
import subprocess
import sys

import jsonschema
import pytest

from holesat import cli
from holesat.complexes import COMPLEXES_SCHEMA
from holesat.decide import REPORT_SCHEMA
from holesat.formula import CnfFormula, all_sign_patterns, parse_dimacs, serialize_dimacs
from holesat.graph import from_json
from holesat.holes import HARVEST_SCHEMA
from holesat.oracle import RECORD_SCHEMA, BienstockEquivalenceError


@pytest.fixture
def cnf(tmp_path):
    path = tmp_path / "signs.cnf"
    path.write_text(serialize_dimacs(all_sign_patterns()))
    return str(path)


def _run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce_dot(capsys, cnf):
    code, out, _ = _run(capsys, "reduce", cnf, "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    assert sum(" -- " in ln for ln in lines) == 188
    assert sum(ln.strip().startswith('"') and " -- " not in ln for ln in lines) == 103


def test_reduce_json_and_text(capsys, cnf):
    code, out, _ = _run(capsys, "reduce", cnf)
    g = from_json(out)
    assert (code, g.node_count, g.edge_count) == (0, 103, 188)
    assert _run(capsys, "reduce", cnf, "--format", "text")[1] == "nodes 103\nedges 188\n"


def test_holes_and_complexes_validate(capsys, cnf, tmp_path):
    code, out, _ = _run(capsys, "holes", cnf)
    assert code == 0
    jsonschema.validate(json.loads(out), HARVEST_SCHEMA)
    graph = tmp_path / "g.json"
    assert _run(capsys, "reduce", cnf, "--out", str(graph))[0] == 0
    code, out, _ = _run(capsys, "complexes", str(graph), "--strict-fragments")
    assert code == 0
    jsonschema.validate(json.loads(out), COMPLEXES_SCHEMA)
    assert out == _run(capsys, "complexes", cnf, "--strict-fragments")[1]


def test_decide(capsys, cnf):
    code, out, _ = _run(capsys, "decide", cnf)
    assert code == 0
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)
    code, out, _ = _run(capsys, "decide", cnf, "--format", "text")
    assert out.startswith("claimed SAT\ncomplex nodes 103\n")


def test_verify_generated_batch(capsys):
    code, out, err = _run(capsys, "verify", "--gen", "n=3,m=4,instances=50,seed=7")
    assert code == 0
    records = [json.loads(ln) for ln in out.splitlines()]
    assert [r["index"] for r in records] == list(range(50))
    for r in records:
        jsonschema.validate(r, RECORD_SCHEMA)
        if not r["claim_agrees"]:
            assert set(r["counterexample"]) == {"dimacs", "graph", "complex_nodes"}
    summary = json.loads(err.splitlines()[-1])
    assert summary["instances"] == 50
    assert summary["claim_agreements"] == sum(r["claim_agrees"] for r in records)


def test_verify_parallel_matches_serial(capsys):
    spec = "n=1-3,m=1-4,instances=12,seed=3"
    serial = _run(capsys, "verify", "--gen", spec)
    parallel = _run(capsys, "verify", "--gen", spec, "--jobs", "3")
    assert serial == parallel


def test_verify_files_and_bundles(capsys, cnf, tmp_path):
    bundles = tmp_path / "bundles"
    summary = tmp_path / "summary.json"
    code, out, _ = _run(capsys, "verify", cnf, "--bundle-dir", str(bundles), "--summary", str(summary))
    assert code == 0
    assert json.loads(summary.read_text())["claimed_sat_but_unsat"] == 1
    assert parse_dimacs((bundles / "inst_0000.cnf").read_text()) == all_sign_patterns()
    assert from_json((bundles / "inst_0000.graph.json").read_text()).node_count == 103


def test_gen_directory_and_determinism(capsys, tmp_path):
    args = ["gen", "--n", "1-3", "--m", "2", "--instances", "4", "--seed", "9"]
    assert _run(capsys, *args, "--out", str(tmp_path / "a"))[0] == 0
    assert _run(capsys, *args, "--out", str(tmp_path / "b"))[0] == 0
    a = sorted((tmp_path / "a").iterdir())
    assert [p.name for p in a] == [f"inst_{k:04d}.cnf" for k in range(4)]
    for p in a:
        assert p.read_bytes() == (tmp_path / "b" / p.name).read_bytes()
        assert parse_dimacs(p.read_text()).m == 2
    code, out, _ = _run(capsys, "verify", str(tmp_path / "a"))
    assert code == 0 and len(out.splitlines()) == 4


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["reduce"],
    ["verify"],
    ["verify", "--gen", "n=1,m=1,instances=0"],
    ["verify", "--gen", "x=1"],
    ["verify", "--budget", "0", "--gen", "n=1,m=1,instances=1"],
    ["gen", "--instances", "3"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert _run(capsys, *argv)[0] == 2


def test_processing_errors_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.cnf"
    bad.write_text("p cnf 2 1\n1 2 0\n")
    code, out, err = _run(capsys, "reduce", str(bad))
    assert code == 1 and out == "" and "line 2" in err
    assert _run(capsys, "decide", str(tmp_path / "missing.cnf"))[0] == 1
    (tmp_path / "g.json").write_text('{"nodes": []}')
    assert _run(capsys, "holes", str(tmp_path / "g.json"))[0] == 1


def test_equivalence_failure_exits_3(capsys, monkeypatch):
    def broken(f, budget, strict):
        raise BienstockEquivalenceError("forced", {"dimacs": serialize_dimacs(f), "graph": {},
                                                   "complex_nodes": [], "cycle": []})

    monkeypatch.setattr(cli, "cross_validate", broken)
    code, out, err = _run(capsys, "verify", "--gen", "n=1,m=1,instances=2")
    assert code == 3
    assert json.loads(err.splitlines()[-1])["equivalence_failures"] == 2
    assert all("equivalence_failure" in json.loads(ln) for ln in out.splitlines())


def test_stdin_and_console_script(cnf):
    text = open(cnf).read()
    runs = [subprocess.run([sys.executable, "-m", "holesat.cli", "reduce", "-", "--format", "dot"],
                           input=text, capture_output=True, text=True, check=True)
            for _ in range(2)]
    assert runs[0].stdout == runs[1].stdout
    assert runs[0].stderr == ""


@pytest.mark.parametrize("argv", [
    ["reduce", "{cnf}", "--format", "dot"],
    ["reduce", "{cnf}"],
    ["holes", "{cnf}"],
    ["complexes", "{cnf}"],
    ["decide", "{cnf}"],
    ["verify", "--gen", "n=1-2,m=1-3,instances=6,seed=11"],
    ["gen", "--n", "3", "--m", "5", "--seed", "4"],
])
def test_byte_identical_reruns(capsys, cnf, argv):
    argv = [a.replace("{cnf}", cnf) for a in argv]
    assert _run(capsys, *argv) == _run(capsys, *argv)


def test_unit_clause_sat_claim(capsys, tmp_path):
    path = tmp_path / "unit.cnf"
    path.write_text(serialize_dimacs(CnfFormula.from_ints(1, [(1, 1, 1)])))
    code, out, _ = _run(capsys, "verify", str(path))
    assert code == 0
    assert json.loads(out)["sat_truth"] is True
