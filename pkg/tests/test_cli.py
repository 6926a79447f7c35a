import json
from importlib import resources

import pytest

from orbitalg import Graph, save_group, parse_group
from orbitalg.cli import main
from orbitalg.graphio import write_graph

from _oracles import cycle_edges, petersen_edges

jsonschema = pytest.importorskip("jsonschema")


@pytest.fixture(scope="module")
def schema():
    text = resources.files("orbitalg").joinpath("schemas/report.schema.json").read_text()
    return json.loads(text)


def _validate(doc, schema, kind):
    jsonschema.validate(doc, {**schema, "$ref": f"#/$defs/{kind}"})


def test_orbitals_text(capsys):
    assert main(["orbitals", "catalog:subsets:5,2"]) == 0
    out = capsys.readouterr().out
    assert "rank: 3" in out
    assert "valencies: 1 3 6" in out


def test_orbitals_json_schema(capsys, schema):
    assert main(["orbitals", "catalog:subsets:5,2", "--json", "--verify"]) == 0
    doc = json.loads(capsys.readouterr().out)
    _validate(doc, schema, "orbitals_report")
    assert doc["group"]["rank"] == 3
    assert {c["status"] for c in doc["axioms"]} == {"ok"}


def test_search_json_schema(capsys, schema):
    assert main(["search", "catalog:subsets:5,2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    _validate(doc, schema, "search_report")
    assert doc["summary"]["counts"]["srg"] == 2


def test_search_text_lists_srg(capsys):
    assert main(["search", "catalog:grid:4"]) == 0
    out = capsys.readouterr().out
    assert "srg(16,6,2,2)" in out
    assert "srg(16,9,4,6)" in out


def test_check_json_schema(tmp_path, capsys, schema):
    path = tmp_path / "petersen.g6"
    write_graph(Graph.from_edges(*petersen_edges()), path)
    assert main(["check", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    _validate(doc, schema, "check_report")
    assert doc["srg"] == {"v": 10, "k": 3, "lambda": 0, "mu": 1}
    assert doc["drg"]["b"] == [3, 2]


def test_check_non_regular(tmp_path, capsys, schema):
    path = tmp_path / "path.adj"
    write_graph(Graph.from_edges(3, [(0, 1), (1, 2)]), path)
    assert main(["check", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    _validate(doc, schema, "check_report")
    assert not doc["regular"]
    assert doc["rejections"]["regular"].startswith("not regular")


def test_design_json_schema(tmp_path, capsys, schema):
    from _oracles import rook_edges

    path = tmp_path / "rook.g6"
    write_graph(Graph.from_edges(*rook_edges(4)), path)
    assert main(["design", str(path), "--diag", "zero"]) == 0
    doc = json.loads(capsys.readouterr().out)
    _validate(doc, schema, "design_report")
    assert doc["design"] == {"v": 16, "k": 6, "lambda": 2}


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "subsets-5-2" in out
    assert "grid-4" in out


def test_exit_code_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["search"])  # missing group argument
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1


def test_exit_code_bad_input(tmp_path, capsys):
    assert main(["orbitals", str(tmp_path / "missing.grp")]) == 2
    bad = tmp_path / "bad.grp"
    bad.write_text("not a degree\n")
    assert main(["orbitals", str(bad)]) == 2
    # intransitive group is bad input too
    intrans = tmp_path / "intrans.grp"
    intrans.write_text("6\n(1 2 3)(4 5)\n")
    assert main(["orbitals", str(intrans)]) == 2


def test_exit_code_env_threads(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ORBITALG_THREADS", "abc")
    assert main(["search", "catalog:subsets:5,2"]) == 2
    monkeypatch.setenv("ORBITALG_THREADS", "2")
    assert main(["search", "catalog:subsets:5,2"]) == 0
    # explicit flag wins over the environment
    monkeypatch.setenv("ORBITALG_THREADS", "0")
    assert main(["search", "catalog:subsets:5,2", "--threads", "1"]) == 0


def test_group_file_round_trip_through_cli(tmp_path, capsys):
    g = parse_group("5\n(1 2 3 4 5)\n(2 5)(3 4)\n")
    path = tmp_path / "d5.grp"
    save_group(g, path)
    assert main(["orbitals", str(path), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["group"]["order"] == 10
    assert doc["group"]["name"] == "d5"


def test_search_report_dir(tmp_path, capsys):
    out = tmp_path / "report"
    assert main(["search", "catalog:subsets:5,2", "--report-dir", str(out)]) == 0
    assert (out / "candidates.csv").exists()
    assert (out / "report.json").exists()
    doc = json.loads((out / "report.json").read_text())
    assert doc["summary"]["counts"]["total"] == 2


def test_check_reads_exported_graph(tmp_path, capsys):
    export = tmp_path / "g6"
    assert main(["search", "catalog:subsets:7,3", "--export-dir", str(export)]) == 0
    capsys.readouterr()
    drg_file = export / "subsets-7-3_010.g6"
    assert drg_file.exists()
    assert main(["check", str(drg_file)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["drg"] == {"b": [12, 6, 2], "c": [1, 4, 9], "d": 3, "ki": [1, 12, 18, 4]}


def test_cli_entry_point_installed():
    import shutil
    import subprocess

    exe = shutil.which("orbitalg")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run([exe, "catalog", "list"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "subsets-5-2" in proc.stdout
