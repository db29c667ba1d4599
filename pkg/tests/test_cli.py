import json

import pytest

from cutlab.cli import main
from cutlab.serialize import file_hash, read_json


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gen_writes_canonical_window(tmp_path, capsys):
    g = tmp_path / "free4.json"
    code, _ = _run(capsys, "gen", "--family", "free", "--rank", "2",
                   "--radius", "4", "-o", str(g))
    assert code == 0
    d = read_json(str(g))
    assert d["vertex_count"] == 161
    assert d["family"] == "free"
    g2 = tmp_path / "again.json"
    _run(capsys, "gen", "--family", "free", "--rank", "2",
         "--radius", "4", "-o", str(g2))
    assert file_hash(str(g)) == file_hash(str(g2))


def test_gen_stdout_and_version_exit(capsys):
    code, out = _run(capsys, "gen", "--family", "grid_Z", "--radius", "4")
    assert code == 0
    assert json.loads(out)["vertex_count"] == 9
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0


def test_usage_errors_exit_two(capsys):
    for argv in (
        ["gen", "--family", "klein", "--radius", "4"],
        ["cuts", "enum", "g.json", "--k", "2", "--anchor", "zero"],
        ["access", "sweep", "--family", "free", "--radii", "4,x"],
        [],
    ):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_missing_file_is_reported_not_raised(tmp_path, capsys):
    code, out = _run(capsys, "cuts", "enum", str(tmp_path / "nope.json"), "--k", "2")
    assert code == 1
    err = json.loads(out)
    assert "error" in err and "message" in err


def test_cuts_enum_pipeline(tmp_path, capsys):
    g = tmp_path / "line.json"
    _run(capsys, "gen", "--family", "grid_Z", "--radius", "6", "-o", str(g))
    cuts = tmp_path / "cuts.json"
    code, _ = _run(capsys, "cuts", "enum", str(g), "--k", "1", "--tight",
                   "-o", str(cuts))
    assert code == 0
    d = read_json(str(cuts))
    assert d["k_max"] == 1
    assert all(len(ids) > 0 for ids in d["cuts"])
    # closure pool is larger than the tight base
    code, out = _run(capsys, "cuts", "enum", str(g), "--k", "1")
    assert code == 0
    assert len(json.loads(out)["cuts"]) >= len(d["cuts"])


def test_cuts_enum_budget_env(tmp_path, capsys, monkeypatch):
    g = tmp_path / "free5.json"
    _run(capsys, "gen", "--family", "free", "--radius", "5", "-o", str(g))
    monkeypatch.setenv("CUTLAB_BUDGET", "50")
    code, out = _run(capsys, "cuts", "enum", str(g), "--k", "3")
    assert code == 1
    assert json.loads(out)["error"] == "BudgetExceeded"
    monkeypatch.delenv("CUTLAB_BUDGET")
    code, _ = _run(capsys, "cuts", "enum", str(g), "--k", "2")
    assert code == 0


def test_tree_build_from_anchored_cuts(tmp_path, capsys):
    g = tmp_path / "line.json"
    _run(capsys, "gen", "--family", "grid_Z", "--radius", "6", "-o", str(g))
    cuts = tmp_path / "cuts.json"
    _run(capsys, "cuts", "enum", str(g), "--k", "1", "--tight", "-o", str(cuts))
    tree = tmp_path / "tree.json"
    dot = tmp_path / "tree.dot"
    code, _ = _run(capsys, "tree", "build", str(g), str(cuts),
                   "-o", str(tree), "--dot", str(dot))
    assert code == 0
    td = read_json(str(tree))
    assert len(td["vertices"]) == len(td["edges"]) + 1
    assert dot.read_text(encoding="utf-8").startswith("graph structure_tree {")


def test_tree_build_rejects_crossing_cuts(tmp_path, capsys):
    g = tmp_path / "free4.json"
    _run(capsys, "gen", "--family", "free", "--radius", "4", "-o", str(g))
    cuts = tmp_path / "cuts.json"
    _run(capsys, "cuts", "enum", str(g), "--k", "2", "-o", str(cuts))
    code, out = _run(capsys, "tree", "build", str(g), str(cuts))
    assert code == 1
    assert json.loads(out)["error"] == "NotNested"


def test_periph_pipeline_and_coneoff(tmp_path, capsys):
    g = tmp_path / "free4.json"
    _run(capsys, "gen", "--family", "free", "--radius", "4", "-o", str(g))
    sysf = tmp_path / "cosets.json"
    code, _ = _run(capsys, "periph", "gen", str(g), "--recipe", "cosets",
                   "-o", str(sysf))
    assert code == 0
    assert len(read_json(str(sysf))["peripherals"]) == 54

    code, out = _run(capsys, "periph", "analyze", str(g), str(sysf),
                     "--k", "2", "--report", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["thinness"] == 2
    assert rep["tame"]["tame"] is True
    assert rep["pool_size"] == 66
    assert rep["minimise"]["dropped"] == []
    assert len(rep["consolidate"]["names"]) == 18

    cone = tmp_path / "cone.json"
    dot = tmp_path / "cone.dot"
    code, _ = _run(capsys, "coneoff", str(g), str(sysf),
                   "-o", str(cone), "--dot", str(dot))
    assert code == 0
    cd = read_json(str(cone))
    assert cd["vertex_count"] == 161 + 54
    assert cd["base_vertex_count"] == 161
    assert chr(949) in dot.read_text(encoding="utf-8")


def test_cycles_dagger_verdicts(tmp_path, capsys):
    g = tmp_path / "k4.json"
    _run(capsys, "gen", "--family", "tree_with_end", "--radius", "4", "-o", str(g))
    # hand files on the window graph: use two disjoint short cycles? a tree
    # has none, so feed explicit combos through a line graph instead
    gl = tmp_path / "line.json"
    _run(capsys, "gen", "--family", "grid_Z", "--radius", "4", "-o", str(gl))
    gens = tmp_path / "gens.json"
    cyc = tmp_path / "cycle.json"
    win = tmp_path / "window.json"
    gens.write_text(json.dumps({"cycles": []}))
    cyc.write_text(json.dumps({"edges": []}))
    win.write_text(json.dumps({"edges": [0, 1]}))
    code, out = _run(capsys, "cycles", "dagger", str(gl), "--gen", str(gens),
                     "--cycle", str(cyc), "--window", str(win))
    assert code == 0
    assert json.loads(out)["generated"] is True


def test_access_profile_rerun_bytes(tmp_path, capsys):
    g = tmp_path / "free4.json"
    _run(capsys, "gen", "--family", "free", "--radius", "4", "-o", str(g))
    sysf = tmp_path / "cosets.json"
    _run(capsys, "periph", "gen", str(g), "--recipe", "cosets", "-o", str(sysf))
    p1 = tmp_path / "p1.json"
    p2 = tmp_path / "p2.json"
    code, _ = _run(capsys, "access", "profile", str(g), str(sysf),
                   "--kmax", "2", "--json", str(p1))
    assert code == 0
    code, _ = _run(capsys, "access", "profile", str(g), str(sysf),
                   "--kmax", "2", "--workers", "4", "--json", str(p2))
    assert code == 0
    assert file_hash(str(p1)) == file_hash(str(p2))
    assert read_json(str(p1))["K"] == 2


def test_access_sweep_stdout(capsys):
    code, out = _run(capsys, "access", "sweep", "--family", "grid_Z",
                     "--recipe", "empty", "--radii", "4,5,6", "--kmax", "2")
    assert code == 0
    d = json.loads(out)
    assert [row["radius"] for row in d["rows"]] == [4, 5, 6]
    assert all(row["K"] == 1 for row in d["rows"])
    assert d["flags"] == []
