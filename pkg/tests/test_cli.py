"""End-to-end command-line coverage: exit codes, output shapes, file I/O."""

from __future__ import annotations

import json

import pytest

from posetgroups import (
    FinitePoset,
    build_space,
    builtin_group,
    group_to_doc,
    poset_from_json,
    poset_to_json,
    spec_for,
)
from posetgroups.cli import main

from conftest import fixture_space


@pytest.fixture()
def pentad_file(tmp_path):
    path = tmp_path / "pentad.json"
    path.write_text(poset_to_json(fixture_space("pentad")), encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_text_summary(capsys):
    code, out, err = run(capsys, "build", "--group", "cyclic:3")
    assert code == 0 and err == ""
    assert "points: 39" in out
    assert "components: 1" in out
    assert "beat points: 0" in out


def test_build_cover_count_matches_space(capsys):
    space = build_space(spec_for(builtin_group("cyclic:3"), ["a"]))
    code, out, _ = run(capsys, "build", "--group", "cyclic:3")
    assert code == 0
    assert f"cover relations: {len(space.hasse)}" in out


def test_build_json_roundtrips(capsys):
    code, out, _ = run(capsys, "build", "--group", "cyclic:2", "--json")
    assert code == 0
    rebuilt = poset_from_json(out)
    assert rebuilt == build_space(spec_for(builtin_group("cyclic:2"), ["a"]))


def test_build_out_writes_file(capsys, tmp_path):
    target = tmp_path / "space.json"
    code, out, _ = run(
        capsys, "build", "--group", "cyclic:2", "--json", "--out", str(target)
    )
    assert code == 0 and out == ""
    assert isinstance(poset_from_json(target.read_text(encoding="utf-8")), FinitePoset)


def test_build_mode_and_pointed_flags(capsys):
    code, out, _ = run(
        capsys, "build", "--group", "cyclic:3", "--mode", "sandt:2", "--pointed"
    )
    assert code == 0
    assert "points: 46" in out


def test_aut_json_on_base_space(capsys):
    code, out, _ = run(
        capsys, "aut", "--group", "klein4", "--mode", "none", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 4
    assert doc["acts_freely"] is True
    assert sorted(doc["table"][0]) == [0, 1, 2, 3]


def test_core_on_space_file(capsys, pentad_file):
    code, out, _ = run(capsys, "core", "--space-file", pentad_file)
    assert code == 0
    assert "5 -> core 4" in out
    assert "removed" in out


def test_selfmaps_on_space_file(capsys, pentad_file):
    code, out, _ = run(capsys, "selfmaps", "--space-file", pentad_file)
    assert code == 0
    assert "continuous self-maps: 130" in out
    assert "homotopy classes: 5" in out
    assert "equivalence-class group order: 4" in out


def test_selfmaps_size_guard(capsys):
    code, out, err = run(capsys, "selfmaps", "--group", "cyclic:3")
    assert code == 2
    assert err.startswith("error:")


def test_homology_json(capsys):
    code, out, _ = run(capsys, "homology", "--group", "cyclic:3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["b0"], doc["b1"], doc["h1_torsion"]) == (1, 7, [])
    assert doc["covering_graph_cycle_rank"] == 7


def test_h1_action_json(capsys):
    code, out, _ = run(capsys, "h1-action", "--group", "cyclic:2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 2
    assert doc["betti"] == 5
    assert doc["distinct"] is True
    assert len(doc["matrices"]) == 2


def test_export_dot(capsys, tmp_path):
    target = tmp_path / "space.dot"
    code, out, _ = run(
        capsys, "export-dot", "--group", "cyclic:2", "--out", str(target)
    )
    assert code == 0 and out == ""
    text = target.read_text(encoding="utf-8")
    assert text.startswith("digraph poset {")
    assert text.rstrip().endswith("}")


def test_verify_single_check(capsys):
    code, out, _ = run(
        capsys, "verify", "--group", "cyclic:2", "--check", "base-point-count"
    )
    assert code == 0
    assert "PASS base-point-count" in out


def test_verify_reports_failure_with_exit_one(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--group",
        "klein4",
        "--gens",
        "a",
        "--allow-non-generating",
        "--check",
        "generators",
    )
    assert code == 1
    assert "FAIL generators" in out


def test_verify_rejects_unknown_check_name(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--group", "cyclic:2", "--check", "bogus"])
    assert excinfo.value.code == 2


def test_verify_all_text_and_skip(capsys):
    code, out, _ = run(
        capsys,
        "verify-all",
        "--group",
        "cyclic:2",
        "--fences",
        "1",
        "--skip",
        "h1-action-faithful",
    )
    assert code == 0
    assert "SKIP h1-action-faithful" in out
    assert "0 failed" in out


def test_verify_all_json_failure_exit(capsys):
    code, out, _ = run(
        capsys,
        "verify-all",
        "--group",
        "klein4",
        "--gens",
        "a",
        "--allow-non-generating",
        "--fences",
        "1",
        "--json",
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False
    statuses = {entry["name"]: entry["status"] for entry in doc["results"]}
    assert statuses["generators"] == "FAIL"
    assert statuses["base-connected"] == "PASS"


def test_unknown_group_is_a_usage_error(capsys):
    code, out, err = run(capsys, "build", "--group", "cyclic:one")
    assert code == 2
    assert err.startswith("error:")


def test_group_and_space_file_conflict(capsys, pentad_file):
    code, _, err = run(
        capsys, "build", "--group", "cyclic:2", "--space-file", pentad_file
    )
    assert code == 2
    assert "not both" in err


def test_group_file_with_explicit_gens(capsys, tmp_path):
    path = tmp_path / "klein.json"
    path.write_text(json.dumps(group_to_doc(builtin_group("klein4"))), encoding="utf-8")
    code, out, _ = run(
        capsys, "build", "--group-file", str(path), "--gens", "a,b", "--mode", "none"
    )
    assert code == 0
    assert "points: 16" in out


def test_group_file_requires_gens(capsys, tmp_path):
    path = tmp_path / "klein.json"
    path.write_text(json.dumps(group_to_doc(builtin_group("klein4"))), encoding="utf-8")
    code, _, err = run(capsys, "build", "--group-file", str(path))
    assert code == 2
    assert "--gens" in err


def test_aut_budget_env_var(capsys, tmp_path, monkeypatch):
    antichain = FinitePoset.from_relations([f"p{i}" for i in range(8)], [])
    path = tmp_path / "antichain.json"
    path.write_text(poset_to_json(antichain), encoding="utf-8")
    monkeypatch.setenv("POSETGROUPS_BUDGET_AUT", "10")
    code, _, err = run(capsys, "aut", "--space-file", str(path))
    assert code == 2
    assert "budget" in err


def test_aut_budget_flag_overrides_env(capsys, tmp_path, monkeypatch):
    antichain = FinitePoset.from_relations([f"p{i}" for i in range(3)], [])
    path = tmp_path / "antichain.json"
    path.write_text(poset_to_json(antichain), encoding="utf-8")
    monkeypatch.setenv("POSETGROUPS_BUDGET_AUT", "1")
    code, out, _ = run(
        capsys, "aut", "--space-file", str(path), "--budget-aut", "100000", "--json"
    )
    assert code == 0
    assert json.loads(out)["order"] == 6
