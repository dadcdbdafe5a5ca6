"""Command-line behavior, including the verification entry point."""

from __future__ import annotations

import json
import shutil
from pathlib import Path

import pytest

from grapecalc.cli import main, verify_paper_main

DATA = Path(__file__).resolve().parent.parent / "src" / "grapecalc" / "data"


def test_clusters_list(capsys):
    assert main(["clusters"]) == 0
    out = capsys.readouterr().out.split()
    assert "e8" in out and "c2" in out


def test_form_output(capsys):
    assert main(["form", "e8"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "8"
    assert len(lines) == 9


def test_covers_form_and_oracle(capsys, tmp_path):
    assert main(["covers", "form", "--p", "2", "--q", "3", "--r", "5"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "8"
    target = tmp_path / "c2.form"
    assert main(["covers", "form", "--p", "3", "--q", "2", "--r", "5",
                 "--out", str(target)]) == 0
    capsys.readouterr()
    assert target.read_text().splitlines()[0] == "8"
    from grapecalc.intform import IntSymForm
    emitted = IntSymForm.from_text(target.read_text())
    assert emitted.invariants().congruence_key() == \
        (8, 8, 1, -8, True, "negative definite")
    assert main(["covers", "oracle"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 5 and "FAIL" not in out


def test_monodromy_eval_and_classify(capsys):
    assert main(["monodromy", "eval", "UVUVU"]) == 0
    out = capsys.readouterr().out
    assert "[[" in out and "class" in out
    assert main(["monodromy", "classify", "1", "1", "0", "1"]) == 0
    assert capsys.readouterr().out.strip() == "I_1"
    assert main(["monodromy", "classify", "1", "0", "0", "2"]) == 1


def test_fibers_catalog(capsys):
    assert main(["fibers", "catalog", "III*"]) == 0
    out = capsys.readouterr().out
    assert "euler 9" in out and "UVUVUVUVU" in out


def test_fibers_blowdown(capsys):
    assert main(["fibers", "blowdown", "--pipeline", "II"]) == 0
    out = capsys.readouterr().out
    assert "after blowdown 3" in out
    assert "cusp" in out


def test_fibers_degeneration_builtin_and_file(capsys, tmp_path):
    assert main(["fibers", "degeneration", "--type", "II*"]) == 0
    assert "valid" in capsys.readouterr().out
    tree_file = DATA / "trees" / "iistar.tree"
    assert main(["fibers", "degeneration", "--type", "II*",
                 "--tree", str(tree_file)]) == 0
    capsys.readouterr()
    bad = tmp_path / "bad.tree"
    bad.write_text(tree_file.read_text().replace("degree=6", "degree=5"))
    assert main(["fibers", "degeneration", "--type", "II*",
                 "--tree", str(bad)]) == 1
    assert "INVALID" in capsys.readouterr().out


def test_slips_moves_replay_search(capsys, tmp_path):
    assert main(["slips", "moves", "e8"]) == 0
    moves_out = capsys.readouterr().out.strip().splitlines()
    assert len(moves_out) >= 1

    trace_file = DATA / "e8_to_c2.trace"
    assert main(["slips", "replay", str(trace_file)]) == 0
    out = capsys.readouterr().out
    assert "replayed 7 moves" in out

    out_file = tmp_path / "found.trace"
    assert main(["slips", "search", "e8", "c2", "--out", str(out_file)]) == 0
    capsys.readouterr()
    assert out_file.exists()
    assert main(["slips", "replay", str(out_file)]) == 0
    capsys.readouterr()

    assert main(["slips", "search", "e8", "c2", "--max-depth", "2"]) == 1
    capsys.readouterr()


def test_replayed_trace_reproduces_final_cluster_byte_for_byte(capsys):
    """CLI replay emits exactly the serialization the library computes."""
    assert main(["slips", "replay", str(DATA / "e8_to_c2.trace")]) == 0
    out = capsys.readouterr().out
    final_text = "\n".join(out.splitlines()[1:]) + "\n"
    from grapecalc.data import load_named_cluster
    from grapecalc.slips import SlipTrace, canonical_key
    trace = SlipTrace.from_text((DATA / "e8_to_c2.trace").read_text(),
                                resolve_cluster=load_named_cluster)
    assert final_text == trace.replay()[-1].to_text()
    from grapecalc.hexgrapes import GrapeCluster
    final = GrapeCluster.from_text(final_text)
    assert canonical_key(final) == canonical_key(load_named_cluster("c2"))


def test_render_svg(capsys, tmp_path):
    out = tmp_path / "e8.svg"
    assert main(["render", "e8", "--out", str(out)]) == 0
    assert out.read_text().startswith("<svg")


def test_verify_only_monodromy_is_twelve_checks(capsys):
    assert main(["verify-paper", "--only", "monodromy"]) == 0
    out = capsys.readouterr().out
    assert "12/12 checks passed" in out


def test_verify_structured_output(capsys):
    assert verify_paper_main(["--only", "monodromy", "--report", "structured"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["all_passed"] is True
    assert len(body["checks"]) == 12


def test_verify_fails_on_corrupt_data(tmp_path, capsys):
    corrupt = tmp_path / "data"
    shutil.copytree(DATA, corrupt)
    # move the branch grape one cell east: still a connected cluster, but the
    # linking form is no longer unimodular and the determinant check says so
    e8 = corrupt / "e8.grapes"
    e8.write_text(e8.read_text().replace("b 0 -1", "b 1 -1"))
    code = main(["verify-paper", "--only", "e8", "--data-dir", str(corrupt)])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out and "det=9" in out


def test_verify_missing_data_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        verify_paper_main(["--data-dir", str(tmp_path)])


def test_env_var_overrides_data_dir(tmp_path, monkeypatch, capsys):
    shutil.copytree(DATA, tmp_path / "data")
    monkeypatch.setenv("GRAPECALC_DATA", str(tmp_path / "data"))
    assert main(["clusters"]) == 0
    assert "e8" in capsys.readouterr().out
