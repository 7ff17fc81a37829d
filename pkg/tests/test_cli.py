import json

import pytest

from groupshift import Pattern, Sft, cli, full_shift
from groupshift.serialize import dumps, sft_to_json

import helpers as h
from test_acceptance import _write_inputs


@pytest.fixture
def paths(tmp_path):
    return _write_inputs(tmp_path)


def run(argv, tmp_path, name="out.json"):
    out = tmp_path / name
    code = cli.main(list(argv) + ["-o", str(out)])
    return code, (out.read_text() if out.exists() else "")


def write_sft(tmp_path, name, x):
    p = tmp_path / f"{name}.json"
    p.write_text(dumps(sft_to_json(x)))
    return str(p)


def test_check_empty_verdicts(paths, tmp_path):
    code, text = run(["check-empty", paths["golden"]], tmp_path)
    doc = json.loads(text)
    assert code == 0 and doc["certificate"]["verdict"] == "nonempty_periodic"
    empty = write_sft(tmp_path, "empty", h.z_sft("01", ["0", "1"]))
    code, text = run(["check-empty", empty], tmp_path)
    assert code == 1 and json.loads(text)["certificate"]["verdict"] == "empty"


def test_check_empty_unknown_exit_code(tmp_path):
    G = h.Z2
    forb = [Pattern.make(G, {(): a, ("a",): b}) for a in "01234" for b in "01234" if int(b) != (int(a) + 1) % 5]
    p = write_sft(tmp_path, "mod5", Sft(G, "01234", forb))
    code, text = run(["check-empty", p, "--budget", "4"], tmp_path)
    assert code == 2 and json.loads(text)["certificate"]["verdict"] == "unknown"


def test_capacity_exit_code(tmp_path):
    p = write_sft(tmp_path, "full", full_shift(h.Z2, "01"))
    code, _ = run(["patches", p, "--radius", "3"], tmp_path)
    assert code == 4


def test_input_errors(paths, tmp_path, capsys):
    missing = str(tmp_path / "nope.json")
    assert cli.main(["check-empty", missing]) == 3
    (tmp_path / "bad.json").write_text("{not json")
    assert cli.main(["check-empty", str(tmp_path / "bad.json")]) == 3
    assert cli.main(["bogus"]) == 3
    assert cli.main(["patches", paths["golden"], "--radius", "-1"]) == 3
    assert "error" in capsys.readouterr().err


def test_text_format(paths, tmp_path):
    code, text = run(["check-empty", paths["golden"], "--format", "text"], tmp_path)
    assert code == 0 and text.startswith("verdict: nonempty_periodic")


def test_patch_count_matches_library(paths, tmp_path):
    code, text = run(["patches", paths["golden"], "--radius", "3"], tmp_path)
    doc = json.loads(text)
    assert code == 0 and doc["count"] == len(doc["patches"]) == h.z_count_words("01", ["11"], 7)


def test_emitted_patches_reverify(paths, tmp_path):
    code, text = run(["synthesize", "domino", paths["golden"], "--radius", "12"], tmp_path)
    doc = json.loads(text)
    assert code == 0 and doc["verification"]["ok"]
    cfg = tmp_path / "patch.json"
    cfg.write_text(json.dumps({"spec": 1, "kind": "patch", "cells": doc["patch"]}))
    code, text = run(["verify", paths["golden"], str(cfg), "--radius", "12"], tmp_path, "v.json")
    assert code == 0 and json.loads(text)["verification"]["ok"]
    code, text = run(["patches", paths["golden"], "--radius", "2"], tmp_path, "p.json")
    for i, patch in enumerate(json.loads(text)["patches"]):
        cfg.write_text(json.dumps({"spec": 1, "kind": "patch", "cells": patch}))
        assert run(["verify", paths["golden"], str(cfg), "--radius", "2"], tmp_path, f"v{i}.json")[0] == 0


def test_verify_reports_violation(paths, tmp_path):
    code, text = run(["verify", paths["golden"], paths["ones"], "--radius", "3"], tmp_path)
    doc = json.loads(text)
    assert code == 1 and not doc["verification"]["ok"] and doc["verification"]["violation"]["anchor"] == ""


def test_walk_output(paths, tmp_path):
    code, text = run(["walk", paths["disp"], "ssS", "--start", "b"], tmp_path)
    doc = json.loads(text)
    assert code == 0 and doc["end"] == "ab"


def test_stdout_when_no_output_file(paths, capsys):
    assert cli.main(["check-empty", paths["golden"]]) == 0
    assert json.loads(capsys.readouterr().out)["certificate"]["verdict"] == "nonempty_periodic"


def test_outputs_are_byte_stable(paths, tmp_path):
    a = run(["synthesize", "greedy", paths["f2golden"], "--radius", "3"], tmp_path, "a.json")
    b = run(["synthesize", "greedy", paths["f2golden"], "--radius", "3"], tmp_path, "b.json")
    assert a == b and a[0] == 0
