from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from hopfyb import schemas
from hopfyb.catalog import family_pair, get_algebra
from hopfyb.cli import run_command
from hopfyb.scalars import parse_scalar


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    return code, json.loads(out) if out else None, err


def test_catalog_listing():
    code, out, _ = run("catalog")
    assert code == 0
    assert "a_c2c2" in out and "family2" in out and "r_alpha" in out


def test_catalog_algebra_prints_hopf_document():
    code, out, _ = run("catalog", "a_c2c2")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "hopf.v1" and doc["dim"] == 8
    H = schemas.hopf_from_json(doc)
    ref = get_algebra("a_c2c2")
    assert H.mult == ref.mult and H.S_mat == ref.S_mat and H.D == ref.D


def test_involutive_family_one():
    code, doc, _ = run_json("involutive", "--hopf", "a_c2c2", "--pair", "family1")
    assert code == 0 and doc["passed"]
    assert doc["result"]["conditions"] == {"i": True, "ii": True, "iii": True, "iv": True}


def test_s3_conjugation_braids_but_is_not_involutive():
    code, out, _ = run("check-braid", "--hopf", "s3", "--pair", "conjugation")
    assert code == 0
    assert "braid equation" in out
    code, doc, _ = run_json("involutive", "--hopf", "s3", "--pair", "conjugation")
    assert code == 1 and not doc["passed"]
    assert set(doc["result"]["conditions"].values()) == {False}
    witness = doc["reports"][0]["checks"][0]["witness"]
    assert witness["at"].startswith("(12)(x)(13)")


def test_fast_mode_note():
    code, out, _ = run("check-braid", "--pair", "family2", "--fast")
    assert code == 0
    assert "sampled at a = 2, -3, 5/2, 7, -11/3" in out


@pytest.mark.parametrize("argv", [
    ("verify-hopf", "--hopf", "nope"),
    ("verify-pair", "--hopf", "s3", "--pair", "nope"),
    ("verify-pair", "--pair", "family1", "--alpha", "2*/3"),
    ("verify-hopf",),
    ("verify-pair", "--hopf", "h4", "--pair", "conjugation"),
    ("verify-pair", "--hopf", "s3", "--pair", "family1"),
    ("no-such-command",),
])
def test_input_errors_exit_two(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_malformed_files_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("verify-hopf", "--hopf", str(bad))[0] == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"schema": "hopf.v1", "name": "x"}))
    assert run("verify-hopf", "--hopf", str(wrong))[0] == 2


def test_failing_checks_exit_one():
    code, doc, _ = run_json("verify-pair", "--hopf", "s3", "--pair", "trivial")
    assert code == 1 and not doc["passed"]


def test_unknown_form_exits_two():
    code, _, err = run("cqt-verify", "--hopf", "s3", "--form", "nonexistent")
    assert code == 2 and "nonexistent" in err


def test_json_reports_are_byte_identical():
    argv = ("verify-pair", "--pair", "family2", "--json")
    first, second = run(*argv), run(*argv)
    assert first[0] == 0 and first[1] == second[1]
    assert "elapsed_ms" not in first[1]
    assert "elapsed_ms" in run(*argv, "--timings")[1]


def test_alpha_specialises_families():
    code, doc, _ = run_json("derive-right", "--pair", "family1", "--alpha", "3")
    assert code == 0
    pair = schemas.pair_from_json(doc["result"], lambda r: get_algebra(r))
    assert pair.right == family_pair(1, alpha=3).right


def test_hopf_file_round_trip(tmp_path):
    path = tmp_path / "a.json"
    assert run("catalog", "a_c2c2", "--out", str(path))[0] == 0
    code, doc, _ = run_json("verify-hopf", "--hopf", str(path))
    assert code == 0 and doc["passed"]


def test_build_r_then_extract_actions(tmp_path):
    rfile = tmp_path / "r.json"
    code, _, _ = run("build-r", "--pair", "family2", "--out", str(rfile))
    assert code == 0
    doc = schemas.load_json(rfile)
    assert doc["schema"] == "rmatrix.v1" and doc["dim_sq"] == 64
    code, out, _ = run_json("extract-actions", str(rfile))
    assert code == 0
    pair = schemas.pair_from_json(out["result"], lambda r: get_algebra(r))
    ref = family_pair(2)
    assert pair.left == ref.left and pair.right == ref.right


def test_extract_actions_rejects_flip_on_s3(tmp_path):
    n = 6
    rows = [["1" if (i % n) * n + i // n == j else "0" for j in range(n * n)] for i in range(n * n)]
    rfile = tmp_path / "flip.json"
    schemas.dump_json({"schema": "rmatrix.v1", "hopf": "s3", "dim_sq": 36, "matrix": rows}, rfile)
    code, doc, _ = run_json("extract-actions", str(rfile))
    assert code == 1
    failed = [c["name"] for c in doc["reports"][0]["checks"] if not c["passed"]]
    assert "(a) m r = m" in failed


def test_pair_file_with_derived_right_action(tmp_path):
    ref = family_pair(1)
    doc = schemas.pair_to_json(ref)
    del doc["right"]
    path = tmp_path / "pair.json"
    schemas.dump_json(doc, path)
    code, out, _ = run_json("verify-pair", "--pair", str(path))
    assert code == 0 and out["passed"]


def test_pair_file_with_relative_hopf_reference(tmp_path):
    schemas.dump_json(schemas.hopf_to_json(get_algebra("s3")), tmp_path / "s3.json")
    code, out, _ = run_json("derive-right", "--hopf", "s3", "--pair", "conjugation")
    doc = out["result"]
    doc["hopf"] = "s3.json"
    schemas.dump_json(doc, tmp_path / "conj.json")
    code, out, _ = run_json("check-braid", "--pair", str(tmp_path / "conj.json"))
    assert code == 0 and out["passed"]


def test_loaded_symbolic_pair_with_alpha(tmp_path):
    path = tmp_path / "fam.json"
    schemas.dump_json(schemas.pair_to_json(family_pair(2)), path)
    code, out, _ = run_json("verify-pair", "--pair", str(path), "--alpha", "5/2")
    assert code == 0
    code, _, _ = run("verify-pair", "--pair", str(path), "--alpha", "a+1")
    assert code == 2


def test_cqt_commands():
    code, doc, _ = run_json("cqt-verify", "--form", "r_alpha")
    assert code == 0 and "cotriangular: True" in doc["reports"][0]["notes"]
    code, doc, _ = run_json("cqt-induce", "--form", "r_alpha", "--pair", "family1")
    assert code == 0
    code, doc, _ = run_json("cqt-induce", "--form", "r_alpha", "--pair", "family2")
    assert code == 1
    last = doc["reports"][-1]
    assert not last["passed"]
    assert last["checks"][0]["witness"]["at"].startswith("h(x)h -> gh")


def test_cqt_form_file(tmp_path):
    path = tmp_path / "form.json"
    assert run("catalog", "r_alpha", "--alpha", "2", "--out", str(path))[0] == 0
    doc = schemas.load_json(path)
    assert doc["schema"] == "cqt.v1"
    assert parse_scalar(doc["form"][4][4]) == parse_scalar("2")
    code, _, _ = run("cqt-verify", "--form", str(path))
    assert code == 0


def test_zero_form_exits_one(tmp_path):
    path = tmp_path / "zero.json"
    schemas.dump_json({"schema": "cqt.v1", "hopf": "c2", "form": [["0", "0"], ["0", "0"]]}, path)
    code, _, err = run("cqt-verify", "--form", str(path))
    assert code == 1 and "convolution invertible" in err


@pytest.mark.parametrize("command", ["verify-pair", "invert-r", "transmute", "adjoints",
                                     "dcp", "bosonize", "check-phi"])
def test_s3_conjugation_subcommands(command):
    code, doc, _ = run_json(command, "--hopf", "s3", "--pair", "conjugation")
    assert code == 0, doc
    assert doc["passed"]


def test_transmute_reports_s3_braided_commutativity_failure():
    code, out, _ = run("transmute", "--hopf", "s3", "--pair", "conjugation")
    assert code == 0
    assert "m_bullet c = m_bullet: fails at" in out


def test_adjoints_output():
    code, doc, _ = run_json("adjoints", "--hopf", "s3", "--pair", "conjugation")
    assert doc["result"]["ad_L_trivial"] is False
    code, doc, _ = run_json("adjoints", "--pair", "family1")
    assert doc["result"]["ad_L_trivial"] and doc["result"]["ad_R_trivial"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfyb", "verify-hopf", "--hopf", "c2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout
