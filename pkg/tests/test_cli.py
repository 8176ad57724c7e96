import copy
import json
import shutil
import subprocess

import pytest

from hopfcyclic import presets, specfile
from hopfcyclic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_presets_list(capsys):
    code, out, _ = run(capsys, "presets", "list")
    assert code == 0
    assert out.split() == presets.names()


def test_presets_dump_round_trip(capsys, tmp_path):
    path = tmp_path / "sw.json"
    assert main(["presets", "dump", "sweedler4-dual-numbers", "--out", str(path)]) == 0
    assert specfile.read(str(path)) == json.loads(json.dumps(
        presets.get("sweedler4-dual-numbers")))
    code, out, _ = run(capsys, "verify", str(path), "--json")
    assert code == 0
    assert json.loads(out)["input"]["source"] == "file"


def test_verify_human_output(capsys):
    code, out, _ = run(capsys, "verify", "group-sign-z2", "--max-p", "1", "--max-q", "1")
    assert code == 0
    assert "result: ok" in out


@pytest.mark.parametrize("target, theory, want", [
    ("crossed", "hh", [1, 0, 0]),
    ("crossed", "hc", [1, 0, 1]),
    ("diagonal", "hh", [1, 0, 0]),
    ("coinvariant", "hc", [1, 0, 1]),
    ("invariant", "hc", [1, 0, 1]),
])
def test_homology_targets(capsys, target, theory, want):
    code, out, _ = run(capsys, "homology", "group-sign-z2", "--theory", theory,
                       "--target", target, "--max-degree", "2", "--json")
    assert code == 0
    tables = json.loads(out)["tables"]
    assert tables["%s(%s)" % (theory.upper(), target)] == want


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "group-sign-z2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["tables"]["HH(diagonal)"] == doc["tables"]["HH(A^op><H^cop)"]


def test_compare_sweedler_notes_unsupported(capsys):
    code, out, _ = run(capsys, "compare", "sweedler4-dual-numbers", "--max-degree", "1",
                       "--json")
    doc = json.loads(out)
    assert code == 0
    assert any("unsupported" in n for n in doc["notes"])


def test_spectral(capsys):
    code, out, _ = run(capsys, "spectral", "group-sign-z2", "--theory", "hc")
    assert code == 0
    assert "E2" in out and "semisimple collapse: ok" in out


def test_json_is_deterministic(capsys):
    argv = ["spectral", "group-z3", "--max-p", "1", "--max-q", "1", "--json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_field_override(capsys):
    code, out, _ = run(capsys, "homology", "group-z2", "--field", "Fp:2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["input"]["field"] == "Fp:2"
    # Q[Z/2] over F_2 is the dual numbers: HH_1 no longer vanishes
    assert doc["tables"]["HH(crossed)"][1] > 0
    assert any("finite field" in n for n in doc["notes"])


def test_corrupted_spec_fails(capsys, tmp_path):
    s = copy.deepcopy(presets.get("group-z3"))
    s["hopf"]["antipode"] = [[x, x, "1"] for x in s["hopf"]["basis"]]
    path = tmp_path / "bad.json"
    path.write_text(specfile.dumps(s))
    code, _, err = run(capsys, "verify", str(path))
    assert code == 1
    code, _, err = run(capsys, "homology", str(path))
    assert code == 1 and "antipode" in err


@pytest.mark.parametrize("argv", [
    ["verify", "no-such-preset"],
    ["presets", "dump"],
    ["homology", "group-z2", "--theory", "xx"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_missing_antipode_inverse_degrades(capsys, tmp_path):
    # phi and A^op >< H^cop only use S; the S^-1 parts are skipped or noted
    s = copy.deepcopy(presets.get("sweedler4-dual-numbers"))
    del s["hopf"]["antipode_inverse"]
    path = tmp_path / "no-inverse.json"
    path.write_text(specfile.dumps(s))
    code, out, _ = run(capsys, "compare", str(path), "--max-degree", "1", "--json")
    doc = json.loads(out)
    assert code == 0
    assert not any(c["name"].startswith("printed") for r in doc["reports"]
                   for c in r["checks"])
    assert any("unsupported" in n for n in doc["notes"])
    code, out, _ = run(capsys, "verify", str(path), "--max-p", "1", "--max-q", "1", "--json")
    assert code == 0
    assert not any(c["name"].startswith("op_cop") for r in json.loads(out)["reports"]
                   for c in r["checks"])


def test_bad_field_is_usage_error(capsys):
    assert run(capsys, "verify", "group-z2", "--field", "Fp:6")[0] == 2


def test_size_guard_exit_code(capsys):
    assert run(capsys, "homology", "group-s3", "--target", "crossed",
               "--max-degree", "9")[0] == 3


def test_bad_json_file(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{")
    assert run(capsys, "verify", str(path))[0] == 2


@pytest.mark.skipif(shutil.which("hopfcyclic") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["hopfcyclic", "presets", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "taft-3" in proc.stdout
