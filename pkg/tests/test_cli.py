import json
import subprocess
import sys

from bvl.cli import run


def run_cli(argv, capsys):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_zsigmondy_text_and_json(capsys):
    code, out, _ = run_cli(["zsigmondy", "--q", "2", "--n", "6"], capsys)
    assert code == 0
    assert "primitive part 1" in out
    code, out, _ = run_cli(["zsigmondy", "--q", "2", "--n", "4", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "n": 4, "phi_value": 5, "primitive_part": 5, "primitive_primes": [5], "q": 2
    }


def test_group_and_classes(capsys):
    code, out, _ = run_cli(["group", "--group", "L2:7", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 168 and payload["degree"] == 8
    code, out, _ = run_cli(["classes", "--group", "S3", "--format", "json"], capsys)
    payload = json.loads(out)
    assert [c["size"] for c in payload["classes"]] == [1, 3, 2]


def test_chartab_json(capsys):
    code, out, _ = run_cli(["chartab", "--group", "A5", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["degrees"] == [1, 3, 3, 4, 5]
    assert payload["orthogonality_verified"] is True


def test_struct_both_methods(capsys):
    code, out, _ = run_cli(
        ["struct", "--group", "S3", "--classes", "2a,2a,3a", "--method", "both", "--format", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == {"formula": 2, "brute": 2}


def test_struct_bad_classes_usage_error(capsys):
    code, _, err = run_cli(["struct", "--group", "S3", "--classes", "2a,2a"], capsys)
    assert code == 2 and "usage" in err


def test_unknown_flag_rejected(capsys):
    code, _, _ = run_cli(["zsigmondy", "--q", "2", "--n", "4", "--frobnicate"], capsys)
    assert code == 2


def test_charbound_pass(capsys):
    code, out, _ = run_cli(["charbound", "--group", "L2:9", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True and payload["bound"] == 2


def test_beauville_search_a5_negative(capsys):
    code, out, _ = run_cli(
        ["beauville", "search", "--group", "A5", "--strategy", "exhaustive"], capsys
    )
    assert code == 1
    assert "NONE_EXHAUSTED" in out


def test_beauville_roundtrip_and_determinism(tmp_path, capsys):
    cert1 = tmp_path / "cert1.json"
    cert2 = tmp_path / "cert2.json"
    code, out1, _ = run_cli(
        ["beauville", "search", "--group", "L2:7", "--format", "json", "--out", str(cert1)],
        capsys,
    )
    assert code == 0
    code, out2, _ = run_cli(
        ["beauville", "search", "--group", "L2:7", "--format", "json", "--out", str(cert2)],
        capsys,
    )
    assert code == 0
    assert out1 == out2
    assert cert1.read_bytes() == cert2.read_bytes()
    code, out, _ = run_cli(["beauville", "verify", "--cert", str(cert1)], capsys)
    assert code == 0 and "VERIFIED" in out


def test_beauville_verify_rejects_tampering(tmp_path, capsys):
    cert = tmp_path / "cert.json"
    run_cli(["beauville", "search", "--group", "L2:7", "--format", "json", "--out", str(cert)], capsys)
    payload = json.loads(cert.read_text())
    payload["pairs"][1] = payload["pairs"][0]  # y1 := x1, no longer generating
    cert.write_text(json.dumps(payload))
    code, out, _ = run_cli(["beauville", "verify", "--cert", str(cert)], capsys)
    assert code == 1 and "REFUSED" in out


def test_genclasses_verify(capsys):
    code, out, _ = run_cli(
        ["genclasses", "verify", "--group", "A5", "--c", "5a", "--d", "3a", "--format", "json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["counterexample"] is None and payload["pairs_tested"] == 20
    code, out, _ = run_cli(
        ["genclasses", "verify", "--group", "A5", "--c", "5a", "--d", "5b"], capsys
    )
    assert code == 1


def test_genclasses_search(capsys):
    code, out, _ = run_cli(["genclasses", "search", "--group", "A5", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert ["5a", "3a"] in payload["pairs"]


def test_pointcount(capsys):
    code, out, _ = run_cli(
        ["pointcount", "--group", "L3:2", "--classes", "7a,7a,7b", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["predicted"] == 1024
    assert payload["exact_count"] == payload["n"] * payload["class_size"]
    code, _, err = run_cli(["pointcount", "--group", "L2:7", "--classes", "2a,3a,4a"], capsys)
    assert code == 2 and "rank" in err


def test_bad_group_spec_usage_error(capsys):
    code, _, err = run_cli(["group", "--group", "Z9"], capsys)
    assert code == 2
    code, _, err = run_cli(["group", "--group", "L2:6"], capsys)
    assert code == 2


def test_capacity_exit_code(capsys):
    code, _, err = run_cli(["chartab", "--group", "A12"], capsys)
    assert code == 3 and "capacity" in err


def test_search_budget_exit_code(capsys):
    code, out, _ = run_cli(
        ["beauville", "search", "--group", "L2:7", "--budget", "1"], capsys
    )
    assert code == 3 and "NONE_BUDGET" in out


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "bvl.cli", "zsigmondy", "--q", "2", "--n", "12", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["primitive_primes"] == [13]
