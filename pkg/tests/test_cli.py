import json
import subprocess
import sys
from pathlib import Path

import pytest

from galjacobi.cli import main

DESC = Path(__file__).resolve().parent.parent / "descriptors"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("cmd, name", [
    ("group", "h8.json"),
    ("group", "c3.json"),
    ("local", "wild_c3.json"),
    ("local", "h12_local.json"),
    ("local", "tame_c3.json"),
    ("tame", "c2_p3_tame.json"),
    ("global", "h12_global.json"),
    ("global", "s3_global_j2.json"),
])
def test_commands_pass(capsys, cmd, name):
    code, out, _ = run(capsys, cmd, "--input", str(DESC / name))
    assert code == 0, out
    assert out.startswith(f"== {cmd} ==")


def test_structured_output_is_deterministic(capsys):
    args = ("global", "--input", str(DESC / "h12_global.json"), "--format", "structured")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    report = json.loads(first)
    assert set(report) == {"command", "inputs", "invariants", "verdicts", "provenance"}


def test_wild_c3_local_report(capsys):
    code, out, _ = run(capsys, "local", "--input", str(DESC / "wild_c3.json"), "--format", "structured")
    inv = json.loads(out)["invariants"]["local"]
    assert code == 0
    assert inv["different_valuation"] == 4 and inv["sqrt_inverse_different"] == -2


def test_c2_j2_report(capsys):
    _, out, _ = run(capsys, "tame", "--input", str(DESC / "c2_p3_tame.json"), "--format", "structured")
    J2 = json.loads(out)["invariants"]["J2"]
    assert sorted(J2.values()) == ["-1/3; order=1", "1; order=1"]


def test_wild_global_is_undecided_not_failed(capsys):
    code, out, _ = run(capsys, "global", "--input", str(DESC / "h8_wild_global.json"))
    assert code == 0
    assert "UNKNOWN" in out


def test_input_errors_exit_2(capsys):
    code, _, err = run(capsys, "group", "--input", str(DESC / "bad_table.json"))
    assert code == 2 and "$.group.table" in err
    code, _, _ = run(capsys, "tame", "--input", str(DESC / "h8.json"))
    assert code == 2
    code, out, _ = run(capsys, "group", "--input", str(DESC / "bad_table.json"), "--format", "structured")
    assert code == 2 and json.loads(out)["error"] == "input"


def test_unknown_suite_lists_available(capsys):
    code, _, err = run(capsys, "verify", "--suite", "no-such-suite")
    assert code == 2
    for name in ("hilbert", "adams", "twisted-y", "gauss", "j2", "decomposition", "symplectic"):
        assert name in err


@pytest.mark.parametrize("suite, order", [("adams", 16), ("twisted-y", 12), ("gauss", 13), ("decomposition", 24)])
def test_verify_suites(capsys, suite, order):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--max-order", str(order))
    assert code == 0, out
    assert "fail" not in out.lower().replace("failures: 0", "")


def test_stdin_and_module_entry_point():
    text = (DESC / "c3.json").read_text()
    proc = subprocess.run([sys.executable, "-m", "galjacobi", "group", "--input", "-"],
                          input=text, capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert "order: 3" in proc.stdout
