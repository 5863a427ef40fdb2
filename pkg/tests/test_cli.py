import json
import os
import subprocess
import sys

import pytest

from minuscule_lab.cli import main
from minuscule_lab.report import Report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_minuscule(capsys):
    assert run(capsys, "list-minuscule", "--type", "D", "--rank", "5")[1] == "D5: 1, 4, 5\n"
    assert run(capsys, "list-minuscule", "--type", "F", "--rank", "4")[1] == "F4: none\n"
    code, out, _ = run(capsys, "list-minuscule", "--type", "A", "--rank", "1", "--format", "json")
    assert json.loads(out) == {"type": "A1", "nodes": [1]}
    assert run(capsys, "list-minuscule", "--type", "D", "--rank", "2")[0] == 2


def test_dynkin(capsys):
    code, out, _ = run(capsys, "dynkin", "--type", "E", "--rank", "6", "--node", "1",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["dynkin_even"] == "1 + q^4 + q^8" and data["fixed"] == 3
    assert run(capsys, "dynkin", "--type", "A", "--rank", "1", "--node", "1",
               "--eval", "-1")[1] == "0\n"
    code, out, _ = run(capsys, "dynkin", "--type", "E", "--rank", "7", "--node", "7")
    assert "fixed              0" in out and "freeness           false" in out
    code, out, _ = run(capsys, "dynkin", "--type", "E", "--rank", "6", "--node", "1", "--unicode")
    assert "1 + q⁴ + q⁸" in out
    code, _, err = run(capsys, "dynkin", "--type", "E", "--rank", "8", "--node", "8")
    assert code == 2 and "not minuscule" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["tables", "--format", "xml"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["tables", "--instantiate", "m=2"])
    assert exc.value.code == 2
    assert run(capsys, "verify", "--max-rank", "0")[0] == 2


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--format", "json", "--instantiate", "n=2")
    rows = json.loads(out)["rows"]
    b = next(r for r in rows if r["family"] == "B_n")
    assert (b["g_dual"], b["levi_derived"], b["real_form"]) == ("so_5", "so_3", "so_{1,4}(R)")
    code, out, _ = run(capsys, "tables", "--format", "md")
    assert out.count("| g∨ |") == 2


def test_verify_small_and_deterministic(capsys, tmp_path):
    code, out1, _ = run(capsys, "verify", "--suite", "all", "--max-rank", "1", "--format", "json")
    code2, out2, _ = run(capsys, "verify", "--suite", "all", "--max-rank", "1", "--format", "json")
    assert code == code2 == 0 and out1 == out2
    rep = Report.from_dict(json.loads(out1))
    assert rep.to_json() == out1 and "timestamp" not in json.loads(out1)
    target = tmp_path / "r.json"
    run(capsys, "verify", "--suite", "identities", "--max-rank", "3", "--format", "json",
        "--out", str(target), "--timestamps")
    assert "timestamp" in json.loads(target.read_text())


def test_verify_tables_exit_code_reports_failures(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables", "--max-rank", "4")
    assert code == 1 and "FAIL" in out and "A4 node" in out


def test_verify_identities_full(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["summary"]["fail"] == 0
    subjects = {r["subject"] for r in rep["records"] if r["id"] == "identity.two_route"}
    assert len(subjects) >= 40


def test_module_entry_point_and_threads():
    env_cmd = [sys.executable, "-m", "minuscule_lab", "verify", "--suite", "identities",
               "--max-rank", "4", "--format", "json"]
    serial = subprocess.run(env_cmd, capture_output=True, text=True, check=True)
    parallel = subprocess.run(env_cmd, capture_output=True, text=True, check=True,
                              env={**os.environ, "MINUSCULE_LAB_THREADS": "3"})
    assert serial.stdout == parallel.stdout
