"""Exit codes and report formats of the command-line interface."""

import csv
import json

import pytest

from cubicmai.cli import (EXIT_BUDGET, EXIT_EMPTY_WINDOW, EXIT_FAILED_CLAIMS,
                          EXIT_IO, EXIT_OK, main)


def test_certify_default_passes(tmp_path):
    out = tmp_path / "report.json"
    assert main(["certify", "--out", str(out)]) == EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["passed"] is True
    assert payload["final_bound"] == "0.999983"
    assert payload["version"]
    assert payload["constants"]["chi_lo"] == "227/500"
    assert len(payload["entries"]) > 500


def test_certify_mutation_flag_fails(capsys):
    assert main(["certify", "--mutate", "b_zeta=+0.001",
                 "--format", "text"]) == EXIT_FAILED_CLAIMS
    err = capsys.readouterr().err
    assert "failed claim" in err


def test_certify_unknown_constant(capsys):
    assert main(["certify", "--mutate", "bogus=+0.001"]) == EXIT_IO


def test_certify_bad_output_path():
    assert main(["certify", "--out",
                 "/nonexistent-dir/report.json"]) == EXIT_IO


def test_tables_csv(tmp_path):
    out = tmp_path / "tables.csv"
    assert main(["tables", "--out", str(out)]) == EXIT_OK
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0][0] == "k" and rows[0][-1] == "printed_match"
    ks = [int(r[0]) for r in rows[1:]]
    assert sorted(ks) == list(range(46))
    assert all(r[-1] == "true" for r in rows[1:])
    # every bound column stays below 20
    m_col = rows[0].index("M")
    assert all(float(r[m_col]) < 20 for r in rows[1:])


def test_sample_audit_mode(tmp_path):
    out = tmp_path / "audit.jsonl"
    assert main(["sample", "--n", "20", "--girth", "5", "--trials", "3",
                 "--seed", "7", "--out", str(out)]) == EXIT_OK
    lines = [json.loads(l) for l in out.read_text().splitlines()]
    assert len(lines) == 4
    assert all(rec["pass"] for rec in lines[:-1])
    assert lines[-1]["summary"] and lines[-1]["violations"] == 0


def test_sample_survival_mode(tmp_path):
    out = tmp_path / "surv.jsonl"
    assert main(["sample", "--n", "100", "--girth", "3", "--trials", "200",
                 "--out", str(out)]) == EXIT_OK
    rec = json.loads(out.read_text())
    assert 0 <= rec["survival_fraction"] <= 1
    assert abs(rec["z_score"]) <= 3


def test_sample_usage_errors():
    with pytest.raises(SystemExit):
        main(["sample", "--n", "20", "--trials", "0"])
    with pytest.raises(SystemExit):
        main(["sample", "--n", "7"])


def test_count_auto_x(tmp_path):
    out = tmp_path / "count.csv"
    assert main(["count", "--n", "200", "--mode", "log",
                 "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    header = lines[0].split(",")
    assert header == ["n", "x", "i", "j", "log_r"]
    first = lines[1].split(",")
    assert first[0] == "200" and first[1] == "91"
    assert lines[-1].startswith("# summary")


def test_count_empty_window(capsys):
    assert main(["count", "--n", "60"]) == EXIT_EMPTY_WINDOW
    err = capsys.readouterr().err
    assert "hint" in err


def test_count_explicit_x_window_check(capsys, tmp_path):
    assert main(["count", "--n", "200", "--x", "80"]) == EXIT_EMPTY_WINDOW
    out = tmp_path / "c.csv"
    assert main(["count", "--n", "200", "--x", "91", "--mode", "log",
                 "--out", str(out)]) == EXIT_OK


def test_alpha_petersen(capsys, petersen_path):
    assert main(["alpha", str(petersen_path)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "4"


def test_alpha_json_format(capsys, petersen_path):
    assert main(["alpha", str(petersen_path), "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["alpha"] == 4 and len(payload["witness"]) == 4


def test_alpha_missing_file(capsys):
    assert main(["alpha", "/no/such/file"]) == EXIT_IO


def test_alpha_budget_exceeded(capsys, petersen_path):
    assert main(["alpha", str(petersen_path), "--budget", "1"]) == EXIT_BUDGET


def test_budget_env_override(petersen_path, monkeypatch, capsys):
    monkeypatch.setenv("CUBICMAI_BUDGET", "1")
    assert main(["alpha", str(petersen_path)]) == EXIT_BUDGET
    # explicit flag wins over the environment
    assert main(["alpha", str(petersen_path), "--budget", "100000"]) == EXIT_OK


def test_mai_petersen(tmp_path, petersen_path):
    out = tmp_path / "mai.json"
    assert main(["mai", str(petersen_path), "--out", str(out)]) == EXIT_OK
    payload = json.loads(out.read_text())
    assert payload["alpha"] == 4
    assert payload["mai"]["x"] == 4
    assert all(e["pass"] for e in payload["audit"])


def test_mai_rejects_low_girth(tmp_path, capsys):
    bad = tmp_path / "c4.txt"
    bad.write_text("4 4\n1 2\n2 3\n3 4\n4 1\n")
    assert main(["mai", str(bad)]) == EXIT_FAILED_CLAIMS
