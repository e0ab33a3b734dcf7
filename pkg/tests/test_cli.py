import io
import json

import pytest

from ternary_cyclotomic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coeff(capsys):
    code, out, _ = run(capsys, "coeff", "105", "7", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["results"][0]["value"] == -2 and data["results"][0]["method"] == "kaplan"
    code, out, _ = run(capsys, "coeff", "15", "7", "--format", "json")
    assert json.loads(out)["results"][0] == {"n": 15, "k": 7, "value": -1, "method": "dense"}


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, "coeff", "12", "3")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "construct", "--p", "7", "--sign", "minus")
    assert code == 2 and "empty" in err
    code, _, _ = run(capsys, "height", "5", "3", "7")
    assert code == 2


def test_json_round_trip_is_stable(capsys):
    code, out, _ = run(capsys, "beiter-sets", "11", "13", "23", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert json.dumps(data, indent=2) == out.rstrip("\n")
    assert [r["lower_bound"] for r in data["results"]] == [7, 8, 14]
    assert set(data) == {"command", "inputs", "results", "checks_passed", "checks_failed", "elapsed_ms"}


def test_height_workers_invariant(capsys):
    results = []
    for w in ("1", "3"):
        code, out, _ = run(capsys, "height", "17", "29", "1931", "--workers", w, "--format", "json")
        assert code == 0
        results.append(json.loads(out)["results"])
    assert results[0] == results[1]
    assert results[0][0]["height"] == 10


def test_construct_and_verify_cert(capsys, tmp_path, monkeypatch):
    code, out, _ = run(capsys, "construct", "--p", "13", "--sign", "plus", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["checks_failed"] == 0 and report["results"][0]["claimed"] == 8
    path = tmp_path / "cert.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "verify-cert", str(path), "--format", "json")
    assert code == 0 and json.loads(out2)["checks_failed"] == 0

    cert = dict(report["results"][0])
    cert["n"] += 1
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(cert)))
    code, _, _ = run(capsys, "verify-cert", "-")
    assert code == 1

    monkeypatch.setattr("sys.stdin", io.StringIO("{not json"))
    code, _, _ = run(capsys, "verify-cert")
    assert code == 2


def test_moller_emits_two_certificates(capsys):
    code, out, _ = run(capsys, "moller", "--p", "7", "--q", "23", "--m", "3", "--format", "json")
    rows = json.loads(out)["results"]
    assert code == 0
    assert [(r["kind"], r["n"], r["claimed"], r["verified"]) for r in rows] == [
        ("moller", 16632, 4, True), ("lehmer", 11088, 3, True)]


def test_csv_output(capsys):
    code, out, _ = run(capsys, "verify-table", "2", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "table,row,passed,expected,observed"
    assert len(lines) == 21


def test_verify_table_mismatch_exit(capsys):
    code, out, _ = run(capsys, "verify-table", "1")
    assert code == 1 and "16/17 checks passed" in out


def test_reciprocal_and_transport(capsys):
    code, out, _ = run(capsys, "reciprocal", "3", "5", "7", "--format", "json")
    rec = json.loads(out)["results"][0]
    assert code == 0 and rec["height"] == 1 and rec["agreement"] and rec["period_divides_n"]
    code, out, _ = run(capsys, "transport", "3", "5", "7", "7", "--mode", "neg", "--format", "json")
    rec = json.loads(out)["results"][0]
    assert code == 0 and rec["new_value"] == -rec["value"] == 2
    code, _, _ = run(capsys, "transport", "3", "5", "7", "7", "--target", "11")
    assert code == 2


def test_poly_text(capsys):
    code, out, _ = run(capsys, "poly", "15")
    assert code == 0 and "height=1" in out and "coeffs=[1,-1,0,1,-1,1,0,-1,1]" in out
