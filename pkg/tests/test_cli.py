import json
import os
import subprocess
import sys
from pathlib import Path

from qcrit.cli import main

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_criticals_base_prime_case(capsys):
    for p in (2, 3, 5, 7):
        code, payload = run_json(capsys, "criticals", "--p", str(p),
                                 "--lambda", "1", "--base")
        assert code == 0
        assert payload["set"] == list(range(1, p))
        assert payload["q"] == p


def test_criticals_q1024_contains_39(capsys):
    code, payload = run_json(capsys, "criticals", "--p", "2", "--lambda", "10",
                             "--base")
    assert code == 0
    assert 39 in payload["set"]


def test_is_critical_worked_example(capsys):
    code, payload = run_json(capsys, "is-critical", "39", "--p", "2",
                             "--lambda", "10")
    assert code == 0
    assert payload["critical"] is True
    assert payload["mu"] == 39
    rows = payload["cyclic_class"]
    assert len(rows) == 10
    assert [r["value"] for r in rows] == [39, 78, 156, 312, 624, 225, 450,
                                          900, 777, 531]
    kept = [r for r in rows if r["kept"]]
    assert [r["struck_value"] for r in kept] == [4, 112, 388, 132]


def test_cmp_text_output(capsys):
    code, out = run_cli(capsys, "cmp", "3", "6", "--p", "2")
    assert code == 0
    assert out.strip() == "3 <_2 6"


def test_core_defect_lucas_mu(capsys):
    code, payload = run_json(capsys, "core", "963", "--p", "3")
    assert code == 0 and payload["core"] == 3
    code, payload = run_json(capsys, "defect", "963", "--p", "3")
    assert code == 0 and payload["defect"] == 2
    code, payload = run_json(capsys, "lucas", "5", "2", "--p", "2")
    assert code == 0 and payload["value"] == 0
    code, payload = run_json(capsys, "mu", "39", "--p", "2", "--lambda", "10")
    assert code == 0 and payload["mu"] == 39


def test_witness_schema(capsys):
    code, payload = run_json(capsys, "witness", "1", "2", "1", "3", "--p", "2")
    assert code == 0
    assert payload == {"quad": [1, 2, 1, 3],
                       "witness": {"e": 2, "f": 1, "g": 1, "r": 1}}


def test_witness_invalid_quad_is_usage_error(capsys):
    code = main(["witness", "1", "2", "1", "4", "--p", "2"])
    assert code == 2


def test_admissible_enumeration(capsys):
    code, payload = run_json(capsys, "admissible", "--p", "2",
                             "--m-bound", "16", "--ell-bound", "3")
    assert code == 0
    assert [1, 2, 1, 3] in payload["quadruples"]
    assert payload["count"] == len(payload["quadruples"])


def test_verify_single_statement_exit_zero(capsys):
    code, payload = run_json(capsys, "verify", "equivariance", "--p", "2",
                             "--lambda", "1", "--prec", "32", "--trials", "6",
                             "--seed", "3")
    assert code == 0
    assert payload["pass"] is True
    assert payload["reports"][0]["statement"] == "projection_equivariance"
    assert payload["reports"][0]["elapsed_ms"] is None


def test_verify_json_deterministic(capsys):
    args = ("verify", "cyclic-digits", "--p", "2", "--lambda", "2",
            "--bound", "500")
    code1, out1 = run_cli(capsys, "--format", "json", *args)
    code2, out2 = run_cli(capsys, "--format", "json", *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_timing_flag(capsys):
    code, payload = run_json(capsys, "verify", "cyclic-digits", "--p", "2",
                             "--lambda", "2", "--bound", "200", "--timing")
    assert code == 0
    assert payload["reports"][0]["elapsed_ms"] is not None


def test_text_and_json_agree_on_results(capsys):
    args = ("verify", "orbit-min", "--p", "2", "--lambda", "2",
            "--c-bound", "50", "--oracle-bound", "400")
    code_t, out_t = run_cli(capsys, *args)
    code_j, payload = run_json(capsys, *args)
    assert code_t == code_j == 0
    assert ("ALL PASS" in out_t) == payload["pass"]


def test_explore_rows(capsys):
    code, payload = run_json(capsys, "explore", "--p", "2", "--lambda", "1",
                             "--k-bound", "15", "--prec", "64")
    assert code == 0
    assert len(payload["rows"]) == 8
    assert all(r["lead_exponent"] == r["k"] for r in payload["rows"])


def test_series_eval_and_psi(capsys, tmp_path):
    code, w = run_json(capsys, "series", "eval", "--kind", "orbit", "--p", "2",
                       "--lambda", "1", "--k", "3", "--prec", "24")
    assert code == 0
    blob = tmp_path / "w.json"
    blob.write_text(json.dumps(w))
    code, projected = run_json(capsys, "series", "psi", "--f", str(blob),
                               "--p", "2", "--lambda", "1")
    assert code == 0
    coeffs = projected["coeffs"]
    assert coeffs[4] == [1]
    assert sum(c != [0] for c in coeffs) == 1


def test_series_compose_identity(capsys):
    x = {"field": {"p": 2, "n": 1, "modulus": [0, 1]}, "prec": 4,
         "coeffs": [[0], [1], [0], [0], [0]]}
    g = {"field": {"p": 2, "n": 1, "modulus": [0, 1]}, "prec": 4,
         "coeffs": [[0], [1], [1], [0], [0]]}
    code, payload = run_json(capsys, "series", "compose",
                             "--f", json.dumps(x), "--g", json.dumps(g))
    assert code == 0
    assert payload["coeffs"] == g["coeffs"]


def test_series_invert_round_trip(capsys):
    code, gamma = run_json(capsys, "series", "eval", "--kind", "random-gamma",
                           "--p", "2", "--lambda", "1", "--prec", "32",
                           "--seed", "4", "--factors", "3")
    assert code == 0
    code, inv = run_json(capsys, "series", "invert", "--g", json.dumps(gamma))
    assert code == 0
    code, again = run_json(capsys, "series", "invert", "--g", json.dumps(inv))
    assert code == 0
    assert again == gamma


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code = main(["--format", "json", "--output", str(target),
                 "core", "963", "--p", "3"])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["core"] == 3


def test_usage_errors_exit_two(capsys):
    assert main(["definitely-not-a-command"]) == 2
    assert main([]) == 2
    assert main(["core", "963"]) == 2  # missing --p
    assert main(["core", "0", "--p", "3"]) == 2  # domain error


def test_env_var_controls_format(capsys, monkeypatch):
    monkeypatch.setenv("QCRIT_FORMAT", "json")
    code, out = run_cli(capsys, "core", "963", "--p", "3")
    assert code == 0
    assert json.loads(out)["core"] == 3


def test_module_entry_point():
    env = dict(os.environ, PYTHONPATH=SRC)
    proc = subprocess.run(
        [sys.executable, "-m", "qcrit", "--format", "json", "defect", "963",
         "--p", "3"],
        capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["defect"] == 2
    proc = subprocess.run([sys.executable, "-m", "qcrit", "nope"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 2
    assert proc.stdout == ""
