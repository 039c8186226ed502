import csv
import io
import json
from fractions import Fraction as F

import pytest

from polya_gate.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_check_exit_codes():
    code, text = run("check", "3/2;1,60", "--depth", "5")
    data = json.loads(text)
    assert code == 3 and data["kind"] == "first_negative_alpha" and data["k"] == 3
    code, text = run("check", "2;1,7", "--depth", "12")
    assert code == 0 and json.loads(text) == {"kind": "stieltjes_up_to", "depth": 12, "s0": "2/7"}
    code, text = run("check", "1;2,3", "--depth", "5")
    assert code == 4 and json.loads(text)["k"] == 1


def test_check_usage_errors(capsys):
    code, text = run("check", "1;0,2")
    assert code == 2 and text == ""
    assert "error" in capsys.readouterr().err
    assert run("check", "nonsense")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run("check", "1;2,3", "--depth", "0")
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        run("frobnicate")


def test_threshold_commands():
    code, text = run("threshold", "--b1", "1", "--gamma", "1/2", "--n", "3", "--lo", "1", "--hi", "100", "--prec", "1/1000")
    data = json.loads(text)
    assert code == 0 and F(data["lo"]) <= F("52.4865") <= F(data["hi"])
    code, text = run("threshold", "--b1", "1", "--gamma", "3/2", "--n", "5", "--lo", "100", "--hi", "1000", "--prec", "1/1000")
    data = json.loads(text)
    assert code == 0 and F(data["lo"]) <= F("574.8859") <= F(data["hi"])
    code, text = run("threshold", "--b1", "1", "--gamma", "1/2", "--n", "3", "--lo", "50", "--hi", "50")
    assert code == 5 and text == ""


def test_symbolic_commands():
    code, text = run("symbolic", "--n", "5", "--gamma", "3/2", "--b1", "1")
    data = json.loads(text)
    assert code == 0 and data["match"] and data["degree_actual"] == 11
    code, text = run("symbolic", "--n", "4", "--gamma", "1/2", "--b1", "1")
    assert code == 0 and json.loads(text)["degree_actual"] == 7
    code, text = run("symbolic", "--n", "3", "--gamma", "1", "--b1", "1")
    assert code == 0 and json.loads(text)["status"] == "consistent_with_zero_lead"
    assert run("symbolic", "--n", "3")[0] == 2
    code, text = run("symbolic", "--n", "3", "--sample", "10", "--seed", "4")
    assert code == 0 and json.loads(text)["violations"] == []


def test_identity_and_laguerre():
    code, text = run("identity", "driver", "--a", "1", "--order", "30")
    assert code == 0 and json.loads(text)["holds"] is True
    code, text = run("identity", "bailey", "--a", "1", "--b", "2", "--order", "30")
    assert code == 0 and json.loads(text)["holds"] is True
    assert run("identity", "bailey", "--a", "1")[0] == 2
    code, text = run("laguerre", "--b", "1", "--m", "3")
    data = json.loads(text)
    assert code == 0 and data["degree"] == 3 and data["laguerre_roots_in_positive_axis"] == 3


def test_scan_csv_and_json():
    code, text = run("scan", "--b1", "1", "--gammas", "1/2", "--b2s", "10,50,60,100", "--n-max", "5", "--threads", "1")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0
    assert rows[0] == ["b1", "gamma", "b2", "n_first_negative", "alpha_value", "depth"]
    assert [r[3] for r in rows[1:]] == ["5", "4", "3", "3"]
    code, text = run("scan", "--b1", "1", "--gammas", "1/2", "--b2s", "60", "--format", "json", "--threads", "1")
    assert code == 0 and json.loads(text)[0]["verdict"]["k"] == 3


def test_byte_identical_across_threads():
    argv = ["scan", "--b1", "1", "--gammas", "1/2,3/2", "--b2s", "10,60,600", "--n-max", "5"]
    a = run(*argv, "--threads", "1")
    b = run(*argv, "--threads", "2")
    assert a == b


def test_threads_env(monkeypatch):
    monkeypatch.setenv("POLYA_GATE_THREADS", "2")
    code, text = run("scan", "--b1", "1", "--gammas", "1/2", "--b2s", "10,60", "--n-max", "4")
    assert code == 0 and len(text.splitlines()) == 3


def test_cost_warning_on_stderr(capsys, monkeypatch):
    import polya_gate.scan as scan_mod

    monkeypatch.setattr(scan_mod, "grid_scan", lambda *a, **k: [])
    code, text = run("scan", "--b1", "1", "--gammas", "7/2", "--b2s", "750232", "--n-max", "9", "--threads", "1")
    assert code == 0 and text.strip() == ",".join(["b1", "gamma", "b2", "n_first_negative", "alpha_value", "depth"])
    assert "warning" in capsys.readouterr().err


def test_decimal_input_is_exact():
    code, text = run("check", "3/2;1,52.4865", "--depth", "3")
    assert code == 0
    code, text = run("check", "3/2;1,52.4866", "--depth", "3")
    assert code == 3
