import json
import subprocess
import sys

import pytest

from bingdouble.bing import alpha, d_table
from bingdouble.cli import main
from bingdouble.laurent import LaurentV


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_alpha_pretty(capsys):
    code, out, _ = run_cli(capsys, "alpha", "0", "0")
    assert code == 0
    assert out == "1\n"


def test_alpha_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "alpha", "3", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert LaurentV.from_json(payload["terms"]) == alpha(3, 4)


def test_xcoeff_pretty(capsys):
    code, out, _ = run_cli(capsys, "xcoeff", "1", "1", "1")
    assert code == 0
    assert out == "v^-4 - v^4\n"


def test_display_q(capsys):
    code, out, _ = run_cli(capsys, "omega", "1", "1", "--display", "q")
    assert code == 0
    assert out == "q\n"


def test_display_q_fails_on_half_powers(capsys):
    code, out, err = run_cli(capsys, "omega", "2", "2", "--display", "q")
    assert code == 1
    assert out == ""
    assert json.loads(err)["error"] == "OddHalfPower"


def test_factored_output(capsys):
    code, out, _ = run_cli(capsys, "milnor", "1", "1", "1", "1", "--factor", "6")
    assert code == 0
    assert out.splitlines()[1] == "factors: F1^2 F2^2 F3 F4 * (1)"


def test_borromean_zero(capsys):
    code, out, _ = run_cli(capsys, "borromean", "1", "2", "1")
    assert code == 0
    assert out == "0\n"


def test_ssum_bad_sign_reports_error(capsys):
    code, _, err = run_cli(capsys, "ssum", "1", "2", "1")
    assert code == 1
    assert json.loads(err)["error"] == "OutOfRange"


def test_dltable_csv(capsys):
    code, out, _ = run_cli(
        capsys, "dltable", "--l", "2", "--mmax", "4", "--nmax", "6", "--format", "csv"
    )
    assert code == 0
    assert out == d_table(2, 4, 6).to_csv()


def test_dltable_pretty(capsys):
    code, out, _ = run_cli(capsys, "dltable", "--l", "2", "--mmax", "1", "--nmax", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["m\\n", "0", "1", "2"]
    assert lines[1].split() == ["0", "0"]


def test_dltable_json_drops_csv(capsys):
    code, out, _ = run_cli(
        capsys, "dltable", "--l", "1", "--mmax", "2", "--nmax", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert "csv" not in payload
    assert payload["cells"] == d_table(1, 2, 2).to_json()["cells"]


def test_csv_rejected_outside_dltable(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["alpha", "0", "0", "--format", "csv"])
    assert exc.value.code == 2


def test_mijk(capsys):
    code, out, _ = run_cli(capsys, "mijk", "0", "0", "0", "--level", "3")
    assert code == 0
    assert out == "1\n"


def test_ohtsuki_c_series_lines(capsys):
    code, out, _ = run_cli(capsys, "ohtsuki-c", "2")
    assert code == 0
    assert out.splitlines() == ["h^0: 1/24", "h^1: -1/8", "h^2: 59/288"]


def test_lambda_series_lines(capsys):
    code, out, _ = run_cli(capsys, "lambda", "1", "1", "1", "--order", "2")
    assert code == 0
    assert out.splitlines() == ["h^0: 1", "h^1: -6", "h^2: 45"]


def test_evalroot(capsys):
    code, out, _ = run_cli(capsys, "evalroot", '[[8, "1"], [0, "-1"]]', "4")
    assert code == 0
    assert out == "residue mod Phi_4: ['0', '0']\n"


def test_evalroot_rejects_bad_json(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["evalroot", "not json", "4"])
    assert exc.value.code == 2


def test_verify_single_check(capsys):
    code, out, _ = run_cli(capsys, "verify", "--check", "c_series")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS c_series")
    assert lines[-1] == "PASS level=fast checks=1"


def test_verify_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--check", "c_series", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True


def test_verify_deterministic_across_workers(capsys, monkeypatch):
    monkeypatch.setenv("BINGDOUBLE_WORKERS", "1")
    _, serial, _ = run_cli(capsys, "verify", "--check", "tables", "--check", "c_series")
    monkeypatch.setenv("BINGDOUBLE_WORKERS", "4")
    _, threaded, _ = run_cli(capsys, "verify", "--check", "tables", "--check", "c_series")
    assert serial == threaded


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "bingdouble.cli", "alpha", "1", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "1\n"
