"""Command-line surface: output shapes, exit codes, config plumbing."""

import json

import pytest

from symvertex.cli import main
from symvertex.config import ENV_CONFIG
from symvertex.jsonform import dumps, parse_symfunc, state_to_obj, \
    symfunc_to_obj
from symvertex.plethysm import pi_schur, plethysm
from symvertex.schurring import SymFunc, format_symfunc
from symvertex.vertexops import ChargedState, mode


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv(ENV_CONFIG, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPiSchur:
    def test_basic_value_text(self, capsys):
        code, out, _ = run(capsys, "pi-schur", "--pi", "[2]",
                           "--lambda", "[2]")
        assert code == 0
        expected = SymFunc.schur((2,)) - SymFunc.one()
        assert out.strip() == format_symfunc(expected)

    def test_empty_lambda_gives_unit(self, capsys):
        code, out, _ = run(capsys, "pi-schur", "--pi", "[3]",
                           "--lambda", "[]")
        assert code == 0
        assert out.strip() == "s[]"

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "pi-schur", "--pi", "[2]",
                           "--lambda", "[2]", "--format", "json")
        assert code == 0
        assert json.loads(out) == symfunc_to_obj(pi_schur((2,), (2,)))
        assert parse_symfunc(out) == pi_schur((2,), (2,))

    def test_all_routes_agree(self, capsys):
        code, out, _ = run(capsys, "pi-schur", "--pi", "[2]",
                           "--lambda", "[2,1]",
                           "--route", "perp", "--route", "cauchy",
                           "--route", "vertex", "--route", "oracle")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 5
        assert lines[-1] == "routes agree"
        assert all(l.startswith("route ") for l in lines[:-1])

    def test_multi_route_json(self, capsys):
        code, out, _ = run(capsys, "pi-schur", "--pi", "[1]",
                           "--lambda", "[2]", "--route", "perp",
                           "--route", "vertex", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["agree"] is True
        assert set(obj["routes"]) == {"perp", "vertex"}

    def test_check_oracle(self, capsys):
        code, out, _ = run(capsys, "pi-schur", "--pi", "[2,1]",
                           "--lambda", "[3]", "--check-oracle")
        assert code == 0
        assert "routes agree" in out

    def test_oracle_route_rejects_empty_pi(self, capsys):
        code, _, err = run(capsys, "pi-schur", "--pi", "[]",
                           "--lambda", "[2]", "--route", "oracle")
        assert code == 2
        assert "--route" in err

    def test_dual_routes_agree(self, capsys):
        code, out, _ = run(capsys, "dual-pi-schur", "--pi", "[2]",
                           "--lambda", "[2,1]", "--route", "perp",
                           "--route", "cauchy", "--route", "vertex")
        assert code == 0
        assert "routes agree" in out


class TestRingCommands:
    def test_product(self, capsys):
        code, out, _ = run(capsys, "product", "--mu", "[2,1]", "--nu", "[1]",
                           "--format", "json")
        assert code == 0
        expected = SymFunc.schur((2, 1)) * SymFunc.schur((1,))
        assert json.loads(out) == symfunc_to_obj(expected)

    def test_product_check_oracle(self, capsys):
        code, out, _ = run(capsys, "product", "--mu", "[2]", "--nu", "[2,1]",
                           "--check-oracle")
        assert code == 0
        assert "oracle agrees" in out

    def test_skew(self, capsys):
        code, out, _ = run(capsys, "skew", "--lambda", "[2,1]", "--mu", "[1]")
        assert code == 0
        expected = SymFunc.schur((2, 1)).skew_by((1,))
        assert out.strip() == format_symfunc(expected)
        assert expected == SymFunc.schur((2,)) + SymFunc.schur((1, 1))

    def test_plethysm(self, capsys):
        code, out, _ = run(capsys, "plethysm", "--outer", "[2]",
                           "--inner", "[1,1]", "--format", "json")
        assert code == 0
        expected = plethysm((2,), SymFunc.schur((1, 1)))
        assert json.loads(out) == symfunc_to_obj(expected)

    def test_branch(self, capsys):
        code, out, _ = run(capsys, "branch", "--pi", "[2]",
                           "--lambda", "[2]")
        assert code == 0
        assert out.strip()  # nonempty expansion

    def test_series_table(self, capsys):
        code, out, _ = run(capsys, "series", "--family", "L",
                           "--shape", "[1]", "--max-r", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("L-series of")
        assert lines[1] == "r=0: s[]"
        assert len(lines) == 4

    def test_series_skew(self, capsys):
        code, out, _ = run(capsys, "series", "--family", "M",
                           "--shape", "[2,1]", "--skew", "[1]",
                           "--max-r", "1", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["family"] == "M"
        assert len(obj["terms"]) == 2

    def test_series_zero_skew_is_flag_error(self, capsys):
        code, _, err = run(capsys, "series", "--family", "M",
                           "--shape", "[1]", "--skew", "[2]", "--max-r", "1")
        assert code == 2
        assert "--skew" in err


class TestModeCommand:
    def test_mode_json(self, capsys):
        code, out, _ = run(capsys, "mode", "--pi", "[2]", "--kind", "X",
                           "--m", "-2", "--state", "s[1]", "--format", "json")
        assert code == 0
        state = ChargedState.vacuum(0, SymFunc.schur((1,)))
        expected = mode((2,), "X", -2, state)
        assert out.strip() == dumps(state_to_obj(expected))

    def test_mode_with_charge(self, capsys):
        code, out, _ = run(capsys, "mode", "--pi", "[1]", "--kind", "Xstar",
                           "--m", "0", "--state", "s[2]", "--charge", "1",
                           "--format", "json")
        assert code == 0
        state = ChargedState.vacuum(1, SymFunc.schur((2,)))
        expected = mode((1,), "Xstar", 0, state)
        assert out.strip() == dumps(state_to_obj(expected))

    def test_mode_state_json_dict(self, capsys):
        state = ChargedState.vacuum(2, SymFunc.schur((1, 1)))
        code, out, _ = run(capsys, "mode", "--pi", "[]", "--kind", "X",
                           "--m", "-1", "--state",
                           dumps(state_to_obj(state)), "--format", "json")
        assert code == 0
        expected = mode((), "X", -1, state)
        assert out.strip() == dumps(state_to_obj(expected))

    def test_mode_bad_state(self, capsys):
        code, _, err = run(capsys, "mode", "--pi", "[1]", "--kind", "X",
                           "--m", "0", "--state", "not a state")
        assert code == 2
        assert "--state" in err


class TestVerifyCommand:
    def test_zero_modes_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "zero-modes")
        assert code == 0
        assert out.startswith("suite zero-modes:")
        assert out.strip().endswith("-> PASS")

    def test_clifford_single_pi(self, capsys):
        code, out, _ = run(capsys, "verify", "clifford", "--pi", "[3]",
                           "--degree-bound", "3", "--charges", "0")
        assert code == 0
        assert "-> PASS" in out

    def test_reordering_small(self, capsys):
        code, out, _ = run(capsys, "verify", "reordering", "--pi", "[2]",
                           "--window", "0..2", "--test-degree", "3")
        assert code == 0
        assert "-> PASS" in out

    def test_multivertex_small(self, capsys):
        code, out, _ = run(capsys, "verify", "multivertex", "--pi", "[2]",
                           "--m", "2", "--dual", "false",
                           "--window", "-2..2")
        assert code == 0
        assert "-> PASS" in out

    def test_theorem2_small(self, capsys):
        code, out, _ = run(capsys, "verify", "theorem2", "--pi", "[1]",
                           "--max-weight", "3", "--max-length", "2",
                           "--skip-oracle")
        assert code == 0
        assert "-> PASS" in out

    def test_inverse_series_small(self, capsys):
        code, out, _ = run(capsys, "verify", "inverse-series",
                           "--max-sigma-weight", "2", "--max-zweight", "6",
                           "--pi", "[2]")
        assert code == 0
        assert "-> PASS" in out

    def test_perturb_fails_with_exit_1(self, capsys):
        code, out, _ = run(capsys, "verify", "zero-modes", "--perturb")
        assert code == 1
        assert "-> FAIL" in out
        assert "  FAIL " in out

    def test_wrong_suite_flag(self, capsys):
        code, _, err = run(capsys, "verify", "zero-modes",
                           "--test-degree", "3")
        assert code == 2
        assert "--test-degree" in err

    def test_unknown_reordering_case(self, capsys):
        code, _, err = run(capsys, "verify", "reordering", "--cases", "XX")
        assert code == 2
        assert "--cases" in err

    def test_verify_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "zero-modes",
                           "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["suite"] == "zero-modes"
        assert obj["failures"] == []

    def test_jobs_identical_json(self, capsys):
        argv = ["verify", "zero-modes", "--format", "json",
                "--timing", "none"]
        code1, out1, _ = run(capsys, *argv, "--jobs", "1")
        code8, out8, _ = run(capsys, *argv, "--jobs", "8")
        assert code1 == code8 == 0
        assert out1 == out8
        assert json.loads(out1)["elapsed_ms"] == 0


class TestExitCodes:
    def test_bad_partition_is_argparse_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["pi-schur", "--pi", "[2,3]", "--lambda", "[1]"])
        assert exc.value.code == 2
        assert "--pi" in capsys.readouterr().err

    def test_bad_format_choice(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["pi-schur", "--pi", "[1]", "--lambda", "[1]",
                  "--format", "xml"])
        assert exc.value.code == 2

    def test_budget_exceeded_product(self, capsys):
        code, _, err = run(capsys, "product", "--mu", "[8,8]",
                           "--nu", "[8,8]")
        assert code == 3
        assert "budget" in err

    def test_budget_exceeded_verify(self, capsys):
        code, _, err = run(capsys, "verify", "reordering",
                           "--test-degree", "20")
        assert code == 3
        assert "budget" in err

    def test_budget_can_be_raised(self, capsys):
        code, _, _ = run(capsys, "product", "--mu", "[4,4]",
                         "--nu", "[4,4]", "--degree-budget", "16")
        assert code == 0

    def test_missing_config_file(self, capsys):
        code, _, err = run(capsys, "pi-schur", "--pi", "[1]",
                           "--lambda", "[1]", "--config", "/no/such/file")
        assert code == 2
        assert "--config" in err


class TestConfigPlumbing:
    def test_config_file_sets_format(self, capsys, tmp_path):
        cfg = tmp_path / "sv.conf"
        cfg.write_text("format = json\n")
        code, out, _ = run(capsys, "pi-schur", "--pi", "[1]",
                           "--lambda", "[1]", "--config", str(cfg))
        assert code == 0
        json.loads(out)  # valid JSON proves the file was honored

    def test_cli_flag_overrides_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "sv.conf"
        cfg.write_text("format = json\n")
        code, out, _ = run(capsys, "pi-schur", "--pi", "[1]",
                           "--lambda", "[1]", "--config", str(cfg),
                           "--format", "text")
        assert code == 0
        with pytest.raises(ValueError):
            json.loads(out)

    def test_env_config_fallback(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "sv.conf"
        cfg.write_text("format = json\n")
        monkeypatch.setenv(ENV_CONFIG, str(cfg))
        code, out, _ = run(capsys, "pi-schur", "--pi", "[1]",
                           "--lambda", "[1]")
        assert code == 0
        json.loads(out)

    def test_unknown_config_key(self, capsys, tmp_path):
        cfg = tmp_path / "sv.conf"
        cfg.write_text("bogus-key = 3\n")
        code, _, err = run(capsys, "pi-schur", "--pi", "[1]",
                           "--lambda", "[1]", "--config", str(cfg))
        assert code == 2
        assert "--config" in err and "bogus-key" in err

    def test_config_budget_respected(self, capsys, tmp_path):
        cfg = tmp_path / "sv.conf"
        cfg.write_text("degree-budget = 4\n")
        code, _, err = run(capsys, "product", "--mu", "[3]", "--nu", "[2]",
                           "--config", str(cfg))
        assert code == 3
        assert "budget" in err
