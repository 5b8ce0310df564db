"""Config parsing and the command-line front end (exit codes, output formats)."""
import json
from fractions import Fraction
from pathlib import Path

import pytest

from dirichlet_bandits import ConfigError, load_instance
from dirichlet_bandits.cli import main
from dirichlet_bandits.solver import MEMO_CAP_ENV

CONFIG_DIR = Path(__file__).resolve().parents[1] / "demos" / "configs"
WORKED = str(CONFIG_DIR / "coin_vs_known_half.json")
ONE_ARMED = str(CONFIG_DIR / "coin_one_armed.json")
THREE_ATOM = str(CONFIG_DIR / "three_atom_two_armed.json")


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if isinstance(doc, dict) else doc)
    return str(p)


class TestConfig:
    def test_known_desugars_to_point_mass(self):
        cfg = load_instance(WORKED)
        assert cfg.arm2_known
        assert cfg.arm2.atoms == ((0.5, 1.0),)
        assert cfg.discount.values == (1.0, 1.0)

    def test_absent_arm2(self):
        cfg = load_instance(ONE_ARMED)
        assert cfg.arm2 is None and not cfg.arm2_known
        with pytest.raises(ConfigError):
            cfg.state()

    def test_exact_mode_parses_decimals_losslessly(self, tmp_path):
        path = write(
            tmp_path,
            "d.json",
            {
                "arm1": {"atoms": [{"location": 0.1, "weight": 1}]},
                "discount": {"values": [0.3]},
                "options": {"mode": "exact"},
            },
        )
        cfg = load_instance(path)
        assert cfg.arm1.atoms[0][0] == Fraction(1, 10)
        assert cfg.discount.values[0] == Fraction(3, 10)

    def test_fraction_strings(self, tmp_path):
        path = write(
            tmp_path,
            "f.json",
            {
                "arm1": {"atoms": [{"location": "2/3", "weight": "1/2"}]},
                "discount": {"family": "geometric", "n": 3, "beta": "1/2"},
            },
        )
        cfg = load_instance(path)
        assert cfg.arm1.atoms[0][0] == pytest.approx(2 / 3)
        assert cfg.discount.values == (1.0, 0.5, 0.25)

    def test_force_mode_overrides_config(self):
        cfg = load_instance(WORKED, force_mode="exact")
        assert cfg.options.exact
        assert cfg.arm2.atoms[0][0] == Fraction(1, 2)

    def test_json_error_carries_position(self, tmp_path):
        path = write(tmp_path, "broken.json", '{"arm1": [}')
        with pytest.raises(ConfigError) as exc:
            load_instance(path)
        assert exc.value.line == 1
        assert exc.value.column is not None

    @pytest.mark.parametrize(
        "doc",
        [
            {"discount": {"values": [1]}},
            {"arm1": {"atoms": []}, "discount": {"values": [1]}},
            {"arm1": {"atoms": [{"location": 0}]}, "discount": {"values": [1]}},
            {"arm1": {"atoms": [{"location": 0, "weight": 1}]}},
            {"arm1": {"atoms": [{"location": 0, "weight": 1}]}, "discount": {}},
            {"arm1": {"atoms": [{"location": 0, "weight": -1}]}, "discount": {"values": [1]}},
            {"arm1": {"atoms": [{"location": 0, "weight": 1}]}, "discount": {"values": [1]}, "options": {"mode": "weird"}},
        ],
    )
    def test_schema_errors(self, tmp_path, doc):
        path = write(tmp_path, "bad.json", doc)
        with pytest.raises(ConfigError):
            load_instance(path)


class TestCliValue:
    def test_float_output(self, capsys):
        assert main(["value", WORKED]) == 0
        out = capsys.readouterr().out
        fields = dict(
            line.split(" = ") for line in out.strip().splitlines() if " = " in line
        )
        assert float(fields["W"]) == pytest.approx(13 / 12, abs=1e-9)
        assert float(fields["W2"]) == pytest.approx(1.0)
        assert fields["action"] == "arm1"

    def test_exact_output_prints_fractions(self, capsys):
        assert main(["value", WORKED, "--exact"]) == 0
        out = capsys.readouterr().out
        assert "W = 13/12" in out

    def test_policy_flag_prints_tree(self, capsys):
        assert main(["value", WORKED, "--policy", "2"]) == 0
        out = capsys.readouterr().out
        assert "stage=0" in out and "obs" in out and "action=arm" in out

    def test_three_atom_instance_runs(self, capsys):
        assert main(["value", THREE_ATOM]) == 0
        out = capsys.readouterr().out
        assert out.startswith("W = ")

    def test_malformed_config_exits_2(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        assert main(["value", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "line" in err

    def test_missing_file_exits_2(self):
        assert main(["value", "/nonexistent/x.json"]) == 2

    def test_memo_cap_env_exits_3(self, capsys, monkeypatch):
        monkeypatch.setenv(MEMO_CAP_ENV, "2")
        assert main(["value", THREE_ATOM]) == 3
        monkeypatch.delenv(MEMO_CAP_ENV)


class TestCliIndices:
    def test_lambda(self, capsys):
        assert main(["lambda", ONE_ARMED]) == 0
        out = capsys.readouterr().out
        lam = float(out.splitlines()[0].split(" = ")[1])
        assert lam == pytest.approx(5 / 9, abs=1e-8)
        assert "residual =" in out and "iterations =" in out

    def test_lambda_accepts_known_arm2(self, capsys):
        assert main(["lambda", WORKED]) == 0

    def test_breakeven(self, capsys):
        assert main(["breakeven", ONE_ARMED]) == 0
        out = capsys.readouterr().out
        b = float(out.splitlines()[0].split(" = ")[1])
        assert b == pytest.approx(2 / 3, abs=1e-8)

    def test_non_regular_exits_4(self, tmp_path, capsys):
        path = write(
            tmp_path,
            "nr.json",
            {
                "arm1": {"atoms": [{"location": 0, "weight": 1}, {"location": 1, "weight": 1}]},
                "discount": {"values": [1, 0, 1]},
            },
        )
        assert main(["lambda", path]) == 4

    def test_two_armed_config_exits_5(self, capsys):
        assert main(["lambda", THREE_ATOM]) == 5
        assert "one-armed" in capsys.readouterr().err

    def test_breakeven_short_horizon_exits_5(self, tmp_path):
        path = write(
            tmp_path,
            "short.json",
            {"arm1": {"atoms": [{"location": 0, "weight": 1}]}, "discount": {"values": [1]}},
        )
        assert main(["breakeven", path]) == 5

    def test_breakeven_zero_weight_exits_5(self, tmp_path):
        path = write(
            tmp_path,
            "zw.json",
            {
                "arm1": {"atoms": [{"location": 0, "weight": 1}, {"location": 1, "weight": 1}]},
                "discount": {"values": [1, 1, 0]},
            },
        )
        assert main(["breakeven", path]) == 5


class TestCliVerify:
    def test_single_suite_with_report_file(self, tmp_path, capsys):
        out_path = tmp_path / "report.json"
        assert main(["verify", "oracle", "--seed", "7", "--trials", "10",
                     "--out", str(out_path)]) == 0
        doc = json.loads(out_path.read_text())
        assert len(doc["suites"]) == 1
        assert doc["suites"][0]["suite"] == "oracle"
        assert doc["suites"][0]["violations"] == []
        table = capsys.readouterr().out
        assert "oracle" in table

    def test_all_runs_nine_sections(self, capsys):
        assert main(["verify", "all", "--seed", "1", "--trials", "2"]) == 0
        out = capsys.readouterr().out
        for name in ("lemma1", "thm1", "thm2", "lemma3", "lemma4",
                     "prop1", "strictness", "oracle", "montecarlo"):
            assert name in out

    def test_unknown_suite_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nosuch"])
        assert exc.value.code == 2

    def test_report_files_are_identical_across_runs(self, tmp_path):
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        main(["verify", "thm2", "--seed", "3", "--trials", "5", "--out", str(p1)])
        main(["verify", "thm2", "--seed", "3", "--trials", "5", "--out", str(p2)])
        assert p1.read_bytes() == p2.read_bytes()


class TestCliSweep:
    def test_mass_sweep_csv(self, capsys):
        assert main(["sweep", ONE_ARMED, "--param", "mass", "--grid", "1,2,4,8"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        assert lines[0] == "param,lambda,residual,iterations"
        lams = [float(l.split(",")[1]) for l in lines[1:]]
        assert all(a > b for a, b in zip(lams, lams[1:]))

    def test_shift_sweep_moves_lambda_by_one(self, capsys):
        assert main(["sweep", ONE_ARMED, "--param", "shift", "--grid", "0,1"]) == 0
        out = capsys.readouterr().out
        lams = [float(l.split(",")[1]) for l in out.strip().splitlines()[1:]]
        assert lams[1] - lams[0] == pytest.approx(1.0, abs=1e-8)

    def test_spread_sweep(self, capsys):
        assert main(["sweep", ONE_ARMED, "--param", "spread", "--grid", "0,0.1,0.2"]) == 0
        out = capsys.readouterr().out
        lams = [float(l.split(",")[1]) for l in out.strip().splitlines()[1:]]
        assert all(a <= b + 1e-8 for a, b in zip(lams, lams[1:]))

    def test_out_file_and_clean_stdout(self, tmp_path, capsys):
        out_path = tmp_path / "sweep.csv"
        assert main(["sweep", ONE_ARMED, "--param", "mass", "--grid", "1,2",
                     "--out", str(out_path)]) == 0
        assert capsys.readouterr().out == ""
        assert out_path.read_text().startswith("param,lambda")

    def test_bad_grid_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", ONE_ARMED, "--param", "mass", "--grid", "1,abc"])
        assert exc.value.code == 2

    def test_nonpositive_mass_grid_exits_2(self, capsys):
        assert main(["sweep", ONE_ARMED, "--param", "mass", "--grid", "0,1"]) == 2
