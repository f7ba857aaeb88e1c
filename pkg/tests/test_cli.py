import json

import pytest

from otto_omega.cli.main import (
    EXIT_INVALID,
    EXIT_NUMERIC,
    EXIT_OK,
    build_parser,
    main,
)
from otto_omega.domain.models import (
    BathPair,
    Device,
    DriveProtocol,
    ObjectiveKind,
    Regime,
)
from otto_omega.engine.optimization import emof_ss
from otto_omega.fridge.closed_forms import SS_FRIDGE_RULE
from otto_omega.solvers import ANALYTIC_SOLVERS


class TestCycleCommand:
    def test_reports_engine_efficiency(self, capsys):
        status = main(["cycle", "--beta1", "4", "--omega1", "1", "--omega2", "2"])

        report = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert report["engine_mode"] is True
        assert report["efficiency"] == pytest.approx(0.5)

    def test_missing_options(self, capsys):
        status = main(["cycle", "--beta1", "4"])

        assert status == EXIT_INVALID
        assert "--omega1, --omega2" in capsys.readouterr().err

    def test_invalid_baths(self, capsys):
        status = main(
            ["cycle", "--beta1", "1", "--beta2", "2", "--omega1", "1", "--omega2", "2"]
        )

        assert status == EXIT_INVALID
        assert "beta_cold must exceed beta_hot" in capsys.readouterr().err

    def test_non_finite_heats_are_a_numeric_failure(self, capsys):
        status = main(
            [
                "cycle",
                "--beta1",
                "1e-200",
                "--beta2",
                "1e-201",
                "--omega1",
                "1e-200",
                "--omega2",
                "1e-200",
            ]
        )

        captured = capsys.readouterr()
        assert status == EXIT_NUMERIC
        assert captured.out == ""
        assert "non-finite value computed (quantity: q_hot" in captured.err


class TestOptimizeCommand:
    def test_both_methods_agree(self, capsys):
        status = main(
            [
                "optimize",
                "engine",
                "adiabatic",
                "high",
                "--eta-c",
                "0.5",
                "--method",
                "both",
            ]
        )

        payload = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert payload["discrepancy"]["passed"] is True
        analytic = payload["analytic"]["figure_of_merit"]
        assert analytic == pytest.approx(0.387628, rel=1e-6)
        assert payload["numeric"]["convergence"] is not None

    def test_sudden_switch_refrigerator_rule(self, capsys):
        status = main(["optimize", "fridge", "ss", "--zeta-c", "0.8"])

        assert status == EXIT_INVALID
        assert SS_FRIDGE_RULE in capsys.readouterr().err

    def test_needs_exactly_one_carnot_figure(self, capsys):
        status = main(["optimize", "engine", "ss", "--eta-c", "0.5", "--tau", "0.5"])

        assert status == EXIT_INVALID
        assert "exactly one of" in capsys.readouterr().err

    def test_non_finite_optimum_is_a_numeric_failure(self, monkeypatch, capsys):
        key = (
            Device.ENGINE,
            ObjectiveKind.OMEGA,
            DriveProtocol.SUDDEN_SWITCH,
            Regime.HIGH_T,
        )
        result = emof_ss(BathPair.from_tau(0.5))
        broken = result.model_copy(update={"objective_value": float("nan")})
        monkeypatch.setitem(ANALYTIC_SOLVERS, key, lambda baths: broken)

        status = main(["optimize", "engine", "ss", "--tau", "0.5"])

        captured = capsys.readouterr()
        assert status == EXIT_NUMERIC
        assert captured.out == ""
        assert "quantity: objective_value" in captured.err

    def test_no_closed_form(self, capsys):
        status = main(["optimize", "engine", "adiabatic", "exact", "--eta-c", "0.5"])

        assert status == EXIT_INVALID
        assert "no closed form" in capsys.readouterr().err


class TestSweepCommand:
    def test_figure_preset(self, capsys):
        status = main(["sweep", "--figure", "2", "--points", "5"])

        lines = capsys.readouterr().out.splitlines()
        assert status == EXIT_OK
        assert lines[0] == "eta_c,emof_ad_highT,emof_ad_lowT,emof_ss,emw_ss,delta"
        assert len(lines) == 6
        assert lines[1].startswith("0.01,")
        assert lines[-1].startswith("0.98999999999999999,")

    def test_figure_output_is_byte_identical_across_runs(self, tmp_path):
        outputs = []
        for name, workers in (("a", "1"), ("b", "1"), ("c", "4")):
            out = tmp_path / f"{name}.csv"
            status = main(
                [
                    "sweep",
                    "--figure",
                    "2",
                    "--points",
                    "50",
                    "--workers",
                    workers,
                    "--out",
                    str(out),
                ]
            )
            assert status == EXIT_OK
            outputs.append(out.read_bytes())

        assert outputs[0] == outputs[1] == outputs[2]
        assert len(outputs[0].splitlines()) == 51

    def test_comma_separated_quantities_to_a_file(self, tmp_path, capsys):
        out = tmp_path / "cp.json"

        status = main(
            [
                "sweep",
                "--axis",
                "tau",
                "--quantity",
                "cp_ss,cp_ad_highT",
                "--points",
                "3",
                "--format",
                "json",
                "--out",
                str(out),
            ]
        )

        rows = json.loads(out.read_text())
        assert status == EXIT_OK
        assert capsys.readouterr().out == ""
        assert [r["tau"] for r in rows] == pytest.approx([0.51, 0.75, 0.99])

    def test_unknown_quantity(self, capsys):
        status = main(["sweep", "--axis", "eta_c", "--quantity", "cop_ss"])

        assert status == EXIT_INVALID
        assert "valid pairs" in capsys.readouterr().err


class TestOtherCommands:
    def test_loop(self, capsys):
        status = main(["loop", "--tau", "0.5", "--points", "10", "--format", "json"])

        rows = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert len(rows) == 13
        assert rows[-1]["kind"] == "mof"

    def test_loop_needs_tau(self, capsys):
        status = main(["loop"])

        assert status == EXIT_INVALID
        assert "--tau" in capsys.readouterr().err

    def test_cooling_power_at_a_point(self, capsys):
        status = main(["cp-mof", "ss", "--tau", "0.75"])

        payload = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert payload["q_cold"] == pytest.approx(payload["q_cold_from_controls"])

    def test_cooling_power_peak(self, capsys):
        status = main(["cp-mof", "ad-high"])

        payload = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert 0.55 < payload["tau_star"] < 0.58

    def test_verify_taylor(self, capsys):
        status = main(["verify", "taylor"])

        captured = capsys.readouterr()
        assert status == EXIT_OK
        assert all(r["passed"] for r in json.loads(captured.out))
        assert "0 failed" in captured.err


class TestParser:
    def test_unknown_command_exits_with_invalid_input(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["bogus"])

        assert excinfo.value.code == EXIT_INVALID
        assert "invalid choice" in capsys.readouterr().err

    def test_config_values_become_defaults(self):
        parser = build_parser({"beta2": 2.0, "points": 7})

        args = parser.parse_args(["sweep", "--figure", "4"])

        assert args.beta2 == 2.0
        assert args.points == 7

    def test_flags_override_the_config(self):
        parser = build_parser({"points": 7})

        args = parser.parse_args(["sweep", "--points", "9"])

        assert args.points == 9


class TestConfigFile:
    def test_yaml_config_drives_optimize(self, tmp_path, capsys):
        config = tmp_path / "otto.yaml"
        config.write_text("eta_c: 0.5\nobjective: work\n")

        status = main(["--config", str(config), "optimize", "engine", "ss"])

        payload = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert payload["objective"] == "work"
        assert payload["figure_of_merit"] == pytest.approx(0.108194, rel=1e-5)

    def test_invalid_config(self, tmp_path, capsys):
        config = tmp_path / "otto.json"
        config.write_text(json.dumps({"points": 1}))

        status = main(["--config", str(config), "sweep", "--figure", "2"])

        assert status == EXIT_INVALID
        assert "(path: points)" in capsys.readouterr().err

    def test_bath_flag_replaces_config_baths(self, tmp_path, capsys):
        config = tmp_path / "otto.yaml"
        config.write_text("tau: 0.8\n")

        status = main(
            ["--config", str(config), "optimize", "engine", "ss", "--eta-c", "0.5"]
        )

        payload = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert payload["tau"] == pytest.approx(0.5)
        assert payload["figure_of_merit"] == pytest.approx(0.110318, rel=1e-5)

    def test_config_baths_apply_without_bath_flags(self, tmp_path, capsys):
        config = tmp_path / "otto.yaml"
        config.write_text("tau: 0.5\n")

        status = main(["--config", str(config), "loop", "--points", "20"])

        assert status == EXIT_OK
        assert capsys.readouterr().out.startswith("kind,z,efficiency,work")

    def test_config_after_the_command(self, tmp_path, capsys):
        config = tmp_path / "otto.json"
        config.write_text(json.dumps({"eta_c": 0.5, "objective": "work"}))

        status = main(["optimize", "engine", "ss", "--config", str(config)])

        payload = json.loads(capsys.readouterr().out)
        assert status == EXIT_OK
        assert payload["objective"] == "work"
