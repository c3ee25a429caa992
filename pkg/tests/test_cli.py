"""Command-line interface: subcommands, formats, exit codes."""

import json

import pytest
from click.testing import CliRunner

from jamgame.cli import main
from jamgame.experiment import equilibrium_header, fixed_price_header


@pytest.fixture
def runner():
    return CliRunner()


def test_fixed_default_run(runner):
    result = runner.invoke(main, ["fixed", "--trials", "5"])
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    assert lines[0].split(",") == fixed_price_header(2)
    assert len(lines) == 6
    assert all(line.endswith(",1") for line in lines[1:])


def test_equilibrium_default_run(runner):
    result = runner.invoke(main, ["equilibrium", "--trials", "5"])
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    assert lines[0].split(",") == equilibrium_header(2)
    assert len(lines) == 6


def test_montecarlo_run(runner):
    result = runner.invoke(main, ["montecarlo", "--trials", "3"])
    assert result.exit_code == 0
    assert result.output.startswith("metric,mean,std\n")


def test_json_format(runner):
    result = runner.invoke(main, ["fixed", "--trials", "2", "--format", "json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert len(data) == 2
    assert "power_derivation" in data[0]


def test_out_file(runner, tmp_path):
    target = tmp_path / "report.csv"
    result = runner.invoke(main, ["fixed", "--trials", "2", "--out", str(target)])
    assert result.exit_code == 0
    assert result.output == ""
    lines = target.read_text().strip().split("\n")
    assert len(lines) == 3


def test_price_length_mismatch_exits_2(runner):
    result = runner.invoke(main, ["fixed", "--mu", "1,2,3"])
    assert result.exit_code == 2


def test_unparseable_prices_exit_2(runner):
    result = runner.invoke(main, ["fixed", "--mu", "1,zap"])
    assert result.exit_code == 2


def test_custom_prices_accepted(runner):
    result = runner.invoke(main, ["fixed", "--trials", "2", "--mu", "2.0,0.5"])
    assert result.exit_code == 0


def test_tolerance_flag_exits_3(runner):
    # seed 2 contains a channel whose uniform price sits outside the
    # all-buying regime: derivation and free search then disagree
    result = runner.invoke(main, ["equilibrium", "--seed", "2"])
    assert result.exit_code == 3
    lines = result.output.strip().split("\n")
    assert any(line.endswith(",0") for line in lines[1:])


def test_config_file(runner, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 9, "trials": 2}))
    result = runner.invoke(main, ["fixed", "--config", str(cfg)])
    assert result.exit_code == 0
    assert len(result.output.strip().split("\n")) == 3


def test_flags_override_config_file(runner, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 9, "trials": 2}))
    result = runner.invoke(main, ["fixed", "--config", str(cfg), "--trials", "4"])
    assert result.exit_code == 0
    assert len(result.output.strip().split("\n")) == 5


def test_unknown_config_key_exits_2(runner, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"sigma": 0.2}))
    result = runner.invoke(main, ["fixed", "--config", str(cfg)])
    assert result.exit_code == 2


def test_eves_flag_changes_schema(runner):
    result = runner.invoke(main, ["fixed", "--trials", "1", "--eves", "3",
                                  "--mu", "1,1,1"])
    assert result.exit_code == 0
    header = result.output.strip().split("\n")[0].split(",")
    assert header == fixed_price_header(3)
