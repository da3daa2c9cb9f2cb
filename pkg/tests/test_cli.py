# -*- coding: utf-8 -*-
import json
import math

import pytest
from click.testing import CliRunner

from lk_cli.cli import EXIT_INVALID, cli
from lk_spaces.storage.seal import ReportSeal


@pytest.fixture
def runner(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return CliRunner()


@pytest.fixture
def carrier(tmp_path):
    path = tmp_path / "f.csv"
    path.write_text("value,mass\n2,1\n1,2\n", encoding="utf-8")
    return str(path)


def test_embed_holds(runner):
    result = runner.invoke(cli, ["embed", "LK(p=2,q=1)", "LK(p=2,q=2)"])
    assert result.exit_code == 0
    assert "✅ Holds(PELK)" in result.output


def test_embed_fails_still_exits_zero(runner):
    result = runner.invoke(cli, ["embed", "LK(p=3,q=1)", "LK(p=2,q=1)", "--json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["outcome"] == "Fails"
    assert data["case"] == "TELK-1"


def test_embed_finite_measure(runner):
    result = runner.invoke(cli, ["embed", "LK(p=3,q=1)", "LK(p=2,q=1)", "--mu", "1", "--format", "json"])
    assert json.loads(result.output)["outcome"] == "Holds"


def test_associate_zero(runner):
    result = runner.invoke(cli, ["associate", "LK(p=0.5,q=2)"])
    assert result.exit_code == 0
    assert "Zero" in result.output


def test_classify_yaml(runner):
    result = runner.invoke(cli, ["classify", "LK(p=2,q=0.5)", "--format", "yaml"])
    assert result.exit_code == 0
    assert "banach_equivalent: false" in result.output
    assert "quasi_banach: true" in result.output


def test_norm_from_csv(runner, carrier):
    result = runner.invoke(cli, ["norm", "LK(p=2,q=2)", "--input", carrier, "--json"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["norm"]["value"] == pytest.approx(math.sqrt(6.0))


def test_norm_requires_existing_input(runner):
    result = runner.invoke(cli, ["norm", "LK(p=2,q=2)", "--input", "absent.csv"])
    assert result.exit_code == 2


def test_sealed_output_verifies(runner):
    result = runner.invoke(cli, ["embed", "LK(p=2,q=1)", "LK(p=2,q=2)", "--seal"])
    data = json.loads(result.output)
    assert data["seal"]["report_id"].startswith("embed_")
    assert ReportSeal.verify_seal(data["seal"], data["report"])


@pytest.mark.parametrize(
    "args",
    [
        ["classify", "LK(p=2"],
        ["classify", "LK(p=0,q=1)"],
        ["associate", "LK(p=1,q=2,b=sv(1;0,0,0|0,-2,0),star)"],
        ["sv", "eval", "sv(1;0,0,0|0,0,0)", "--", "-1"],
        ["embed", "LK(p=2,q=1)", "LK(p=2,q=2)", "--tol", "0.5"],
    ],
)
def test_invalid_input_exits_two(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == EXIT_INVALID
    assert "❌" in result.output


def test_sv_eval(runner):
    result = runner.invoke(cli, ["sv", "eval", "sv(1;0,0,0|0,-2,0)", "2.718281828459045", "--json"])
    assert json.loads(result.output)["value"] == pytest.approx(0.25)


def test_sv_tilde_and_hat(runner):
    tilde = runner.invoke(cli, ["sv", "tilde", "sv(1;0,-2,0|0,0,0)", "--json"])
    assert json.loads(tilde.output)["result"]["sig0"] == [0.0, -1.0, 0.0]
    hat = runner.invoke(cli, ["sv", "hat", "sv(1;0,0,0|0,0,0)"])
    assert hat.exit_code == 0
    assert "❌" in hat.output
    assert "Diverges" in hat.output


def test_sv_sup_not_finite(runner):
    result = runner.invoke(cli, ["sv", "sup", "sv(1;0,1,0|0,0,0)", "--json"])
    assert json.loads(result.output)["outcome"] == "NotFinite"


def test_sv_check(runner):
    result = runner.invoke(cli, ["sv", "check", "sv(1;0,0,0|0,0,0)", "--eps", "0.5"])
    assert result.exit_code == 0
    assert result.output.startswith("✅")


def test_verify_small_suite(runner, tmp_path):
    report_path = tmp_path / "verify.json"
    result = runner.invoke(
        cli, ["verify", "rearrange", "hl", "--samples", "2", "--seed", "5", "--json-report", str(report_path)]
    )
    assert result.exit_code == 0
    assert "✅ rearrange" in result.output
    data = json.loads(report_path.read_text(encoding="utf-8"))
    assert [r["suite"] for r in data["reports"]] == ["rearrange", "hl"]


def test_verify_rejects_unknown_suite(runner):
    result = runner.invoke(cli, ["verify", "bogus"])
    assert result.exit_code == 2


def test_config_file_is_applied(runner, tmp_path):
    config = tmp_path / "custom.yaml"
    config.write_text("samples: 0\n", encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(config), "classify", "LK(p=2,q=2)"])
    assert result.exit_code == EXIT_INVALID
