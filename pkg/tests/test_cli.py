import json

import pandas as pd
import pytest
from click.testing import CliRunner

from src.main import cli, oracle_value


@pytest.fixture
def runner():
    return CliRunner()


def _report(directory, name):
    with open(directory / f"{name}.json", encoding="utf-8") as f:
        return json.load(f)


class TestExpand:
    def test_sigma(self, runner, tmp_path):
        result = runner.invoke(cli, ["expand", "SIGMA", "--bound", "10", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        report = _report(tmp_path, "expand_SIGMA")
        assert report["schema"] == 1
        assert report["coefficients"] == [1, 1, -1, 2, -2, 1, 0, 1, -2, 0]
        assert report["bound"] == 10

    def test_w_lowercase(self, runner, tmp_path):
        result = runner.invoke(cli, ["expand", "w", "-b", "10", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        assert _report(tmp_path, "expand_W")["coefficients"] == [0, -2, 0, -2, 2, 0, 2, 0, 2, -2]

    def test_zero_bound(self, runner, tmp_path):
        result = runner.invoke(cli, ["expand", "SIGMA", "--bound", "0", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        assert _report(tmp_path, "expand_SIGMA")["coeffs"] == []

    def test_csv_format(self, runner, tmp_path):
        result = runner.invoke(cli, ["expand", "F1", "-b", "5", "--format", "csv", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        df = pd.read_csv(tmp_path / "expand_F1.csv")
        assert df["exponent_num"].tolist() == [0, 1, 3]
        assert df["num"].tolist() == [1, 2, 3]

    def test_unknown_series(self, runner):
        result = runner.invoke(cli, ["expand", "NOPE", "-b", "5"])
        assert result.exit_code == 2
        assert "UnknownSeries" in result.output

    def test_negative_bound(self, runner):
        result = runner.invoke(cli, ["expand", "SIGMA", "-b", "-3"])
        assert result.exit_code == 2


class TestCoeff:
    @pytest.mark.parametrize(
        "args, expected",
        [
            (["tw", "7"], -2),
            (["sigma", "0"], 1),
            (["sigma", "62"], -2),
            (["sigma_star", "70"], -4),
            (["ideal", "17"], 2),
            (["f3", "3"], -2),
        ],
    )
    def test_values(self, runner, tmp_path, args, expected):
        result = runner.invoke(cli, ["coeff", *args, "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        assert _report(tmp_path, f"coeff_{args[0]}_{args[1]}")["value"] == expected

    def test_invalid_index(self, runner):
        result = runner.invoke(cli, ["coeff", "sigma_star", "0"])
        assert result.exit_code == 2

    def test_cache_is_written(self, tmp_path, monkeypatch):
        monkeypatch.setenv("QRENORM_ORACLE_CACHE_PATH", str(tmp_path))
        result = CliRunner().invoke(cli, ["coeff", "tw", "23"])
        assert result.exit_code == 0, result.output
        assert any(p.suffix == ".csv" for p in tmp_path.iterdir())
        assert oracle_value("tw", 23, str(tmp_path)) == -2


class TestQuantum:
    def test_fw_domain_hole(self, runner):
        result = runner.invoke(cli, ["quantum", "fw", "--x", "1/2"])
        assert result.exit_code == 3
        assert "DomainHole" in result.output

    def test_fw_value(self, runner, tmp_path):
        result = runner.invoke(cli, ["quantum", "fw", "--x", "1/4", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        value = _report(tmp_path, "quantum_fw")["values"][0]
        assert value["cusp"] == "S_INF"
        assert value["value"] == pytest.approx([0.78569, -1.17588], abs=1e-5)

    def test_sigma_cohen(self, runner, tmp_path):
        result = runner.invoke(cli, ["quantum", "sigma-cohen", "--x", "1/5", "--x", "2/7", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        assert _report(tmp_path, "quantum_sigma-cohen")["pass"] is True

    def test_missing_points(self, runner):
        assert runner.invoke(cli, ["quantum", "fw"]).exit_code == 2

    def test_bad_rational(self, runner):
        assert runner.invoke(cli, ["quantum", "fw", "--x", "abc"]).exit_code == 2

    def test_trivial_period_sample(self, runner, tmp_path):
        args = ["quantum", "period-sample", "--gamma", "A", "--x", "1/3", "--x", "1/4", "-o", str(tmp_path)]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0, result.output
        samples = _report(tmp_path, "quantum_period_A")["samples"]
        assert all(abs(s["re_h"]) < 1e-12 and abs(s["im_h"]) < 1e-12 for s in samples)


class TestMaass:
    @pytest.mark.parametrize("point", [[], ["--x", "0.1", "--y", "0.7"]])
    def test_translate(self, runner, tmp_path, point):
        result = runner.invoke(cli, ["maass", "translate", *point, "-p", "30", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        assert _report(tmp_path, "maass_translate")["pass"] is True

    def test_s_transform(self, runner, tmp_path):
        result = runner.invoke(cli, ["maass", "s-transform", "-p", "30", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output

    def test_precision_above_validated_range(self, runner):
        result = runner.invoke(cli, ["maass", "translate", "-p", "80"])
        assert result.exit_code == 1
        assert "PrecisionUnreachable" in result.output

    def test_step_outside_half_plane(self, runner):
        result = runner.invoke(cli, ["maass", "laplacian", "--y", "0.5", "--h", "0.6"])
        assert result.exit_code == 2


class TestVerify:
    def test_identities_small_bound(self, runner, tmp_path):
        result = runner.invoke(cli, ["verify", "identities", "-b", "15", "-p", "30", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output
        report = _report(tmp_path, "verify_identities")
        assert report["pass"] is True
        assert len(report["checks"]) > 0

    def test_unknown_suite(self, runner):
        assert runner.invoke(cli, ["verify", "bogus"]).exit_code == 2

    @pytest.mark.slow
    def test_all(self, runner, tmp_path):
        result = runner.invoke(cli, ["verify", "all", "--bound", "1", "-p", "30", "-o", str(tmp_path)])
        assert result.exit_code == 0, result.output


class TestMisc:
    def test_list(self, runner):
        result = runner.invoke(cli, ["list"])
        assert result.exit_code == 0
        assert "CHALLENGE_TAIL" in result.output
        assert "FINE_63" in result.output

    def test_bad_config(self, runner, tmp_path):
        path = tmp_path / "bad.env"
        path.write_text("precision_digits=3\n", encoding="utf-8")
        result = runner.invoke(cli, ["expand", "SIGMA", "-b", "5", "--config", str(path)])
        assert result.exit_code == 2
        assert "ConfigError" in result.output

    def test_missing_config(self, runner, tmp_path):
        result = runner.invoke(cli, ["expand", "SIGMA", "-b", "5", "--config", str(tmp_path / "none.env")])
        assert result.exit_code == 2
