import json
from fractions import Fraction

import pandas as pd
import pytest

from src.reports import ReportWriter, render
from src.utils.config_loader import ConfigLoader, RunConfig
from src.utils.exceptions import ConfigError
from src.utils.logger import setup_logger


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "run.env"
    path.write_text("default_bound=120\nprecision_digits=40\noutput_format=csv\nparallelism=2\n", encoding="utf-8")
    return str(path)


class TestConfigLoader:
    def test_defaults(self):
        config = ConfigLoader().build_run_config(environ={})
        assert config == RunConfig()

    def test_bundled_config(self):
        config = ConfigLoader().get_config("qrenorm")
        assert config["default_bound"] == 200
        assert config["tail_tolerance"] == 1e-10

    def test_precedence(self, config_file):
        environ = {"QRENORM_PRECISION_DIGITS": "30", "PATH": "/usr/bin"}
        config = ConfigLoader().build_run_config(config_file, environ, parallelism=4, output_format=None)
        assert config.default_bound == 120
        assert config.precision_digits == 30
        assert config.parallelism == 4
        assert config.output_format == "csv"

    def test_unknown_keys_are_ignored(self, tmp_path):
        path = tmp_path / "extra.env"
        path.write_text("default_bound=10\ncolour=blue\n", encoding="utf-8")
        assert ConfigLoader().load_config(str(path)) == {"default_bound": 10}

    def test_invalid_value(self, tmp_path):
        path = tmp_path / "bad.env"
        path.write_text("default_bound=abc\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            ConfigLoader().build_run_config(str(path), {})

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            ConfigLoader().build_run_config(str(tmp_path / "nope.env"), {})

    def test_empty_optional_value(self):
        config = ConfigLoader().from_environment({"QRENORM_ORACLE_CACHE_PATH": ""})
        assert config == {"oracle_cache_path": None}


class TestRunConfig:
    @pytest.mark.parametrize(
        "overrides",
        [
            {"default_bound": 0},
            {"precision_digits": 10},
            {"parallelism": 0},
            {"output_format": "xml"},
            {"stall_window": 0},
        ],
    )
    def test_validation(self, overrides):
        with pytest.raises(ConfigError):
            RunConfig(**overrides)

    def test_with_overrides_skips_none(self):
        config = RunConfig().with_overrides(default_bound=None, precision_digits=20)
        assert config.default_bound == 200
        assert config.precision_digits == 20


class TestLogger:
    def test_file_named_after_run(self, tmp_path):
        setup_logger(str(tmp_path), "debug", run_name="verify")
        files = [p.name for p in tmp_path.iterdir()]
        assert len(files) == 1 and files[0].startswith("verify_")

    def test_unknown_level(self):
        with pytest.raises(ConfigError):
            setup_logger(level="CHATTY")


class TestReports:
    def test_json_has_schema_and_sorted_keys(self):
        text = render({"value": Fraction(1, 3), "command": "x"}, [], "json")
        data = json.loads(text)
        assert data == {"schema": 1, "command": "x", "value": "1/3"}
        assert text.index('"command"') < text.index('"schema"')

    def test_table_empty(self):
        assert render({}, [], "table") == "(vazio)"

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render({}, [], "xml")

    def test_writer_formats(self, tmp_path):
        writer = ReportWriter(str(tmp_path))
        rows = [{"n": 1, "value": 2}, {"n": 2, "value": -1}]
        json_path = writer.write({"command": "coeff"}, rows, "json", "coeff")
        csv_path = writer.write({"command": "coeff"}, rows, "csv", "coeff")
        txt_path = writer.write({"command": "coeff"}, rows, "table", "coeff")
        assert json.loads(open(json_path, encoding="utf-8").read())["command"] == "coeff"
        assert pd.read_csv(csv_path)["value"].tolist() == [2, -1]
        assert txt_path.endswith("coeff.txt")

    def test_writer_skips_empty(self, tmp_path):
        writer = ReportWriter(str(tmp_path))
        assert writer.save_to_csv([], "empty") is None
        assert writer.write_json({}, "empty") is None

    def test_timestamped_name(self, tmp_path):
        path = ReportWriter(str(tmp_path), include_timestamp=True).write_json({"a": 1}, "run")
        assert path.startswith(str(tmp_path / "run_"))
