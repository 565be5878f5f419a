"""設定ファイルの読み込みと書き戻しのテスト"""

import json

from main import make_config
from utils.settings import DEFAULT_CONFIG, Settings


def test_missing_file_uses_defaults(tmp_path):
    path = tmp_path / "config.json"
    settings = Settings(str(path))
    assert settings.run_values()["max_degree"] == 12
    assert not path.exists()
    Settings(str(path), persist=True)
    assert json.loads(path.read_text(encoding="utf-8")) == DEFAULT_CONFIG


def test_sections_merge_over_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"verify": {"seed": 5}}), encoding="utf-8")
    values = Settings(str(path)).run_values()
    assert values["seed"] == 5
    assert values["pair_budget"] == 10000
    assert values["format"] == "text"


def test_broken_file_falls_back(tmp_path, caplog):
    path = tmp_path / "config.json"
    path.write_text("{not json", encoding="utf-8")
    assert Settings(str(path)).config == DEFAULT_CONFIG
    assert "読めません" in caplog.text


def test_update_run_values_keeps_sections(tmp_path):
    settings = Settings(str(tmp_path / "config.json"))
    settings.update_run_values({"max_degree": 8, "log_level": "DEBUG", "command": "tables"})
    assert settings.config["window"]["max_degree"] == 8
    assert settings.config["log_level"] == "DEBUG"
    assert "command" not in settings.config


def test_save_config_flag_writes_overrides(tmp_path):
    path = tmp_path / "config.json"
    config = make_config(["models", "--max-degree", "9", "--config", str(path), "--save-config"])
    assert config.max_degree == 9
    saved = json.loads(path.read_text(encoding="utf-8"))
    assert saved["window"]["max_degree"] == 9
    assert make_config(["models", "--config", str(path)]).max_degree == 9
