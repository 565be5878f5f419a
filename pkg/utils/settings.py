"""設定管理モジュール

config.json はセクションごとに分けて書く:
  window / output / verify / engine と log_level
読み込んだ値は run_values() で RunConfig 用の平たい辞書にする。
"""

import copy
import json
import logging
import os

LOGGER = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    "window": {
        "max_degree": 12,
        "weight_max": 6,
    },
    "output": {
        "format": "text",
    },
    "verify": {
        "suites": "all",
        "seed": 0,
        "pair_budget": 10000,
    },
    "engine": {
        # これより列数が少ないブロックは密行列で消去する
        "dense_threshold": 64,
    },
    "log_level": "WARNING",
}


class Settings:
    """設定管理クラス"""

    def __init__(self, config_path: str = "config.json", persist: bool = False):
        self._config_path = config_path
        self._persist = persist
        self._config: dict = self._load()

    @property
    def config(self) -> dict:
        return self._config

    def _load(self) -> dict:
        config = copy.deepcopy(DEFAULT_CONFIG)
        if not os.path.exists(self._config_path):
            if self._persist:
                self._write(config)
            return config
        try:
            with open(self._config_path, "r", encoding="utf-8") as f:
                saved = json.load(f)
        except (json.JSONDecodeError, IOError) as e:
            LOGGER.warning("設定ファイル %s を読めません: %s（デフォルトで続行）", self._config_path, e)
            return config
        if not isinstance(saved, dict):
            LOGGER.warning("設定ファイル %s の最上位がオブジェクトではありません", self._config_path)
            return config
        self._deep_merge(config, saved)
        return config

    def _write(self, config: dict) -> None:
        try:
            with open(self._config_path, "w", encoding="utf-8") as f:
                json.dump(config, f, ensure_ascii=False, indent=2)
        except IOError as e:
            LOGGER.warning("設定ファイル %s に書けません: %s", self._config_path, e)

    def save(self) -> None:
        self._write(self._config)

    def run_values(self) -> dict:
        """セクションを外した {キー: 値}"""
        values = {}
        for key, value in self._config.items():
            if isinstance(value, dict):
                values.update(value)
            else:
                values[key] = value
        return values

    def update_run_values(self, values: dict) -> None:
        """平たい辞書の値を、既定でそのキーを持つセクションに戻す（知らないキーは捨てる）"""
        for key, value in values.items():
            section = next(
                (name for name, body in DEFAULT_CONFIG.items() if isinstance(body, dict) and key in body),
                None,
            )
            if section is not None:
                self._config.setdefault(section, {})[key] = value
            elif key in DEFAULT_CONFIG:
                self._config[key] = value

    @staticmethod
    def _deep_merge(base: dict, override: dict) -> None:
        """base を override で再帰的に上書きする"""
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                Settings._deep_merge(base[key], value)
            else:
                base[key] = value
