"""モデルカタログの説明一覧

models.json から組み込みモデルの説明を読み込む。
ファイルが無い場合はカタログ（models.catalog）の説明を使用する。
"""

import json
import logging
import os

from models.catalog import CATALOG

LOGGER = logging.getLogger(__name__)

# アプリのルートディレクトリ（main.py がある場所）
_APP_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
_MODELS_PATH = os.path.join(_APP_ROOT, "models.json")


def builtin_models() -> list[dict]:
    """カタログから作る説明一覧（models.json が無い場合用）"""
    return [
        {"id": key, "name": entry.name, "regime": entry.regime, "note": entry.note}
        for key, entry in CATALOG.items()
    ]


def get_model_list(path: str = _MODELS_PATH) -> list[dict]:
    """説明一覧を返す。各要素は {"id", "name", "regime", "note"}"""
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
            models = data.get("models", [])
            if models:
                return models
        except (json.JSONDecodeError, IOError) as e:
            LOGGER.warning("models.json を読めませんでした: %s", e)
    return builtin_models()


def get_model_by_id(model_id: str) -> dict | None:
    """ID に一致する説明を返す。無ければ None"""
    for m in get_model_list():
        if m.get("id") == model_id:
            return m
    return None


def get_model_note(name: str) -> str:
    """モデル名（sphere:3 など）の種類に対応する説明。無ければ空文字"""
    entry = get_model_by_id(name.split(":", 1)[0])
    return entry.get("note", "") if entry else ""
