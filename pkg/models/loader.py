"""モデルファイル（JSON）の読み書き

スキーマは pydantic で検査し（未知のフィールドは拒否）、読めたら validate_model で
公理をすべて確かめる。有理数は "p/q" 形式の文字列（小数は不可）。
"""

import json
import logging
import re
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from core.coalgebra import (
    CLASSICAL_LIE,
    SIMPLY_CONNECTED,
    BasisElement,
    CoalgebraModel,
    validate_model,
)
from core.errors import ModelParseError, ModelValidationError
from core.exact import scalar, scalar_text
from core.report import FAIL

LOGGER = logging.getLogger(__name__)

_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _check_rational(text: str) -> str:
    if not _RATIONAL.match(text.strip()):
        raise ValueError(f"有理数は \"p/q\" 形式で書いてください: {text!r}")
    return text.strip()


class BasisEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    label: str = Field(min_length=1)
    degree: int


class ModelDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = Field(min_length=1)
    pairing_degree: int | None = None
    basis: list[BasisEntry] = Field(min_length=1)
    counit_label: str = "1"
    coproduct: dict[str, list[tuple[str, str, str]]]
    differential: dict[str, list[tuple[str, str]]] = Field(default_factory=dict)
    pairing: list[tuple[str, str, str]] = Field(default_factory=list)
    regime: Literal["simply_connected", "classical_lie"] = SIMPLY_CONNECTED
    generator_names: dict[str, str] = Field(default_factory=dict)

    @field_validator("coproduct")
    @classmethod
    def _coproduct_rationals(cls, value):
        for terms in value.values():
            for _, _, coef in terms:
                _check_rational(coef)
        return value

    @field_validator("differential")
    @classmethod
    def _differential_rationals(cls, value):
        for terms in value.values():
            for _, coef in terms:
                _check_rational(coef)
        return value

    @field_validator("pairing")
    @classmethod
    def _pairing_rationals(cls, value):
        for _, _, coef in value:
            _check_rational(coef)
        return value


def _read(document) -> dict:
    if isinstance(document, dict):
        return document
    if isinstance(document, Path):
        text = document.read_text(encoding="utf-8")
    else:
        text = str(document)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelParseError(
            f"JSON の構文エラー（{exc.lineno} 行 {exc.colno} 列）: {exc.msg}",
            witness={"line": exc.lineno, "column": exc.colno},
        ) from exc


def _labels_known(doc: ModelDocument) -> None:
    labels = {b.label for b in doc.basis}
    if len(labels) != len(doc.basis):
        raise ModelParseError("基底ラベルが重複しています", witness=[b.label for b in doc.basis])
    used = set(doc.coproduct) | set(doc.differential) | {doc.counit_label}
    for terms in doc.coproduct.values():
        used.update(x for t in terms for x in t[:2])
    for terms in doc.differential.values():
        used.update(t[0] for t in terms)
    used.update(x for t in doc.pairing for x in t[:2])
    unknown = sorted(used - labels)
    if unknown:
        raise ModelParseError(f"未知の基底ラベル: {unknown}", witness=unknown)


def parse_model(document) -> CoalgebraModel:
    """スキーマと pairing_degree の有無だけ検査して CoalgebraModel を作る（公理は検査しない）"""
    data = _read(document)
    try:
        doc = ModelDocument.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(x) for x in first["loc"])
        raise ModelParseError(
            f"モデルファイルのスキーマエラー（{location}）: {first['msg']}",
            witness={"location": location},
        ) from exc
    _labels_known(doc)
    if doc.pairing and doc.pairing_degree is None:
        raise ModelValidationError(
            f"モデル {doc.name}: pairing があるのに pairing_degree がありません",
            witness={"axiom": "pairing_degree", "witness": None},
        )
    pairing = {}
    for x, y, coef in doc.pairing:
        pairing[(x, y)] = scalar(coef)
    return CoalgebraModel(
        name=doc.name,
        basis=tuple(BasisElement(b.label, b.degree) for b in doc.basis),
        counit_label=doc.counit_label,
        coproduct={k: [(a, b, scalar(c)) for a, b, c in v] for k, v in doc.coproduct.items()},
        differential={k: [(a, scalar(c)) for a, c in v] for k, v in doc.differential.items()},
        pairing=pairing,
        pairing_degree=doc.pairing_degree,
        regime=doc.regime,
        generator_names=dict(doc.generator_names),
    )


def load_model(document) -> CoalgebraModel:
    """モデルファイルを読み、公理をすべて検査する。失敗した公理は ModelValidationError"""
    model = parse_model(document)
    for check in validate_model(model):
        if check.status == FAIL:
            witness = check.witnesses[0] if check.witnesses else None
            raise ModelValidationError(
                f"モデル {model.name} が公理 {check.name} を満たしません: {witness}",
                witness={"axiom": check.name, "witness": witness},
            )
    LOGGER.debug("モデル %s を読み込みました（基底 %d 個）", model.name, len(model.basis))
    return model


def model_document(model: CoalgebraModel) -> dict:
    """load_model の逆: JSON に書ける辞書"""
    data = {
        "name": model.name,
        "pairing_degree": model.pairing_degree,
        "basis": [{"label": b.label, "degree": b.degree} for b in model.basis],
        "counit_label": model.counit_label,
        "coproduct": {
            x: [[a, b, scalar_text(c)] for (a, b), c in model.delta(x).items()] for x in model.labels
        },
        "differential": {
            x: [[y, scalar_text(c)] for y, c in model.d(x).items()]
            for x in model.labels
            if model.d(x)
        },
        "pairing": [[x, y, scalar_text(v)] for (x, y), v in model.pairing.items() if scalar(v)],
        "regime": model.regime if model.regime in (SIMPLY_CONNECTED, CLASSICAL_LIE) else SIMPLY_CONNECTED,
    }
    if model.generator_names:
        data["generator_names"] = dict(model.generator_names)
    return data


def serialize_model(model: CoalgebraModel) -> str:
    return json.dumps(model_document(model), ensure_ascii=False, indent=2)


def save_model(model: CoalgebraModel, path) -> None:
    Path(path).write_text(serialize_model(model) + "\n", encoding="utf-8")
