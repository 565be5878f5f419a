"""necklace - 巡回・Hochschild ホモロジーと弦トポロジー括弧の厳密計算

サブコマンド:
- tables       HC / HH / HH^* の Hodge 分解表（Lie 代数モデルは H(𝔤; Sym^p𝔤)）
- bracket      弦括弧・HH への作用・ループ積の構造定数表
- verify       検証スイート
- check-model  モデルの公理検査
- models       組み込みモデルの一覧

終了コード: 0 成功 / 1 検証失敗 / 2 モデル不正 / 3 レジーム違反 / 4 使い方の誤り
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Literal

# プロジェクトルートをパスに追加
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from pydantic import BaseModel, ConfigDict, Field, ValidationError

import core.exact
from core.coalgebra import (
    CoalgebraModel,
    LInfinityModel,
    describe_pairing,
    nilpotency_index,
    validate_model,
)
from core.errors import NecklaceError, UsageError
from core.hodge import hodge_split, lie_hodge_tables
from core.report import CheckResult, all_ok
from core.string_topology import BRACKET_KINDS, bracket_table
from core.verify import parse_suites, run_verification
from models.catalog import builtin
from models.loader import load_model
from theories.operators import KINDS, Engines
from ui import render
from utils.model_presets import get_model_list, get_model_note
from utils.settings import Settings

LOGGER = logging.getLogger("necklace")

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INVALID_MODEL = 2

COMMANDS = ("tables", "bracket", "verify", "check-model", "models")


class RunConfig(BaseModel):
    """設定ファイルとコマンドライン引数をまとめて検査した実行設定"""

    model_config = ConfigDict(extra="ignore")

    command: Literal["tables", "bracket", "verify", "check-model", "models"]
    model: str | None = None
    file: Path | None = None
    bracket_kind: Literal["string", "action", "loop"] = "string"
    table_kind: Literal["hc", "hh", "hhcoh", "all"] = "all"
    max_degree: int = Field(12, ge=1)
    weight_max: int = Field(6, ge=0)
    format: Literal["text", "json"] = "text"
    suites: str = "all"
    seed: int = 0
    pair_budget: int = Field(10000, gt=0)
    dense_threshold: int = Field(64, gt=0)
    log_level: str = "WARNING"
    verbose: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="necklace", description="巡回・Hochschild ホモロジーと弦トポロジー括弧")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "kind", nargs="?", choices=list(KINDS) + sorted(BRACKET_KINDS), help="tables / bracket の種類"
    )
    parser.add_argument("--model", help="組み込みモデル名（例: sphere:3, product:sphere:3,sphere:3）")
    parser.add_argument("--file", help="モデルファイル（JSON）")
    parser.add_argument("--config", default="config.json", help="設定ファイル")
    parser.add_argument("--max-degree", type=int)
    parser.add_argument("--weight-max", type=int)
    parser.add_argument("--format", choices=("text", "json"))
    parser.add_argument("--suites")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--pair-budget", type=int)
    parser.add_argument("--verbose", action="store_true")
    parser.add_argument("--save-config", action="store_true", help="検査済みの設定を設定ファイルに書き戻す")
    return parser


def make_config(argv: list[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    settings = Settings(args.config, persist=args.save_config)
    values = settings.run_values()
    overrides = {
        "command": args.command,
        "model": args.model,
        "file": args.file,
        "max_degree": args.max_degree,
        "weight_max": args.weight_max,
        "format": args.format,
        "suites": args.suites,
        "seed": args.seed,
        "pair_budget": args.pair_budget,
        "verbose": args.verbose,
    }
    if args.kind:
        expected = KINDS if args.command == "tables" else tuple(BRACKET_KINDS)
        if args.command not in ("tables", "bracket") or args.kind not in expected:
            raise UsageError(f"{args.command} に種類 {args.kind} は指定できません")
        overrides["table_kind" if args.command == "tables" else "bracket_kind"] = args.kind
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        config = RunConfig.model_validate(values)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise UsageError(f"設定が不正です（{'.'.join(map(str, first['loc']))}）: {first['msg']}") from exc
    if args.save_config:
        # 検査を通った値だけを書き戻す
        settings.update_run_values(config.model_dump(mode="json"))
        settings.save()
    return config


class NecklaceApp:
    """necklace メインアプリケーションクラス"""

    def __init__(self, config: RunConfig, out=None, err=None):
        self.config = config
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        core.exact.DENSE_THRESHOLD = config.dense_threshold

    def _progress(self, message: str) -> None:
        """テキスト形式のときだけ標準エラーに進捗を出す"""
        if self.config.format == "text":
            print(message, file=self.err)

    def _print_banner(self) -> None:
        self._progress("=" * 50)
        self._progress("  necklace - 巡回ホモロジーと弦トポロジー")
        self._progress("=" * 50)

    def _emit(self, text: str) -> None:
        print(text, file=self.out)

    # ─── モデル ───

    def load(self):
        if self.config.file:
            return load_model(self.config.file)
        if self.config.model:
            return builtin(self.config.model)
        raise UsageError("--model か --file でモデルを指定してください")

    # ─── サブコマンド ───

    def cmd_models(self) -> int:
        entries = get_model_list()
        if self.config.format == "json":
            self._emit(json.dumps({"models": entries}, ensure_ascii=False, indent=2))
        else:
            self._emit(render.models_text(entries))
        return EXIT_OK

    def cmd_check_model(self) -> int:
        model = self.load()
        if isinstance(model, LInfinityModel):
            check = CheckResult("nilpotency")
            check.details["index"] = nilpotency_index(model)
            results = [check]
        else:
            results = validate_model(model)
        name = getattr(model, "name", "?")
        if self.config.format == "json":
            self._emit(render.json_report(name, self.config.max_degree, checks=results))
        else:
            note = get_model_note(name)
            self._emit(f"■ モデル検査 [{name}]" + (f"  {note}" if note else ""))
            self._emit(render.checks_text(results))
            if isinstance(model, CoalgebraModel) and model.has_pairing:
                self._emit("\n".join("  " + line for line in describe_pairing(model)))
        return EXIT_OK if all_ok(results) else EXIT_INVALID_MODEL

    def cmd_tables(self) -> int:
        model = self.load()
        n = self.config.max_degree
        lie = model if isinstance(model, LInfinityModel) else model.lie
        if lie is not None:
            self._progress(f"Lie 代数 {lie.name}: p ≤ {self.config.weight_max}")
            homology, cohomology = lie_hodge_tables(lie, self.config.weight_max)
            tables = {"all": [homology, cohomology], "hhcoh": [cohomology]}.get(
                self.config.table_kind, [homology]
            )
        else:
            engines = Engines(model, n)
            tables = []
            kinds = KINDS if self.config.table_kind == "all" else (self.config.table_kind,)
            for kind in kinds:
                self._progress(f"{kind} を計算中（次数 ≤ {n}）...")
                tables.append(hodge_split(model, n, kind, engines))
        if self.config.format == "json":
            self._emit(render.json_report(model.name, n, tables=tables))
        else:
            self._emit("\n\n".join(render.table_text(t) for t in tables))
        return EXIT_OK

    def cmd_bracket(self) -> int:
        model = self.load()
        if not isinstance(model, CoalgebraModel):
            raise UsageError("bracket には余代数モデルが必要です")
        engines = Engines(model, self.config.max_degree)
        kind = BRACKET_KINDS[self.config.bracket_kind]
        self._progress(f"{kind} の構造定数を計算中...")
        table = bracket_table(engines, kind)
        if self.config.format == "json":
            self._emit(render.json_report(model.name, self.config.max_degree, brackets=[table]))
        else:
            self._emit(render.bracket_text(table))
        return EXIT_OK

    def cmd_verify(self) -> int:
        try:
            suites = parse_suites(self.config.suites)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        model = self.load()
        self._progress(f"検証スイート: {', '.join(suites)}")
        report = run_verification(
            model,
            self.config.max_degree,
            suites,
            weight_max=self.config.weight_max,
            seed=self.config.seed,
            pair_budget=self.config.pair_budget,
        )
        if self.config.format == "json":
            self._emit(render.json_report(report.model, report.window, checks=report.to_dict()))
        else:
            self._emit(render.report_text(report))
        return EXIT_OK if report.ok else EXIT_VERIFY

    # ─── アプリ起動 ───

    def run(self) -> int:
        self._print_banner()
        handler = getattr(self, "cmd_" + self.config.command.replace("-", "_"))
        try:
            return handler()
        except NecklaceError as exc:
            LOGGER.debug("失敗", exc_info=True)
            print(f"❌ {type(exc).__name__}: {exc}", file=self.err)
            return exc.exit_code


def main(argv: list[str] | None = None) -> int:
    try:
        config = make_config(argv)
    except NecklaceError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return exc.exit_code
    level = logging.DEBUG if config.verbose else getattr(logging, config.log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    return NecklaceApp(config).run()


if __name__ == "__main__":
    sys.exit(main())
