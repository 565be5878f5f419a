"""出力の整形

表・構造定数・検証結果を、桁をそろえたテキストか JSON にする。
標準出力には結果だけを書き、進捗は標準エラーに出す（main 側）。
"""

import json

from core.exact import scalar_text

# 種類ごとの見出し
TITLES = {
    "hc": "巡回ホモロジー HC（被約）",
    "hh": "Hochschild ホモロジー HH",
    "hhcoh": "Hochschild コホモロジー HH^*（ホモロジー次数）",
    "lie-homology": "H_q(𝔤; Sym^p 𝔤)",
    "lie-cohomology": "H^q(𝔤; Sym^p 𝔤)",
}

STATUS_MARKS = {"pass": "✓", "fail": "✗", "convention": "±", "skipped": "-"}


def _align(rows: list[list[str]]) -> list[str]:
    if not rows:
        return []
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]


def table_text(table) -> str:
    """HodgeTable を「次数 × 重み」の格子で"""
    lines = [f"■ {TITLES.get(table.kind, table.kind)}  [{table.model}]"]
    weights = sorted({p for (_, p) in table.dims})
    degrees = sorted({n for (n, _) in table.dims})
    if not degrees:
        lines.append("  （窓の中に 0 でない群はありません）")
        return "\n".join(lines)
    rows = [["n", "計"] + [f"p={p}" for p in weights]]
    for n in degrees:
        rows.append([str(n), str(table.total(n))] + [str(table.dims.get((n, p), 0) or "·") for p in weights])
    lines.extend("  " + line for line in _align(rows))
    return "\n".join(lines)


def bracket_text(table) -> str:
    lines = [f"■ {table.kind} [{table.model}]  次数ずれ {table.shift}、{table.pairs} 組"]
    entries = table.nonzero()
    if not entries:
        lines.append("  （0 でない構造定数はありません）")
        return "\n".join(lines)
    rows = []
    for (left, right), values in sorted(entries.items()):
        value = " + ".join(f"{scalar_text(c)}·{tag}" for tag, c in sorted(values.items()))
        rows.append([f"{{{left}, {right}}}", "=", value])
    lines.extend("  " + line for line in _align(rows))
    return "\n".join(lines)


def checks_text(results) -> str:
    lines = []
    for r in results:
        mark = STATUS_MARKS.get(r.status, "?")
        note = " (sampled)" if r.sampled else ""
        lines.append(f"  {mark} {r.name}: {r.status}{note}")
        for w in r.witnesses:
            lines.append(f"      反例: {w}")
        for key, value in r.details.items():
            lines.append(f"      {key}: {value}")
    return "\n".join(lines)


def report_text(report) -> str:
    lines = [f"■ 検証 [{report.model}]  次数窓 {report.window}"]
    for suite, results in report.suites.items():
        lines.append(f"[{suite}] {report.suite_status(suite)}")
        lines.append(checks_text(results))
    return "\n".join(lines)


def models_text(entries: list[dict]) -> str:
    rows = [[e.get("name", ""), e.get("regime", ""), e.get("note", "")] for e in entries]
    return "\n".join(_align(rows))


def _json_default(value):
    if isinstance(value, (set, tuple)):
        return list(value)
    try:
        return scalar_text(value)
    except Exception:
        return str(value)


def json_report(model: str, window: int, tables=(), brackets=(), checks=()) -> str:
    """model / window / tables / brackets / checks を持つ JSON"""
    data = {
        "model": model,
        "window": window,
        "tables": [t if isinstance(t, dict) else t.to_dict() for t in tables],
        "brackets": [b.to_dict() for b in brackets],
        "checks": [c if isinstance(c, dict) else c.to_dict() for c in checks],
    }
    return json.dumps(data, ensure_ascii=False, indent=2, default=_json_default)
