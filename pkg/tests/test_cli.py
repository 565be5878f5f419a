"""コマンドライン（main）のテスト: 出力と終了コード"""

import json

import pytest

from main import EXIT_INVALID_MODEL, EXIT_OK, main


@pytest.fixture
def run(tmp_path, capsys):
    """設定ファイルを空の一時パスに向けて main を呼ぶ"""
    config = str(tmp_path / "config.json")

    def invoke(*argv):
        code = main(list(argv) + ["--config", config])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


def _write_sphere(path, symmetric=True):
    document = {
        "name": "file-sphere",
        "pairing_degree": 3,
        "basis": [{"label": "1", "degree": 0}, {"label": "c3", "degree": 3}],
        "coproduct": {"1": [["1", "1", "1"]], "c3": [["c3", "1", "1"], ["1", "c3", "1"]]},
        "pairing": [["1", "c3", "1"], ["c3", "1", "1" if symmetric else "-1"]],
    }
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


def test_models_listing(run):
    code, out, _ = run("models")
    assert code == EXIT_OK
    assert "sphere:N" in out


def test_tables_json(run):
    code, out, err = run("tables", "--model", "sphere:3", "--max-degree", "4", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["model"] == "sphere:3"
    assert [t["kind"] for t in data["tables"]] == ["hc", "hh", "hhcoh"]
    assert {"degree": 2, "weight": 1, "hodge": 0, "dimension": 1} in data["tables"][0]["rows"]
    assert err == ""


def test_tables_single_kind(run):
    code, out, _ = run("tables", "hc", "--model", "sphere:3", "--max-degree", "8", "--format", "json")
    assert code == EXIT_OK
    (table,) = json.loads(out)["tables"]
    assert table["kind"] == "hc"
    assert {(r["degree"], r["weight"]) for r in table["rows"] if r["dimension"]} == {
        (2, 1), (4, 2), (6, 3), (8, 4)
    }
    code, out, _ = run("tables", "hh", "--model", "point", "--max-degree", "4", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)["tables"][0]["rows"]
    # 一点では単位 1⊗1 だけが残る
    assert [r["degree"] for r in rows if r["dimension"]] == [0]


def test_tables_text_for_lie_model(run):
    code, out, err = run("tables", "--model", "heisenberg", "--weight-max", "1")
    assert code == EXIT_OK
    assert "H^q(𝔤; Sym^p 𝔤)" in out
    assert "necklace" in err


def test_bracket_action_table(run):
    code, out, _ = run("bracket", "action", "--model", "sphere:3", "--max-degree", "6")
    assert code == EXIT_OK
    assert "hc[4,2]#0" in out


def test_verify_selected_suites(run):
    code, out, _ = run("verify", "--model", "sphere:3", "--max-degree", "6", "--suites", "adams,loop")
    assert code == EXIT_OK
    assert "[adams] pass" in out
    assert "[loop] pass" in out


def test_verify_json_checks(run):
    code, out, _ = run("verify", "--model", "minimal:sphere:3", "--suites", "todd", "--format", "json")
    assert code == EXIT_OK
    checks = json.loads(out)["checks"]
    assert {c["suite"] for c in checks} == {"todd"}


def test_check_model_file(run, tmp_path):
    good = _write_sphere(tmp_path / "good.json")
    assert run("check-model", "--file", good)[0] == EXIT_OK
    bad = _write_sphere(tmp_path / "bad.json", symmetric=False)
    code, _, err = run("check-model", "--file", bad)
    assert code == EXIT_INVALID_MODEL
    assert "ModelValidationError" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("tables",),
        ("tables", "--model", "torus"),
        ("tables", "--model", "sphere:3", "--max-degree", "0"),
        ("verify", "--model", "sphere:3", "--suites", "bogus"),
        ("tables", "loop", "--model", "sphere:3"),
        ("bracket", "hc", "--model", "sphere:3"),
    ],
)
def test_usage_errors(run, argv):
    assert run(*argv)[0] == 4


def test_regime_violation_exit_code(run, tmp_path):
    path = tmp_path / "circle.json"
    document = {
        "name": "circle",
        "basis": [{"label": "1", "degree": 0}, {"label": "a", "degree": 1}],
        "coproduct": {"1": [["1", "1", "1"]], "a": [["a", "1", "1"], ["1", "a", "1"]]},
        "regime": "classical_lie",
    }
    path.write_text(json.dumps(document), encoding="utf-8")
    assert run("tables", "--file", str(path))[0] == 3
    assert run("bracket", "loop", "--model", "heisenberg")[0] == 3


def test_check_model_text_lists_pairing(run):
    code, out, _ = run("check-model", "--model", "sphere:3")
    assert code == EXIT_OK
    assert "双対余代数" in out
    assert "⟨1,c3⟩ = 1" in out
