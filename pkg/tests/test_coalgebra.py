"""入力モデル・余バー構成・L∞ 代数のテスト"""

import pytest

from core import coalgebra
from core.coalgebra import (
    BasisElement,
    CoalgebraModel,
    ce_chains,
    ce_wedge_pairing,
    cobar,
    nilpotency_index,
    ordinary_lie,
    validate_model,
)
from core.errors import DegeneratePairing, NotNilpotent, RegimeViolation
from core.exact import ONE
from core.report import FAIL, CheckResult, all_ok, find
from models.catalog import builtin, filiform_lie, heisenberg_lie


@pytest.mark.parametrize("name", ["point", "sphere:2", "sphere:3", "cpn:2", "product:sphere:3,sphere:3"])
def test_catalog_models_satisfy_axioms(name):
    assert all_ok(validate_model(builtin(name)))


def test_broken_pairing_symmetry_is_reported():
    model = builtin("sphere:3")
    model.pairing = {("1", "c3"): ONE, ("c3", "1"): -ONE}
    results = validate_model(model)
    assert find(results, "pairing_symmetry").status == FAIL
    assert find(results, "coassociativity").ok


def test_missing_counit_term_is_reported():
    model = builtin("sphere:3")
    model.coproduct = {"1": [("1", "1", 1)], "c3": [("c3", "1", 1)]}
    assert find(validate_model(model), "counit").status == FAIL


def test_cobar_of_cp2(cp2):
    algebra = cobar(cp2)
    u, v = algebra.generator_of["c2"], algebra.generator_of["c4"]
    assert [g.degree for g in algebra.generators] == [1, 3]
    assert algebra.differential({(v,): ONE}) == {(u, u): ONE}
    # d(uu) = 0（u は余サイクル）
    assert algebra.differential({(u, u): ONE}) == {}


def test_cobar_of_product(s3xs3):
    algebra = cobar(s3xs3)
    x = algebra.generator_of["c3⊗1"]
    y = algebra.generator_of["1⊗c3"]
    z = algebra.generator_of["c3⊗c3"]
    assert (x, y, z) == (0, 1, 2)
    assert algebra.differential({(z,): ONE}) == {(y, x): ONE, (x, y): -ONE}
    index = algebra.index(4)
    assert algebra.differential_columns(5) == [{index[(x, y)]: -ONE, index[(y, x)]: ONE}]


def test_cobar_differential_squares_to_zero(s3xs3):
    algebra = cobar(s3xs3)
    for n in range(1, 11):
        for word in algebra.words(n):
            assert algebra.differential(algebra.differential({word: ONE})) == {}


def test_cobar_iota(s3):
    algebra = cobar(s3)
    assert algebra.iota("1") == {}
    assert algebra.iota("c3") == {(0,): ONE}
    assert algebra.generators[0].label == "t"


def test_cobar_rejects_degree_one_element():
    model = CoalgebraModel(
        name="circle",
        basis=(BasisElement("1", 0), BasisElement("a", 1)),
        coproduct={"1": [("1", "1", 1)], "a": [("a", "1", 1), ("1", "a", 1)]},
    )
    with pytest.raises(RegimeViolation):
        cobar(model)


@pytest.mark.parametrize(
    ("lie", "index"),
    [(heisenberg_lie(), 3), (filiform_lie(4), 4), (builtin("minimal:sphere:3"), 2)],
)
def test_nilpotency_index(lie, index):
    assert nilpotency_index(lie) == index


def test_semisimple_is_not_nilpotent():
    sl2 = ordinary_lie(
        "sl2",
        ["e", "f", "h"],
        {("e", "f"): {"h": 1}, ("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}},
        bound=3,
    )
    with pytest.raises(NotNilpotent):
        nilpotency_index(sl2)


def test_ce_chains_of_heisenberg():
    model = ce_chains(heisenberg_lie())
    assert len(model.labels) == 8
    # d(e1∧e2) = ±e3
    image = model.d("e1∧e2")
    assert list(image) == ["e3"]
    assert abs(image["e3"]) == ONE
    assert all_ok(r for r in validate_model(model) if r.name != "pairing")


def test_wedge_pairing_on_heisenberg():
    model = ce_wedge_pairing(heisenberg_lie())
    assert model.pairing_degree == 3
    assert model.pair("e1∧e2", "e3") == ONE


def test_wedge_pairing_failure_raises(monkeypatch):
    def broken(model):
        check = CheckResult("pairing_cyclicity")
        check.fail({"pair": ["e1", "e2"]})
        return [check, CheckResult("pairing_nondegenerate")]

    monkeypatch.setattr(coalgebra, "_pairing_checks", broken)
    with pytest.raises(DegeneratePairing) as info:
        ce_wedge_pairing(heisenberg_lie())
    assert info.value.witness == ["pairing_cyclicity"]
