"""Van den Bergh 双対・ネックレス括弧・ループ積・BV 作用素のテスト"""

import pytest

from core.errors import DegeneratePairing
from core.exact import ONE
from core.report import CONVENTION, PASS
from core.string_topology import (
    PairingDual,
    bracket_table,
    bv_delta,
    class_pairs,
    compare_tables,
    cup,
    degree_shift,
    double_bracket,
    duality,
    gerstenhaber,
    hh_action,
    hh_action_chain,
    loop_product,
    loop_unit,
    necklace_bracket,
    necklace_bracket_element,
)
from models.catalog import builtin


@pytest.fixture
def s3_engines(s3, engines_for):
    return engines_for(s3, 8)


def test_pairing_dual_inverts_gram_matrix(s3xs3):
    for variant in ("right", "left"):
        assert PairingDual(s3xs3, variant).check() == []


def test_pairing_dual_of_odd_sphere(s3):
    dual = PairingDual(s3)
    assert dual.phi("c3") == {"1": ONE}
    assert dual.phi_inverse("1") == {"c3": ONE}


def test_pairing_dual_requires_pairing(s3):
    s3.pairing = {}
    with pytest.raises(DegeneratePairing):
        PairingDual(s3)
    with pytest.raises(ValueError):
        PairingDual(builtin("sphere:3"), "middle")


def test_duality_rule_for_odd_sphere(s3_engines):
    dual = duality(s3_engines)
    assert dual.rule_name == "right:plain"
    assert dual.chain_sign == ONE
    assert duality(s3_engines) is dual
    assert dual.psi({((), "c3"): ONE}) == {((), "1"): ONE}
    assert dual.psi_inverse(dual.psi({((0,), "1"): ONE})) == {((0,), "1"): ONE}


def test_product_pairing_signs(s3xs3):
    assert s3xs3.pair("c3⊗1", "1⊗c3") == ONE
    assert s3xs3.pair("1⊗c3", "c3⊗1") == -ONE


def test_double_bracket_of_cp2(cp2, engines_for):
    engines = engines_for(cp2, 4)
    assert double_bracket(engines.algebra, cp2, (0,), (0,)) == {((), ()): ONE}
    u = engines.hc.to_vector({(0,): ONE}, 1)
    # {u, u} は次数 0 に落ち、♮ で 1 は消える
    assert necklace_bracket(engines, 1, u, 1, u) == (0, {})


def test_necklace_bracket_on_product(s3xs3, engines_for):
    engines = engines_for(s3xs3, 6)
    x, y = engines.algebra.generator_of["c3⊗1"], engines.algebra.generator_of["1⊗c3"]
    value = necklace_bracket_element(engines.algebra, s3xs3, {(x, y): ONE}, {(x,): ONE})
    assert value == {(x,): -ONE}


def test_necklace_bracket_vanishes_on_odd_sphere(s3_engines):
    algebra = s3_engines.algebra
    assert necklace_bracket_element(algebra, s3_engines.model, {(0, 0): ONE}, {(0,): ONE}) == {}


def test_loop_unit_and_products(s3_engines):
    hh = s3_engines.hh
    assert loop_unit(s3_engines) == (3, hh.to_vector({((), "c3"): ONE}, 3))
    a = hh.to_vector({((0,), "c3"): ONE}, 5)
    n, value = loop_product(s3_engines, 5, a, 5, a)
    assert n == 7
    assert hh.from_vector(value, 7) == {((0, 0), "c3"): ONE}
    b = hh.to_vector({((0,), "1"): ONE}, 2)
    assert loop_product(s3_engines, 2, b, 2, b) == (1, {})


def test_action_routes_agree_on_representatives(s3_engines):
    x = s3_engines.hc.to_vector({(0, 0): ONE}, 4)
    y = s3_engines.hh.to_vector({((0,), "1"): ONE}, 2)
    expected = {((0,), "c3"): 2 * ONE}
    for route in (hh_action, hh_action_chain):
        n, value = route(s3_engines, 4, x, 2, y)
        assert n == 5
        assert s3_engines.hh.from_vector(value, 5) == expected


def test_action_tables_of_odd_sphere(s3_engines):
    action = bracket_table(s3_engines, "action")
    chain = bracket_table(s3_engines, "action-chain")
    assert action.nonzero()
    assert action.weight_violations() == []
    assert compare_tables(action, chain) == (PASS, [])


def test_action_tables_of_product(s3xs3, engines_for):
    engines = engines_for(s3xs3, 6)
    action = bracket_table(engines, "action")
    chain = bracket_table(engines, "action-chain")
    assert action.weight_violations() == []
    assert compare_tables(action, chain) == (PASS, [])


def test_string_and_necklace_differ_by_block_signs_on_product(s3xs3, engines_for):
    engines = engines_for(s3xs3, 8)
    string = bracket_table(engines, "string")
    necklace = bracket_table(engines, "necklace", class_pairs(engines, "string"))
    assert string.nonzero()
    status, _ = compare_tables(string, necklace)
    assert status in (PASS, CONVENTION)


def test_string_bracket_of_odd_sphere_is_zero(s3_engines):
    table = bracket_table(s3_engines, "string")
    assert table.shift == -1
    assert table.nonzero() == {}


def test_bv_operator_lowers_power_of_t(s3_engines):
    coh = s3_engines.hhcoh
    f = coh.to_vector({((0, 0), "c3"): ONE}, 1)
    n, value = bv_delta(s3_engines, 1, f)
    assert n == 2
    assert coh.from_vector(value, 2) == {((0,), "1"): 2 * ONE}


def test_gerstenhaber_and_cup(s3_engines):
    unit = s3_engines.hhcoh.unit()
    f = {((0,), "1"): 2 * ONE}
    g = {((0,), "c3"): ONE}
    assert gerstenhaber(s3_engines, f, g) == {((0,), "1"): 2 * ONE}
    assert cup(s3_engines, unit, g) == g
    with pytest.raises(ValueError):
        gerstenhaber(s3_engines, {((), "1"): ONE, ((0,), "1"): ONE}, g)


def test_degree_shifts(s3_engines):
    assert degree_shift(s3_engines, "loop") == -3
    assert degree_shift(s3_engines, "gerstenhaber") == 1
    assert degree_shift(s3_engines, "leibniz-B") == 0
