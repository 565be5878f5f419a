"""巡回・Hochschild ホモロジー／コホモロジーエンジンのテスト"""

import pytest

from core.errors import HomologySolveError
from core.exact import ONE
from core.hodge import hodge_split
from theories.cochain import cochain_space
from theories.cyclic import cyclic_space, rotation_relations
from theories.hochschild import hochschild_space
from theories.operators import connes_B_element, homology_tables, map_I_element


def test_cyclic_words_of_even_sphere(s2, engines_for):
    # t は奇数次: 偶数個の t は回転で自分自身の −1 倍になる
    hc = engines_for(s2, 6).hc
    assert [hc.dim(n) for n in range(1, 7)] == [1, 0, 1, 0, 1, 0]


def test_rotation_relations_in_degree_zero(s3, engines_for):
    algebra = engines_for(s3, 2).algebra
    assert rotation_relations(algebra, 0) == [{0: ONE}]
    assert rotation_relations(algebra, 4) == []


def test_odd_sphere_cyclic_homology(s3, engines_for):
    hc = engines_for(s3, 6).hc
    assert hc.dimensions() == {1: 0, 2: 1, 3: 0, 4: 1, 5: 0, 6: 1}
    assert hc.hodge_dimensions() == {(2, 1): 1, (4, 2): 1, (6, 3): 1}


def test_odd_sphere_hochschild_homology(s3, engines_for):
    hh = engines_for(s3, 6).hh
    assert hh.dimensions() == {0: 1, 1: 0, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1}


def test_odd_sphere_hochschild_cohomology(s3, engines_for):
    hhcoh = engines_for(s3, 6).hhcoh
    assert hhcoh.degree_range() == range(-3, 4)
    assert hhcoh.dimensions() == {-3: 1, -2: 0, -1: 1, 0: 1, 1: 1, 2: 1, 3: 1}


def test_product_of_spheres_cyclic_homology(s3xs3, engines_for):
    hc = engines_for(s3xs3, 6).hc
    dims = hc.dimensions()
    assert {n: dims[n] for n in range(2, 7)} == {2: 2, 3: 0, 4: 3, 5: 1, 6: 4}


@pytest.mark.parametrize("kind", ["hc", "hh", "hhcoh"])
def test_hodge_rows_sum_to_total(s3xs3, engines_for, kind):
    engines = engines_for(s3xs3, 6)
    table = hodge_split(s3xs3, 6, kind, engines)
    totals = homology_tables(s3xs3, 6, kind).dims
    for n, dim in totals.items():
        assert table.total(n) == dim


def test_coordinates_of_representatives(s3, engines_for):
    hc = engines_for(s3, 6).hc
    (cls,) = hc.classes(4)
    assert cls.weight == 2
    assert hc.coordinates(4, cls.vector) == {0: ONE}
    assert hc.coordinates(4, {}) == {}


def test_coordinates_outside_window(s3, engines_for):
    hc = engines_for(s3, 4).hc
    with pytest.raises(HomologySolveError):
        hc.coordinates(8, {0: ONE})


def test_connes_B_on_power_of_t(s3, engines_for):
    algebra = engines_for(s3, 4).algebra
    # B(t²) = 2·t⊗c3
    assert connes_B_element(algebra, {(0, 0): ONE}) == {((0,), "c3"): 2 * ONE}


def test_connes_B_on_mixed_letters(s3xs3, engines_for):
    engines = engines_for(s3xs3, 8)
    algebra, hh = engines.algebra, engines.hh
    x, z = algebra.generator_of["c3⊗1"], algebra.generator_of["c3⊗c3"]
    # B(z·x) = −x⊗C + z⊗X は閉
    assert connes_B_element(algebra, {(z, x): ONE}) == {
        ((x,), "c3⊗c3"): -ONE,
        ((z,), "c3⊗1"): ONE,
    }
    assert hh.boundary_element(connes_B_element(algebra, {(z, x): ONE})) == {}


def test_connes_B_commutes_with_boundaries(s3xs3, engines_for):
    engines = engines_for(s3xs3, 8)
    algebra, hh = engines.algebra, engines.hh
    signs = set()
    for n in range(1, 8):
        for word in algebra.words(n):
            lhs = hh.boundary_element(connes_B_element(algebra, {word: ONE}))
            rhs = connes_B_element(algebra, algebra.differential({word: ONE}))
            if lhs == rhs and not lhs:
                continue
            if lhs == rhs:
                signs.add(1)
            else:
                assert lhs == {k: -v for k, v in rhs.items()}, word
                signs.add(-1)
    assert len(signs) == 1


def test_map_I_keeps_counit_terms(s3):
    element = {((0, 0), "1"): ONE, ((0,), "c3"): ONE}
    assert map_I_element(s3, element) == {(0, 0): ONE}


def test_adams_on_words(s3, engines_for):
    engines = engines_for(s3, 6)
    assert engines.adams_element(2, {(0, 0): ONE}) == {(0, 0): 4 * ONE}
    assert engines.adams_element(3, {(0,): ONE}) == {(0,): 3 * ONE}
    with pytest.raises(ValueError):
        engines.adams_element(0, {(0,): ONE})


def test_hochschild_cohomology_unit(s3, engines_for):
    hhcoh = engines_for(s3, 6).hhcoh
    unit = hhcoh.unit()
    assert hhcoh.boundary_element(unit) == {}
    element = {((0,), "c3"): ONE}
    assert hhcoh.convolve(unit, element) == element
    assert hhcoh.convolve(element, unit) == element


def test_space_constructors(cp2, engines_for):
    algebra = engines_for(cp2, 4).algebra
    # u は奇数次なので uu ≡ −uu、次数 3 では v と uuu が残る
    assert cyclic_space(algebra, 2).dim == 0
    assert cyclic_space(algebra, 3).dim == 2
    hh = hochschild_space(algebra, 3)
    assert hh.labels(3) == ("v⊗1", "u·u·u⊗1", "u⊗c2")
    coh = cochain_space(algebra, 1)
    labels = coh.labels(1)
    assert labels[:3] == ("u⊗1*", "v⊗c2*", "u·u·u⊗c2*")
    assert len(labels) == 7
