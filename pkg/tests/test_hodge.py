"""Hodge 分解・Adams 作用素・Lie 代数経路・Todd 検査のテスト"""

import pytest

from core.errors import RegimeViolation
from core.hodge import LieModuleComplex, hodge_split, lie_hodge_tables, todd_check, verify_adams
from core.report import PASS, all_ok, find
from models.catalog import abelian_lie, builtin, heisenberg_lie


def test_adams_eigenvalues_on_odd_sphere(s3, engines_for):
    results = verify_adams(engines_for(s3, 6), p_max=4)
    assert all_ok(results)
    weight_one = find(results, "adams_eigenvalue").details["weight_one"]
    assert weight_one == {"2:0:k=2": True, "2:0:k=3": True}


def test_hodge_table_of_odd_sphere(s3, engines_for):
    table = hodge_split(s3, 6, "hh", engines_for(s3, 6))
    assert table.rows() == [(0, 0, 1), (2, 1, 1), (3, 0, 1), (4, 2, 1), (5, 1, 1), (6, 3, 1)]
    assert table.to_dict()["rows"][1] == {"degree": 2, "weight": 1, "hodge": 0, "dimension": 1}


def test_heisenberg_chevalley_eilenberg():
    homology, cohomology = lie_hodge_tables(heisenberg_lie(), 0)
    assert [cohomology.dims[(q, 0)] for q in range(4)] == [1, 2, 2, 1]
    assert [homology.dims[(q, 0)] for q in range(4)] == [1, 2, 2, 1]


def test_abelian_coefficients_in_symmetric_powers():
    # 作用が自明なので H_q(𝔤; Sym^p𝔤) = Λ^q𝔤 ⊗ Sym^p𝔤
    homology, cohomology = lie_hodge_tables(abelian_lie(2), 2)
    assert [homology.dims[(q, 1)] for q in range(3)] == [2, 4, 2]
    assert [cohomology.dims[(q, 2)] for q in range(3)] == [3, 6, 3]


def test_lie_complex_requires_ordinary_lie():
    with pytest.raises(RegimeViolation):
        LieModuleComplex(builtin("minimal:sphere:3"), 1)


@pytest.mark.parametrize(
    "name", ["heisenberg", "filiform:4", "abelian:1", "abelian:2", "abelian:3", "minimal:sphere:2", "minimal:cpn:2"]
)
def test_todd_supertraces_vanish(name):
    model = builtin(name)
    lie = getattr(model, "lie", None) or model
    results = todd_check(lie)
    assert all_ok(results)
    assert find(results, "todd_supertrace").details["Str(α^1)"] == "0"


def test_todd_nilpotency_index_recorded():
    results = todd_check(heisenberg_lie())
    assert find(results, "todd_nilpotent").details["index"] == 3


@pytest.mark.parametrize("name, index", [("abelian:1", 2), ("abelian:3", 2), ("filiform:4", 4)])
def test_todd_powers_vanish_at_nilpotency_index(name, index):
    model = builtin(name)
    results = todd_check(getattr(model, "lie", None) or model)
    assert find(results, "todd_nilpotent").details["index"] == index
    assert find(results, "todd_nilpotent").status == PASS
