"""厳密線形代数のテスト"""

from fractions import Fraction

import pytest
from sympy import QQ

from core.errors import D2NonZero, ShapeMismatch
from core.exact import (
    ONE,
    ChainComplexView,
    GradedMap,
    GradedSpace,
    Quotient,
    SpanSolver,
    eigenspace,
    eigenspace_matrix,
    homology_at,
    matrix_from_columns,
    scalar,
    scalar_text,
    span_rank,
    vec_add,
)


def test_scalar_conversions():
    assert scalar("3/6") == QQ(1, 2)
    assert scalar(Fraction(-2, 4)) == QQ(-1, 2)
    assert scalar(7) == QQ(7)
    assert scalar_text(QQ(4, 2)) == "2"
    assert scalar_text(QQ(-3, 9)) == "-1/3"


def test_vec_add_drops_zero_entries():
    target = {0: ONE, 1: ONE}
    vec_add(target, {0: ONE}, -ONE)
    assert target == {1: ONE}


def test_span_solver_membership():
    solver = SpanSolver([{0: ONE, 1: ONE}, {1: ONE, 2: ONE}], 3)
    assert solver.solve({0: ONE, 1: QQ(2), 2: ONE}) == {0: ONE, 1: ONE}
    assert solver.solve({0: ONE}) is None


def test_span_solver_rejects_dependent_basis():
    with pytest.raises(ValueError):
        SpanSolver([{0: ONE}, {0: QQ(2)}], 2)


def test_quotient_projection():
    # V = k³ / (e0 − e1)
    quotient = Quotient(3, [{0: ONE, 1: -ONE}])
    assert quotient.rank == 2
    assert quotient.project({0: ONE}) == quotient.project({1: ONE})
    assert quotient.project({0: ONE, 1: -ONE}) == {}


def test_span_rank():
    assert span_rank([{0: ONE}, {0: QQ(3)}, {1: ONE}], 2) == 2


def _circle_complex():
    # 0 → k² → k² → 0、d = [[1, 1], [0, 0]] のとき H_1 = H_0 = k
    space = GradedSpace({0: ("a", "b"), 1: ("x", "y")})
    d = GradedMap.from_columns(space, space, -1, {1: [{0: ONE}, {0: ONE}]})
    return ChainComplexView(space, d)


def test_homology_dimensions():
    view = _circle_complex()
    assert homology_at(view, 1).dimension == 1
    assert homology_at(view, 0).dimension == 1


def test_homology_coordinates_of_boundary_are_zero():
    basis = homology_at(_circle_complex(), 0)
    assert basis.coordinates({0: ONE}) == {}
    assert basis.coordinates({1: ONE}) == {0: ONE}


def test_d_squared_detected():
    space = GradedSpace({0: ("a",), 1: ("b",), 2: ("c",)})
    d = GradedMap.from_columns(space, space, -1, {1: [{0: ONE}], 2: [{0: ONE}]})
    with pytest.raises(D2NonZero):
        homology_at(ChainComplexView(space, d), 1)


def test_block_shape_mismatch():
    space = GradedSpace({0: ("a",), 1: ("b", "c")})
    bad = GradedMap(space, space, -1, {1: matrix_from_columns([{0: ONE}], 1)})
    with pytest.raises(ShapeMismatch):
        bad.block(1)


def test_eigenspace():
    # diag(2, 4)
    matrix = matrix_from_columns([{0: QQ(2)}, {1: QQ(4)}], 2)
    assert eigenspace_matrix(matrix, 4) == [{1: ONE}]
    assert eigenspace_matrix(matrix, 3) == []


def test_eigenspace_of_graded_map():
    space = GradedSpace({2: ("a", "b")})
    e = GradedMap.from_columns(space, space, 0, {2: [{0: QQ(2)}, {0: ONE, 1: QQ(2)}]})
    assert eigenspace(e, 2, 2) == [{0: ONE}]
    assert eigenspace(e, 2, 5) == []
    shifted = GradedMap.from_columns(space, space, -1, {})
    with pytest.raises(ShapeMismatch):
        eigenspace(shifted, 2, 2)
