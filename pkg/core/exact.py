"""厳密有理数線形代数モジュール

sympy の QQ ドメインと DomainMatrix の上に、核・像・商・複体のホモロジー・
固有空間の計算を載せる。浮動小数点は一切使わない。

ベクトルは疎な辞書 {基底番号: 係数} で持ち回し、行列演算のときだけ
DomainMatrix に変換する。
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import QQ, Rational
from sympy.polys.matrices import DomainMatrix

from .errors import D2NonZero, ShapeMismatch

LOGGER = logging.getLogger(__name__)

# これより列数が少ないブロックは密行列で消去する
DENSE_THRESHOLD = 64

ZERO = QQ.zero
ONE = QQ.one

Vector = dict  # {int: QQ}


def scalar(value) -> object:
    """int / "p/q" 文字列 / Fraction / QQ 要素を QQ 要素に変換する"""
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        return QQ.from_sympy(Rational(value.strip()))
    return QQ.convert(value)


def scalar_text(value) -> str:
    """QQ 要素を "p/q"（整数なら "p"）の文字列にする"""
    value = scalar(value)
    num, den = QQ.numer(value), QQ.denom(value)
    return str(num) if den == 1 else f"{num}/{den}"


# ─── 疎ベクトル演算 ───

def vec_add(target: Vector, source: Vector, factor=ONE) -> Vector:
    """target += factor * source（破壊的）。0 になった成分は消す"""
    for key, value in source.items():
        new = target.get(key, ZERO) + factor * value
        if new:
            target[key] = new
        else:
            target.pop(key, None)
    return target


def vec_scale(vector: Vector, factor) -> Vector:
    if not factor:
        return {}
    return {key: factor * value for key, value in vector.items()}


def vec_is_zero(vector: Vector) -> bool:
    return not any(vector.values())


# ─── DomainMatrix との変換 ───

def matrix_from_rows(rows: list[Vector], ncols: int) -> DomainMatrix:
    data = {i: {j: v for j, v in row.items() if v} for i, row in enumerate(rows)}
    data = {i: row for i, row in data.items() if row}
    matrix = DomainMatrix(data, (len(rows), ncols), QQ)
    if ncols < DENSE_THRESHOLD:
        return matrix.to_dense()
    return matrix


def matrix_from_columns(columns: list[Vector], nrows: int) -> DomainMatrix:
    """列ベクトルのリストから nrows × len(columns) の行列を作る"""
    return matrix_from_rows(columns, nrows).transpose()


def rows_of(matrix: DomainMatrix) -> list[Vector]:
    nrows = matrix.shape[0]
    rows: list[Vector] = [{} for _ in range(nrows)]
    for (i, j), value in matrix.to_dok().items():
        if value:
            rows[i][j] = value
    return rows


def columns_of(matrix: DomainMatrix) -> list[Vector]:
    return rows_of(matrix.transpose())


def apply_matrix(matrix: DomainMatrix, vector: Vector) -> Vector:
    """行列をベクトル（列）に作用させる"""
    result: Vector = {}
    for (i, j), value in matrix.to_dok().items():
        x = vector.get(j)
        if x:
            new = result.get(i, ZERO) + value * x
            if new:
                result[i] = new
            else:
                result.pop(i, None)
    return result


def rref_rows(rows: list[Vector], ncols: int) -> tuple[list[Vector], tuple[int, ...]]:
    """行ベクトル群の既約行階段形（非零行のみ）とピボット列を返す"""
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = matrix_from_rows(rows, ncols).rref(method="auto")
    return rows_of(reduced)[: len(pivots)], tuple(pivots)


# ─── 基本データ型 ───

@dataclass(frozen=True)
class GradedSpace:
    """次数ごとにラベル付き基底を持つ有限次元次数付きベクトル空間"""

    bases: dict = field(default_factory=dict)  # {degree: tuple[str, ...]}

    def __post_init__(self):
        for degree, labels in self.bases.items():
            if len(set(labels)) != len(labels):
                raise ValueError(f"次数 {degree} の基底ラベルが重複しています")

    def basis(self, degree: int) -> tuple:
        return tuple(self.bases.get(degree, ()))

    def dim(self, degree: int) -> int:
        return len(self.bases.get(degree, ()))

    def degrees(self) -> list[int]:
        return sorted(d for d, labels in self.bases.items() if labels)


@dataclass(frozen=True)
class GradedMap:
    """次数 shift の疎線形写像。blocks[n] は (dim target_{n+shift}) × (dim source_n)"""

    source: GradedSpace
    target: GradedSpace
    shift: int
    blocks: dict = field(default_factory=dict)  # {degree: DomainMatrix}

    def block(self, degree: int) -> DomainMatrix:
        shape = (self.target.dim(degree + self.shift), self.source.dim(degree))
        matrix = self.blocks.get(degree)
        if matrix is None:
            return DomainMatrix({}, shape, QQ)
        if matrix.shape != shape:
            raise ShapeMismatch(
                f"次数 {degree} のブロックの形 {matrix.shape} が {shape} と一致しません"
            )
        return matrix

    @classmethod
    def from_columns(cls, source, target, shift, columns_by_degree: dict) -> "GradedMap":
        blocks = {
            n: matrix_from_columns(cols, target.dim(n + shift))
            for n, cols in columns_by_degree.items()
        }
        return cls(source, target, shift, blocks)


@dataclass(frozen=True)
class ChainComplexView:
    """ホモロジー規約の鎖複体（微分の次数は −1）"""

    space: GradedSpace
    differential: GradedMap

    def __post_init__(self):
        if self.differential.shift != -1:
            raise ShapeMismatch("微分の次数は −1 でなければなりません")


@dataclass(frozen=True)
class Decomposition:
    rank: int
    kernel: list  # list[Vector]（source 座標）
    image: list   # list[Vector]（target 座標）
    pivots: tuple


def kernel_from_rref(reduced: list[Vector], pivots: tuple, ncols: int) -> list[Vector]:
    pivot_set = set(pivots)
    kernel = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector: Vector = {free: ONE}
        for row, pivot in zip(reduced, pivots):
            value = row.get(free)
            if value:
                vector[pivot] = -value
        kernel.append(vector)
    return kernel


def decompose_matrix(matrix: DomainMatrix) -> Decomposition:
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        kernel = [{j: ONE} for j in range(ncols)]
        return Decomposition(0, kernel, [], ())
    reduced_matrix, pivots = matrix.rref(method="auto")
    reduced = rows_of(reduced_matrix)[: len(pivots)]
    kernel = kernel_from_rref(reduced, pivots, ncols)
    columns = columns_of(matrix)
    image = [columns[p] for p in pivots]
    return Decomposition(len(pivots), kernel, image, tuple(pivots))


def decompose(m: GradedMap, n: int) -> Decomposition:
    """次数 n のブロックの階数・核・像を返す"""
    return decompose_matrix(m.block(n))


def span_rank(vectors: list[Vector], dim: int) -> int:
    return len(rref_rows(vectors, dim)[1])


class SpanSolver:
    """線形独立なベクトル族の張る空間への所属判定と係数の解法

    basis の中から正則な正方部分行列を選び、その逆行列を前計算しておく。
    """

    def __init__(self, basis: list[Vector], dim: int):
        self.basis = list(basis)
        self.dim = dim
        k = len(self.basis)
        if k == 0:
            self._rows: tuple = ()
            self._inverse = None
            return
        # 行 = 基底ベクトル の行列で rref → ピボット列 = 選ぶ座標
        _, pivots = rref_rows(self.basis, dim)
        if len(pivots) != k:
            raise ValueError("SpanSolver の基底が線形従属です")
        self._rows = pivots
        square = [{i: vec.get(p, ZERO) for i, vec in enumerate(self.basis)} for p in pivots]
        square = [{j: v for j, v in row.items() if v} for row in square]
        self._inverse = matrix_from_rows(square, k).to_dense().inv()

    def solve(self, vector: Vector) -> Vector | None:
        """vector = Σ x_i basis_i となる x を返す。張る空間に無ければ None"""
        if not self.basis:
            return {} if vec_is_zero(vector) else None
        rhs = {i: vector.get(p, ZERO) for i, p in enumerate(self._rows)}
        rhs = {i: v for i, v in rhs.items() if v}
        coefficients = apply_matrix(self._inverse, rhs)
        check: Vector = {}
        for i, c in coefficients.items():
            vec_add(check, self.basis[i], c)
        difference = vec_add(dict(check), vector, -ONE)
        if not vec_is_zero(difference):
            return None
        return coefficients


class Quotient:
    """V / span(relations) の商。補空間の座標を標準基底の部分集合で取る"""

    def __init__(self, dim: int, relations: list[Vector]):
        self.dim = dim
        self._reduced, self._pivots = rref_rows(relations, dim)
        pivot_set = set(self._pivots)
        self.complement = [j for j in range(dim) if j not in pivot_set]
        self._position = {j: i for i, j in enumerate(self.complement)}

    @property
    def rank(self) -> int:
        return len(self.complement)

    def project(self, vector: Vector) -> Vector:
        """ambient ベクトルを商の座標へ写す"""
        reduced = dict(vector)
        for row, pivot in zip(self._reduced, self._pivots):
            value = reduced.get(pivot)
            if value:
                vec_add(reduced, row, -value)
        return {self._position[j]: v for j, v in reduced.items() if v}

    def lift(self, coordinates: Vector) -> Vector:
        return {self.complement[i]: v for i, v in coordinates.items() if v}


@dataclass
class HomologyBasis:
    """次数 n のホモロジーの代表元と座標写像"""

    degree: int
    dimension: int
    representatives: list  # list[Vector]（サイクル）
    boundaries: list       # 像 d_{n+1} の基底
    _solver: SpanSolver = None

    def coordinates(self, cycle: Vector) -> Vector | None:
        """サイクルのホモロジー座標。サイクルでなく張れなければ None"""
        solution = self._solver.solve(cycle)
        if solution is None:
            return None
        offset = len(self.boundaries)
        return {i - offset: v for i, v in solution.items() if i >= offset and v}


def homology_from_matrices(
    degree: int, incoming: DomainMatrix, outgoing: DomainMatrix, dim: int
) -> HomologyBasis:
    """incoming: C_{n+1}→C_n, outgoing: C_n→C_{n-1} からホモロジーを求める"""
    if outgoing.shape[1] and incoming.shape[1] and outgoing.shape[0]:
        product = outgoing.to_dense() * incoming.to_dense()
        if not product.is_zero_matrix:
            raise D2NonZero(f"次数 {degree} で d∘d ≠ 0", witness=degree)
    cycles = decompose_matrix(outgoing).kernel if outgoing.shape[0] else [
        {j: ONE} for j in range(dim)
    ]
    boundary_rows, _ = rref_rows(columns_of(incoming), dim) if incoming.shape[1] else ([], ())
    representatives = []
    current = list(boundary_rows)
    rank = len(current)
    for z in cycles:
        if span_rank(current + [z], dim) > rank:
            current.append(z)
            representatives.append(z)
            rank += 1
    solver = SpanSolver(boundary_rows + representatives, dim)
    return HomologyBasis(degree, len(representatives), representatives, boundary_rows, solver)


def homology_at(c: ChainComplexView, n: int) -> HomologyBasis:
    """次数 n のホモロジー（次元・代表サイクル・座標写像）"""
    d = c.differential
    incoming = d.block(n + 1)
    outgoing = d.block(n)
    if c.space.dim(n - 1) and c.space.dim(n - 2):
        below = d.block(n - 1)
        if outgoing.shape[1] and not (below.to_dense() * outgoing.to_dense()).is_zero_matrix:
            raise D2NonZero(f"次数 {n - 1} で d∘d ≠ 0", witness=n - 1)
    return homology_from_matrices(n, incoming, outgoing, c.space.dim(n))


def eigenspace(e: GradedMap, lam, n: int) -> list[Vector]:
    """次数 n で ker(e − λ·id) の基底を返す"""
    if e.shift != 0 or e.source.dim(n) != e.target.dim(n):
        raise ShapeMismatch(f"次数 {n} のブロックが正方ではありません")
    return eigenspace_matrix(e.block(n), lam)


def eigenspace_matrix(matrix: DomainMatrix, lam) -> list[Vector]:
    nrows, ncols = matrix.shape
    if nrows != ncols:
        raise ShapeMismatch(f"{matrix.shape} は正方行列ではありません")
    if ncols == 0:
        return []
    shifted = matrix.to_dense() - DomainMatrix.eye(ncols, QQ).to_dense() * scalar(lam)
    return decompose_matrix(shifted).kernel
