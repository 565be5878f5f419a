"""ホモロジー理論エンジンの基底クラス

すべての理論（巡回・Hochschild ホモロジー・Hochschild コホモロジー）は
このインターフェースを実装する。重み付きホモロジーと座標の解法は共通実装。
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

from core.errors import HomologySolveError
from core.exact import (
    ONE,
    ChainComplexView,
    GradedMap,
    GradedSpace,
    SpanSolver,
    homology_from_matrices,
    matrix_from_columns,
    span_rank,
    vec_add,
)


@dataclass
class HomologyClass:
    """重み斉次な代表サイクルを持つホモロジー類"""

    kind: str
    degree: int
    weight: int
    index: int           # 次数内の通し番号
    vector: dict         # ambient 座標の代表サイクル

    @property
    def tag(self) -> str:
        return f"{self.kind}[{self.degree},{self.weight}]#{self.index}"


@dataclass
class HodgeHomology:
    """次数 n のホモロジーを重みごとに分けたもの"""

    degree: int
    parts: dict = field(default_factory=dict)   # {p: (W の SpanSolver, W 座標の HomologyBasis)}
    classes: list = field(default_factory=list)
    _offsets: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.classes)

    def dims_by_weight(self) -> dict[int, int]:
        return {p: basis.dimension for p, (_, basis) in self.parts.items() if basis.dimension}


class HomologyTheory(ABC):
    """次数付き鎖複体とその重み分解を与えるエンジンの抽象基底クラス

    ベクトルは次数 n の基底 basis(n) の番号をキーにした疎な辞書。
    """

    kind = ""

    def __init__(self, algebra, max_degree: int):
        self.algebra = algebra
        self.model = algebra.model
        self.max_degree = max_degree
        self._homology: dict[int, HodgeHomology] = {}
        self._index: dict[int, dict] = {}
        self._weight_spaces: dict[tuple[int, int], list[dict]] = {}

    @abstractmethod
    def get_name(self) -> str:
        """理論名を返す"""
        pass

    @abstractmethod
    def degree_range(self) -> range:
        """ホモロジーを計算する次数の窓"""
        pass

    @abstractmethod
    def basis(self, n: int) -> list:
        """次数 n の基底のキー（決定的な順）"""
        pass

    @abstractmethod
    def boundary_element(self, element: dict) -> dict:
        """キー → 係数 の斉次元に微分を作用させる"""
        pass

    @abstractmethod
    def split_weights(self, n: int, vector: dict) -> dict[int, dict]:
        """次数 n のベクトルを重み成分に分ける"""
        pass

    @abstractmethod
    def weight_space(self, n: int, p: int) -> list[dict]:
        """重み p 成分の線形独立な基底"""
        pass

    @abstractmethod
    def weights(self, n: int) -> list[int]:
        pass

    @abstractmethod
    def key_label(self, key) -> str:
        pass

    # ─── 座標 ───

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def labels(self, n: int) -> tuple:
        return tuple(self.key_label(k) for k in self.basis(n))

    def key_index(self, n: int) -> dict:
        if n not in self._index:
            self._index[n] = {k: i for i, k in enumerate(self.basis(n))}
        return self._index[n]

    def to_vector(self, element: dict, n: int) -> dict:
        index = self.key_index(n)
        vector: dict = {}
        for key, coef in element.items():
            vec_add(vector, {index[key]: coef})
        return vector

    def from_vector(self, vector: dict, n: int) -> dict:
        keys = self.basis(n)
        return {keys[i]: c for i, c in vector.items() if c}

    def boundary(self, n: int, vector: dict) -> dict:
        if not vector:
            return {}
        return self.to_vector(self.boundary_element(self.from_vector(vector, n)), n - 1)

    def cached_weight_space(self, n: int, p: int) -> list[dict]:
        key = (n, p)
        if key not in self._weight_spaces:
            self._weight_spaces[key] = self.weight_space(n, p) if self.dim(n) else []
        return self._weight_spaces[key]

    # ─── 複体とホモロジー ───

    def complex_view(self) -> ChainComplexView:
        """窓の中の（重みで分けない）鎖複体"""
        degrees = self.degree_range()
        lo, hi = degrees.start - 1, degrees.stop
        space = GradedSpace({n: self.labels(n) for n in range(lo, hi + 1) if self.dim(n)})
        columns = {
            n: [self.boundary(n, {j: ONE}) for j in range(self.dim(n))]
            for n in range(lo + 1, hi + 1)
            if self.dim(n)
        }
        return ChainComplexView(space, GradedMap.from_columns(space, space, -1, columns))

    def homology(self, n: int) -> HodgeHomology:
        """次数 n のホモロジーを重み部分複体ごとに計算する（キャッシュは一度だけ書く）"""
        if n in self._homology:
            return self._homology[n]
        result = HodgeHomology(n)
        index = 0
        for p in self.weights(n):
            here = self.cached_weight_space(n, p)
            if not here:
                continue
            below = self.cached_weight_space(n - 1, p)
            above = self.cached_weight_space(n + 1, p)
            solver = SpanSolver(here, self.dim(n))
            below_solver = SpanSolver(below, self.dim(n - 1))
            outgoing = [self._solve(below_solver, self.boundary(n, w), n - 1, p) for w in here]
            incoming = [self._solve(solver, self.boundary(n + 1, w), n, p) for w in above]
            basis = homology_from_matrices(
                n,
                matrix_from_columns(incoming, len(here)),
                matrix_from_columns(outgoing, len(below)),
                len(here),
            )
            result.parts[p] = (solver, basis)
            result._offsets[p] = index
            for rep in basis.representatives:
                vector: dict = {}
                for i, c in rep.items():
                    vec_add(vector, here[i], c)
                result.classes.append(HomologyClass(self.kind, n, p, index, vector))
                index += 1
        self._homology[n] = result
        return result

    @staticmethod
    def _solve(solver: SpanSolver, vector: dict, n: int, p: int) -> dict:
        coordinates = solver.solve(vector)
        if coordinates is None:
            raise HomologySolveError(
                f"微分が重み {p} を保ちません（次数 {n}）", witness={"degree": n, "weight": p}
            )
        return coordinates

    def classes(self, n: int) -> list[HomologyClass]:
        return self.homology(n).classes

    def coordinates(self, n: int, cycle: dict) -> dict:
        """サイクルのホモロジー座標 {類の番号: 係数}。表せなければ HomologySolveError"""
        if not cycle:
            return {}
        if n not in self.degree_range():
            raise HomologySolveError(f"次数 {n} は窓の外です", witness={"degree": n})
        homology = self.homology(n)
        result: dict = {}
        for p, part in self.split_weights(n, cycle).items():
            if p not in homology.parts:
                # 重み p の部分にホモロジーが無い: 境界であることだけ確かめる
                if self._boundary_part(n, p, part):
                    continue
                raise HomologySolveError(
                    f"次数 {n} 重み {p} の成分がサイクルではありません",
                    witness={"degree": n, "weight": p},
                )
            solver, basis = homology.parts[p]
            local = solver.solve(part)
            values = basis.coordinates(local) if local is not None else None
            if values is None:
                raise HomologySolveError(
                    f"次数 {n} 重み {p} の成分をホモロジー基底で表せません",
                    witness={"degree": n, "weight": p},
                )
            offset = homology._offsets[p]
            for i, c in values.items():
                result[offset + i] = c
        return result

    def _boundary_part(self, n: int, p: int, vector: dict) -> bool:
        above = self.cached_weight_space(n + 1, p)
        images = [self.boundary(n + 1, w) for w in above]
        if not images:
            return not vector
        rank = span_rank(images, self.dim(n))
        return span_rank(images + [vector], self.dim(n)) == rank

    def dimensions(self) -> dict[int, int]:
        return {n: self.homology(n).dimension for n in self.degree_range()}

    def hodge_dimensions(self) -> dict[tuple[int, int], int]:
        table = {}
        for n in self.degree_range():
            for p, dim in self.homology(n).dims_by_weight().items():
                table[(n, p)] = dim
        return table
