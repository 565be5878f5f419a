"""次数付きテンソル代数モジュール

Koszul 符号規則、語（テンソル語）の代数、原始的に生成される Hopf 余積、
原始元（自由 Lie 元）、対称化、PBW 重み射影をまとめる。

語は生成元番号のタプル、元は {語: 係数} の辞書で表す。
"""

import logging
from dataclasses import dataclass

from .errors import LengthMismatch, NonPositiveDegreeGenerator, SpanFailure
from .exact import (
    ONE,
    ZERO,
    SpanSolver,
    decompose_matrix,
    matrix_from_columns,
    vec_add,
)

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    """R = T(C̄[−1]) の生成元。source は元になった C̄ の基底ラベル"""

    label: str
    degree: int
    source: str = ""


def koszul_sign(permutation, degrees) -> object:
    """並べ替えの Koszul 符号（±1）

    permutation[k] は並べ替え後の位置 k に来る元の番号。
    隣接互換ごとに (−1)^{|a||b|} を掛ける。
    """
    if len(permutation) != len(degrees):
        raise LengthMismatch(
            f"置換の長さ {len(permutation)} と次数列の長さ {len(degrees)} が異なります"
        )
    exponent = 0
    for i in range(len(permutation)):
        a = permutation[i]
        for j in range(i + 1, len(permutation)):
            b = permutation[j]
            if a > b:
                exponent += degrees[a] * degrees[b]
    return -ONE if exponent % 2 else ONE


def sign_of(exponent: int) -> object:
    return -ONE if exponent % 2 else ONE


def element_add(target: dict, source: dict, factor=ONE) -> dict:
    return vec_add(target, source, factor)


def element_product(left: dict, right: dict) -> dict:
    result: dict = {}
    for w1, c1 in left.items():
        for w2, c2 in right.items():
            key = w1 + w2
            value = result.get(key, ZERO) + c1 * c2
            if value:
                result[key] = value
            else:
                result.pop(key, None)
    return result


class TensorAlgebra:
    """生成元の有限リスト上のテンソル代数 T(V) と、その Hopf 構造のキャッシュ

    すべての生成元は原始的（Δg = g⊗1 + 1⊗g）。
    キャッシュは次数ごとに一度だけ書き込まれる。
    """

    def __init__(self, generators: list[Generator]):
        for g in generators:
            if g.degree < 1:
                raise NonPositiveDegreeGenerator(
                    f"生成元 {g.label} の次数 {g.degree} は 1 以上でなければなりません",
                    witness=g.label,
                )
        self.generators = list(generators)
        self.degrees = [g.degree for g in generators]
        self._words: dict[int, list[tuple]] = {}
        self._index: dict[int, dict[tuple, int]] = {}
        self._primitives: dict[int, list[dict]] = {}
        self._weights: dict[int, "WeightProjectors"] = {}
        self._symmetrized: dict = {}

    # ─── 語と基底 ───

    def word_degree(self, word: tuple) -> int:
        return sum(self.degrees[i] for i in word)

    def word_label(self, word: tuple) -> str:
        if not word:
            return "1"
        return "·".join(self.generators[i].label for i in word)

    def words(self, n: int) -> list[tuple]:
        """全次数 n の語（長さ→辞書式の順）"""
        if n not in self._words:
            self._words[n] = word_basis(self.generators, n, _checked=True)
            self._index[n] = {w: i for i, w in enumerate(self._words[n])}
        return self._words[n]

    def dim(self, n: int) -> int:
        return len(self.words(n)) if n >= 0 else 0

    def index(self, n: int) -> dict[tuple, int]:
        self.words(n)
        return self._index[n]

    def to_vector(self, element: dict, n: int) -> dict:
        """次数 n の斉次元を R_n の座標ベクトルにする"""
        index = self.index(n)
        return {index[w]: c for w, c in element.items() if c}

    def from_vector(self, vector: dict, n: int) -> dict:
        words = self.words(n)
        return {words[i]: c for i, c in vector.items() if c}

    # ─── Hopf 構造 ───

    def coproduct(self, word: tuple) -> dict:
        return hopf_coproduct(word, [self.degrees[i] for i in word])

    def reduced_coproduct_column(self, word: tuple, n: int) -> dict:
        """Δ̄(w) を ⊕_{i+j=n, i,j≥1} R_i⊗R_j の座標ベクトルにする"""
        offsets = self._pair_offsets(n)
        column: dict = {}
        for (w1, w2), c in self.coproduct(word).items():
            if not w1 or not w2:
                continue
            d1 = self.word_degree(w1)
            key = offsets[d1] + self.index(d1)[w1] * self.dim(n - d1) + self.index(n - d1)[w2]
            vec_add(column, {key: c})
        return column

    def _pair_offsets(self, n: int) -> dict[int, int]:
        offsets, total = {}, 0
        for i in range(1, n):
            offsets[i] = total
            total += self.dim(i) * self.dim(n - i)
        offsets[n] = total
        return offsets

    def primitives(self, n: int) -> list[dict]:
        """𝓛_n = ker Δ̄ ∩ R_n の基底（元として）。Δ̄ の行列の核を直接解く"""
        if n not in self._primitives:
            if n <= 0:
                basis = []
            else:
                total = self._pair_offsets(n)[n]
                columns = [self.reduced_coproduct_column(w, n) for w in self.words(n)]
                kernel = decompose_matrix(matrix_from_columns(columns, total)).kernel
                basis = [self.from_vector(v, n) for v in kernel]
            self._primitives[n] = basis
            LOGGER.debug("𝓛_%d: dim %d (R_%d: dim %d)", n, len(basis), n, self.dim(n))
        return self._primitives[n]

    def lie_basis(self, n: int) -> list[tuple[int, dict]]:
        """次数 1..n の 𝓛 基底 (次数, 元)。n を増やしても前の並びは変わらない"""
        return [(k, x) for k in range(1, n + 1) for x in self.primitives(k)]

    def weight_projectors(self, n: int) -> "WeightProjectors":
        if n not in self._weights:
            self._weights[n] = weight_projectors(self, n)
        return self._weights[n]


def word_basis(generators: list[Generator], n: int, _checked: bool = False) -> list[tuple]:
    """全次数 n の語を重複なく決定的な順で列挙する"""
    if not _checked:
        for g in generators:
            if g.degree < 1:
                raise NonPositiveDegreeGenerator(
                    f"生成元 {g.label} の次数 {g.degree} は 1 以上でなければなりません",
                    witness=g.label,
                )
    if n < 0:
        return []
    found: list[tuple] = []

    def extend(prefix: tuple, remaining: int) -> None:
        if remaining == 0:
            found.append(prefix)
            return
        for i, g in enumerate(generators):
            if g.degree <= remaining:
                extend(prefix + (i,), remaining - g.degree)

    extend((), n)
    return sorted(found, key=lambda w: (len(w), w))


def hopf_coproduct(word: tuple, degrees: list[int]) -> dict:
    """Δ(w) = Σ_S ±(S 上の部分語)⊗(補集合の部分語)。符号は unshuffle の Koszul 符号"""
    length = len(word)
    result: dict = {}
    for mask in range(1 << length):
        left = [k for k in range(length) if mask >> k & 1]
        right = [k for k in range(length) if not mask >> k & 1]
        sign = koszul_sign(left + right, degrees)
        key = (tuple(word[k] for k in left), tuple(word[k] for k in right))
        value = result.get(key, ZERO) + sign
        if value:
            result[key] = value
        else:
            result.pop(key, None)
    return result


def primitive_basis(generators, n: int) -> list[dict]:
    """𝓛_n の基底。生成元リストでも TensorAlgebra でも受け付ける"""
    algebra = generators if isinstance(generators, TensorAlgebra) else TensorAlgebra(generators)
    return algebra.primitives(n)


def symmetrize(lie_elements: list[dict], degrees: list[int]) -> dict:
    """(1/p!) Σ_σ (Koszul 符号)·(σ 順の積)"""
    lie_basis = list(zip(degrees, lie_elements))
    return _symmetrized(tuple(range(len(lie_elements))), lie_basis, {})


def _symmetrized(monomial: tuple, lie_basis: list, memo: dict) -> dict:
    # sym(x_1…x_p) = (1/p) Σ_i ±x_i·sym(x_1…x̂_i…x_p)
    if monomial in memo:
        return memo[monomial]
    p = len(monomial)
    if p == 0:
        return {(): ONE}
    result: dict = {}
    before = 0
    for i, k in enumerate(monomial):
        degree, element = lie_basis[k]
        rest = _symmetrized(monomial[:i] + monomial[i + 1:], lie_basis, memo)
        element_add(result, element_product(element, rest), sign_of(degree * before))
        before += degree
    value = {w: c / p for w, c in result.items() if c}
    memo[monomial] = value
    return value


@dataclass
class WeightProjectors:
    """R_n = ⊕_p R_n^{(p)} の射影。solver は PBW 基底での座標を与える"""

    degree: int
    weights: list          # 列ごとの重み
    columns: list          # PBW 基底ベクトル（R_n 座標）
    solver: SpanSolver

    def components(self, vector: dict) -> dict[int, dict]:
        """R_n のベクトルを重みごとの成分に分ける"""
        coefficients = self.solver.solve(vector)
        if coefficients is None:
            raise SpanFailure(f"次数 {self.degree} のベクトルが PBW 像に入りません")
        parts: dict[int, dict] = {}
        for i, c in coefficients.items():
            vec_add(parts.setdefault(self.weights[i], {}), self.columns[i], c)
        return {p: v for p, v in parts.items() if v}

    def project(self, vector: dict, p: int) -> dict:
        return self.components(vector).get(p, {})

    def occurring(self) -> list[int]:
        return sorted(set(self.weights))

    def basis(self, p: int) -> list[dict]:
        """重み p 成分の基底（PBW 対称化像）"""
        return [col for col, w in zip(self.columns, self.weights) if w == p]

    def matrix(self, p: int):
        """P_p を R_n 上の正方行列として返す"""
        dim = self.solver.dim
        columns = [self.project({j: ONE}, p) for j in range(dim)]
        return matrix_from_columns(columns, dim)

    def weight_of(self, vector: dict) -> int | None:
        """斉次なら重み、混合なら None（零ベクトルは None）"""
        parts = self.components(vector)
        return next(iter(parts)) if len(parts) == 1 else None


def sym_monomials(lie_basis: list[tuple[int, dict]], n: int) -> list[list[int]]:
    """Sym(𝓛) の単項式（𝓛 基底の番号の非減少列、奇数次は重複なし）で次数 n のもの"""
    found: list[list[int]] = []

    def extend(start: int, prefix: list[int], remaining: int) -> None:
        if remaining == 0:
            found.append(list(prefix))
            return
        for k in range(start, len(lie_basis)):
            degree = lie_basis[k][0]
            if degree > remaining:
                continue
            following = k + 1 if degree % 2 else k
            prefix.append(k)
            extend(following, prefix, remaining - degree)
            prefix.pop()

    extend(0, [], n)
    return found


def weight_projectors(algebra: TensorAlgebra, n: int) -> WeightProjectors:
    """PBW 対称化像から重み射影を厳密に解く"""
    dim = algebra.dim(n)
    lie_basis = algebra.lie_basis(n)
    columns, weights = [], []
    for monomial in sym_monomials(lie_basis, n):
        element = _symmetrized(tuple(monomial), lie_basis, algebra._symmetrized)
        columns.append(algebra.to_vector(element, n))
        weights.append(len(monomial))
    if len(columns) != dim:
        raise SpanFailure(
            f"次数 {n}: PBW 単項式 {len(columns)} 個と dim R_n = {dim} が一致しません"
        )
    try:
        solver = SpanSolver(columns, dim)
    except ValueError as exc:
        raise SpanFailure(f"次数 {n}: PBW 像が R_n を張りません") from exc
    LOGGER.debug("重み射影 次数 %d: 重み %s", n, sorted(set(weights)))
    return WeightProjectors(n, weights, columns, solver)


def bracket(left: dict, right: dict, left_degree: int, right_degree: int) -> dict:
    """次数付き交換子 xy − (−1)^{|x||y|} yx"""
    result = element_product(left, right)
    return element_add(result, element_product(right, left), -sign_of(left_degree * right_degree))


