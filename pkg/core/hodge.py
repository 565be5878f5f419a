"""Hodge 分解モジュール

3 つのホモロジー理論の重み分解、Adams 作用素の固有値検査、
通常の冪零 Lie 代数に対する有限 Chevalley–Eilenberg 経路、Todd 1 形式の超トレース検査。
"""

import logging
from dataclasses import dataclass, field

from .coalgebra import LInfinityModel, nilpotency_index, sym_multiply
from .errors import NonZeroSupertrace, RegimeViolation
from .exact import (
    ONE,
    ChainComplexView,
    GradedMap,
    GradedSpace,
    eigenspace_matrix,
    homology_at,
    matrix_from_columns,
    scalar_text,
    vec_add,
)
from .graded import sign_of
from .report import CheckResult
from theories.operators import Engines, adams, adams_hochschild

LOGGER = logging.getLogger(__name__)


@dataclass
class HodgeTable:
    """(次数 n, 重み p) → 次元。representatives は重み付きの代表元"""

    kind: str
    model: str
    dims: dict = field(default_factory=dict)
    representatives: dict = field(default_factory=dict)   # {n: [HomologyClass]}

    def total(self, n: int) -> int:
        return sum(d for (m, _), d in self.dims.items() if m == n)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(n, p, d) for (n, p), d in sorted(self.dims.items()) if d]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "model": self.model,
            "rows": [
                {"degree": n, "weight": p, "hodge": p - 1, "dimension": d} for n, p, d in self.rows()
            ],
        }


def hodge_split(model, window: int, kind: str, engines=None) -> HodgeTable:
    """重み部分複体ごとのホモロジー。行の和は重みで分けない次元に一致する"""
    engines = engines or Engines(model, window)
    theory = engines.theory(kind)
    table = HodgeTable(kind, model.name)
    for n in theory.degree_range():
        homology = theory.homology(n)
        for p, dim in homology.dims_by_weight().items():
            table.dims[(n, p)] = dim
        if homology.classes:
            table.representatives[n] = list(homology.classes)
    return table


# ─── Adams 作用素 ───

def _class_matrix(theory, n: int, operator) -> list[dict]:
    """ホモロジー類の座標で表した作用素の列"""
    return [theory.coordinates(n, operator(cls.vector)) for cls in theory.classes(n)]


def verify_adams(engines, p_max: int, k_set=(2, 3)) -> list[CheckResult]:
    """Ψ^k が重み p の巡回ホモロジー類に k^p で作用することを確かめる"""
    theory = engines.hc
    eigen = CheckResult("adams_eigenvalue")
    space = CheckResult("adams_eigenspace")
    weight_one: dict = {}
    for n in theory.degree_range():
        classes = theory.classes(n)
        if not classes:
            continue
        for k in k_set:
            columns = _class_matrix(theory, n, lambda v, k=k: adams(engines, k, n, v))
            for cls, column in zip(classes, columns):
                if cls.weight > p_max:
                    continue
                expected = {cls.index: ONE * k ** cls.weight}
                if cls.weight == 1:
                    weight_one[f"{n}:{cls.index}:k={k}"] = column == expected
                    continue
                if column != expected:
                    eigen.fail(
                        {"class": cls.tag, "k": k, "expected": k ** cls.weight,
                         "image": {str(i): scalar_text(c) for i, c in column.items()}}
                    )
            matrix = matrix_from_columns(columns, len(classes))
            for p in sorted({c.weight for c in classes}):
                if p < 2 or p > p_max:
                    continue
                vectors = eigenspace_matrix(matrix, k ** p)
                members = {c.index for c in classes if c.weight == p}
                inside = all(set(v) <= members for v in vectors)
                if len(vectors) != len(members) or not inside:
                    space.fail({"degree": n, "weight": p, "k": k,
                                "eigenspace": len(vectors), "summand": len(members)})
    # 重み 1 は測るだけで合否にしない
    eigen.details["weight_one"] = weight_one

    composition = CheckResult("adams_composition")
    for n in theory.degree_range():
        for j in range(theory.dim(n)):
            vector = {j: ONE}
            for k in (1, 2, 3):
                for l in (1, 2, 3):
                    lhs = adams(engines, k, n, adams(engines, l, n, vector))
                    rhs = adams(engines, k * l, n, vector)
                    if lhs != rhs:
                        composition.fail({"degree": n, "basis": theory.key_label(theory.basis(n)[j]),
                                          "k": k, "l": l})

    hochschild = CheckResult("adams_hochschild")
    hh = engines.hh
    for n in hh.degree_range():
        for cls in hh.classes(n):
            if cls.weight > p_max:
                continue
            for k in k_set:
                image = hh.coordinates(n, adams_hochschild(engines, k, n, cls.vector))
                if image != {cls.index: ONE * k ** cls.weight}:
                    hochschild.fail({"class": cls.tag, "k": k})
    return [eigen, space, composition, hochschild]


# ─── 通常の Lie 代数: 有限 CE 複体 ───

def _sym_monomials(dim: int, p: int) -> list[tuple]:
    if p == 0:
        return [()]
    found = []

    def extend(start: int, prefix: tuple) -> None:
        if len(prefix) == p:
            found.append(prefix)
            return
        for i in range(start, dim):
            extend(i, prefix + (i,))

    extend(0, ())
    return found


def _wedge_monomials(dim: int, q: int) -> list[tuple]:
    found = []

    def extend(start: int, prefix: tuple) -> None:
        if len(prefix) == q:
            found.append(prefix)
            return
        for i in range(start, dim):
            extend(i + 1, prefix + (i,))

    extend(0, ())
    return found


class LieModuleComplex:
    """Λ^q𝔤 ⊗ Sym^p𝔤（随伴作用）の CE 鎖複体と Hom(Λ^q𝔤, Sym^p𝔤) の余鎖複体"""

    def __init__(self, g: LInfinityModel, p: int):
        if not g.is_ordinary:
            raise RegimeViolation(f"{g.name} は通常の Lie 代数ではありません")
        self.g = g
        self.p = p
        self.dim = g.dim
        self.sym = _sym_monomials(self.dim, p)
        self.odd = [1] * self.dim

    def bracket(self, i: int, j: int) -> dict:
        return self.g.operation([i, j])

    def act(self, i: int, monomial: tuple) -> dict:
        """e_i·(y_1⋯y_p) = Σ_k y_1⋯[e_i, y_k]⋯y_p"""
        result: dict = {}
        for k, y in enumerate(monomial):
            rest = monomial[:k] + monomial[k + 1:]
            for j, c in self.bracket(i, y).items():
                vec_add(result, {tuple(sorted(rest + (j,))): c})
        return result

    def _wedge_insert(self, vector: dict, rest: tuple) -> dict:
        """v∧x_rest を昇順単項式に（符号込み）"""
        result: dict = {}
        for j, c in vector.items():
            product = sym_multiply((j,), rest, self.odd)
            if product is not None:
                sign, monomial = product
                vec_add(result, {monomial: sign * c})
        return result

    def chain_boundary(self, wedge: tuple, m: tuple) -> dict:
        """d(x_1∧…∧x_q ⊗ m)"""
        result: dict = {}
        q = len(wedge)
        for a in range(q):
            for b in range(a + 1, q):
                rest = wedge[:a] + wedge[a + 1:b] + wedge[b + 1:]
                sign = sign_of(a + b)
                for w2, c in self._wedge_insert(self.bracket(wedge[a], wedge[b]), rest).items():
                    vec_add(result, {(w2, m): sign * c})
        for a in range(q):
            rest = wedge[:a] + wedge[a + 1:]
            for m2, c in self.act(wedge[a], m).items():
                vec_add(result, {(rest, m2): sign_of(a + 1) * c})
        return result

    def cochain_coboundary(self, wedge: tuple, m: tuple) -> dict:
        """δ(e^I⊗m)。(δf)(x_0,…,x_q) = Σ ±x_i·f(…) + Σ ±f([x_i,x_j],…) を基底で展開"""
        result: dict = {}
        q = len(wedge)
        for target in _wedge_monomials(self.dim, q + 1):
            value: dict = {}
            for a, x in enumerate(target):
                rest = target[:a] + target[a + 1:]
                if rest == wedge:
                    vec_add(value, self.act(x, m), sign_of(a))
            for a in range(q + 1):
                for b in range(a + 1, q + 1):
                    rest = target[:a] + target[a + 1:b] + target[b + 1:]
                    inserted = self._wedge_insert(self.bracket(target[a], target[b]), rest)
                    coef = inserted.get(wedge)
                    if coef:
                        vec_add(value, {m: coef}, sign_of(a + b))
            for m2, c in value.items():
                vec_add(result, {(target, m2): c})
        return result

    def chain_view(self) -> ChainComplexView:
        keys = {q: [(w, m) for w in _wedge_monomials(self.dim, q) for m in self.sym]
                for q in range(self.dim + 1)}
        return self._view(keys, self.chain_boundary, lambda q: q)

    def cochain_view(self) -> ChainComplexView:
        # コホモロジー次数 q をホモロジー次数 −q として持つ
        keys = {-q: [(w, m) for w in _wedge_monomials(self.dim, q) for m in self.sym]
                for q in range(self.dim + 1)}
        return self._view(keys, self.cochain_coboundary, lambda q: -q)

    def _view(self, keys: dict, operator, degree_of) -> ChainComplexView:
        labels = {n: tuple(self._label(k) for k in ks) for n, ks in keys.items() if ks}
        space = GradedSpace(labels)
        index = {n: {k: i for i, k in enumerate(ks)} for n, ks in keys.items()}
        columns = {}
        for n, ks in keys.items():
            if n - 1 not in index:
                continue
            cols = []
            for key in ks:
                image = operator(*key)
                cols.append({index[n - 1][k]: c for k, c in image.items() if c})
            columns[n] = cols
        return ChainComplexView(space, GradedMap.from_columns(space, space, -1, columns))

    def _label(self, key) -> str:
        wedge, m = key
        names = [b.label for b in self.g.basis]
        left = "∧".join(names[i] for i in wedge) or "1"
        right = "·".join(names[i] for i in m) or "1"
        return f"{left}⊗{right}"


def lie_hodge_tables(g: LInfinityModel, p_max: int) -> tuple[HodgeTable, HodgeTable]:
    """H_q(𝔤; Sym^p𝔤) と H^q(𝔤; Sym^p𝔤)（p ≤ p_max）の表"""
    nilpotency_index(g)
    homology = HodgeTable("lie-homology", g.name)
    cohomology = HodgeTable("lie-cohomology", g.name)
    for p in range(p_max + 1):
        complex_ = LieModuleComplex(g, p)
        chains = complex_.chain_view()
        cochains = complex_.cochain_view()
        for q in range(g.dim + 1):
            homology.dims[(q, p)] = homology_at(chains, q).dimension
            cohomology.dims[(q, p)] = homology_at(cochains, -q).dimension
        LOGGER.debug("%s p=%d: H_* %s", g.name, p,
                     [homology.dims[(q, p)] for q in range(g.dim + 1)])
    return homology, cohomology


# ─── Todd 1 形式 ───

class FormAlgebra:
    """𝔤[1] 上の多項式微分形式。x^i の偶奇は 𝔤[1] の次数、dx^i はその反対"""

    def __init__(self, g: LInfinityModel):
        self.n = g.dim
        shifted = g.shifted
        self.parity = [s % 2 for s in shifted] + [(s + 1) % 2 for s in shifted]

    def multiply(self, left: dict, right: dict) -> dict:
        result: dict = {}
        for a, c1 in left.items():
            for b, c2 in right.items():
                product = sym_multiply(a, b, self.parity)
                if product is not None:
                    sign, monomial = product
                    vec_add(result, {monomial: sign * c1 * c2})
        return result

    def derivative(self, element: dict, i: int) -> dict:
        """左からの偏微分 ∂/∂x^i"""
        result: dict = {}
        for monomial, coef in element.items():
            before = 0
            for k, v in enumerate(monomial):
                if v == i:
                    rest = monomial[:k] + monomial[k + 1:]
                    vec_add(result, {rest: coef * sign_of(self.parity[i] * before)})
                before += self.parity[v]
        return result

    def exterior(self, element: dict) -> dict:
        """外微分 d（次数 +1 の奇導分）"""
        result: dict = {}
        for monomial, coef in element.items():
            before = 0
            for k, v in enumerate(monomial):
                if v < self.n:
                    head, tail = monomial[:k], monomial[k + 1:]
                    product = sym_multiply(head + (self.n + v,), tail, self.parity)
                    if product is not None:
                        sign, reordered = product
                        vec_add(result, {reordered: coef * sign * sign_of(before)})
                before += self.parity[v]
        return result


def vector_field(g: LInfinityModel) -> list[dict]:
    """Q(x^j) = Σ_k (1/重複度の階乗) x^{i_1}⋯x^{i_k} l_k(e_{i_1},…,e_{i_k})^j"""
    components: list[dict] = [{} for _ in range(g.dim)]
    for key, value in g.operations.items():
        multiplicity = ONE
        for i in set(key):
            for m in range(2, key.count(i) + 1):
                multiplicity *= m
        for j, coef in g.operation(list(key)).items():
            vec_add(components[j], {tuple(key): coef / multiplicity})
    return components


def todd_form(g: LInfinityModel) -> tuple[FormAlgebra, list[list[dict]]]:
    """α^j_i = d(∂_{x^i} Q(x^j))"""
    forms = FormAlgebra(g)
    q = vector_field(g)
    alpha = [[forms.exterior(forms.derivative(q[j], i)) for i in range(g.dim)] for j in range(g.dim)]
    return forms, alpha


def _matrix_product(forms: FormAlgebra, a: list[list[dict]], b: list[list[dict]]) -> list[list[dict]]:
    size = len(a)
    result = [[{} for _ in range(size)] for _ in range(size)]
    for j in range(size):
        for i in range(size):
            entry: dict = {}
            for k in range(size):
                if a[j][k] and b[k][i]:
                    vec_add(entry, forms.multiply(a[j][k], b[k][i]))
            result[j][i] = entry
    return result


def supertrace(forms: FormAlgebra, matrix: list[list[dict]]) -> dict:
    result: dict = {}
    for i in range(len(matrix)):
        vec_add(result, matrix[i][i], sign_of(forms.parity[i]))
    return result


def todd_check(g: LInfinityModel) -> list[CheckResult]:
    """Str(α^k) = 0（k < 冪零指数）と α^r = 0（r = 冪零指数）を確かめる

    超トレースが 0 でなければ NonZeroSupertrace。
    """
    index = nilpotency_index(g)
    forms, alpha = todd_form(g)
    traces = CheckResult("todd_supertrace")
    power = alpha
    for k in range(1, index):
        value = supertrace(forms, power)
        traces.details[f"Str(α^{k})"] = "0" if not value else str(
            {str(m): scalar_text(c) for m, c in value.items()}
        )
        if value:
            raise NonZeroSupertrace(
                f"{g.name}: Str(α^{k}) ≠ 0", witness={"k": k, "value": traces.details[f"Str(α^{k})"]}
            )
        power = _matrix_product(forms, power, alpha)
    vanishing = CheckResult("todd_nilpotent")
    vanishing.details["index"] = index
    # ループを抜けた時点で power = α^index
    if any(entry for row in power for entry in row):
        vanishing.fail({"index": index})
    return [traces, vanishing]
