"""入力モデルモジュール

有限次元の巡回余可換 DG 余代数、冪零 L∞ 代数、Chevalley–Eilenberg 構成、
および余バー構成 R = Ω(C) = T(C̄[−1]) をまとめる。

レジーム (i) は単連結（C̄ が次数 2 以上）、レジーム (ii) は通常の冪零 Lie 代数。
"""

import itertools
import logging
from dataclasses import dataclass, field

from .errors import (
    D2NonZero,
    DegeneratePairing,
    LInfinityRelationsFail,
    NotNilpotent,
    RegimeViolation,
)
from .exact import ONE, ZERO, rref_rows, scalar, scalar_text, span_rank, vec_add
from .graded import Generator, TensorAlgebra, koszul_sign, sign_of
from .report import FAIL, CheckResult

LOGGER = logging.getLogger(__name__)

SIMPLY_CONNECTED = "simply_connected"
CLASSICAL_LIE = "classical_lie"


@dataclass(frozen=True)
class BasisElement:
    label: str
    degree: int


@dataclass
class CoalgebraModel:
    """有限次元の余増大余可換 DG 余代数と次数 d の巡回ペアリング

    coproduct はラベル → [(左, 右, 係数)]（余単位の項も含む完全な Δ）。
    differential はラベル → [(像, 係数)]。pairing は (x, y) → ⟨x,y⟩。
    """

    name: str
    basis: tuple
    counit_label: str = "1"
    coproduct: dict = field(default_factory=dict)
    differential: dict = field(default_factory=dict)
    pairing: dict = field(default_factory=dict)
    pairing_degree: int | None = None
    regime: str = SIMPLY_CONNECTED
    generator_names: dict = field(default_factory=dict)
    lie: "LInfinityModel | None" = None

    def __post_init__(self):
        self._degree = {b.label: b.degree for b in self.basis}

    # ─── 参照用ヘルパー ───

    @property
    def labels(self) -> list[str]:
        return [b.label for b in self.basis]

    @property
    def reduced_labels(self) -> list[str]:
        return [b.label for b in self.basis if b.label != self.counit_label]

    def degree(self, label: str) -> int:
        return self._degree[label]

    def delta(self, label: str) -> dict:
        result: dict = {}
        for left, right, coef in self.coproduct.get(label, ()):
            vec_add(result, {(left, right): scalar(coef)})
        return result

    def reduced_delta(self, label: str) -> dict:
        unit = self.counit_label
        return {k: c for k, c in self.delta(label).items() if unit not in k}

    def d(self, label: str) -> dict:
        result: dict = {}
        for target, coef in self.differential.get(label, ()):
            vec_add(result, {target: scalar(coef)})
        return result

    def pair(self, left: str, right: str):
        return scalar(self.pairing.get((left, right), ZERO))

    @property
    def has_pairing(self) -> bool:
        return self.pairing_degree is not None and bool(self.pairing)


def _tensor_add(target: dict, key, coef) -> None:
    vec_add(target, {key: coef})


def validate_model(c: CoalgebraModel) -> list[CheckResult]:
    """余代数・微分・ペアリングの公理をすべて厳密に検査する（例外は投げない）"""
    labels = c.labels
    unit = c.counit_label
    results: list[CheckResult] = []

    check = CheckResult("degrees")
    if unit not in labels or c.degree(unit) != 0:
        check.fail({"counit": unit})
    if c.regime == SIMPLY_CONNECTED:
        for label in c.reduced_labels:
            if c.degree(label) < 2:
                check.fail({"label": label, "degree": c.degree(label)})
    results.append(check)

    check = CheckResult("counit")
    for x in labels:
        left, right = {}, {}
        for (a, b), coef in c.delta(x).items():
            if a == unit:
                vec_add(left, {b: coef})
            if b == unit:
                vec_add(right, {a: coef})
        if left != {x: ONE} or right != {x: ONE}:
            check.fail({"label": x})
    results.append(check)

    check = CheckResult("coassociativity")
    for x in labels:
        first: dict = {}
        second: dict = {}
        for (a, b), coef in c.delta(x).items():
            for (a1, a2), c1 in c.delta(a).items():
                _tensor_add(first, (a1, a2, b), coef * c1)
            for (b1, b2), c2 in c.delta(b).items():
                _tensor_add(second, (a, b1, b2), coef * c2)
        if first != second:
            diff = vec_add(dict(first), second, -ONE)
            check.fail({"label": x, "triple": list(next(iter(diff)))})
    results.append(check)

    check = CheckResult("cocommutativity")
    for x in labels:
        flipped: dict = {}
        for (a, b), coef in c.delta(x).items():
            _tensor_add(flipped, (b, a), coef * sign_of(c.degree(a) * c.degree(b)))
        if flipped != c.delta(x):
            check.fail({"label": x})
    results.append(check)

    check = CheckResult("differential")
    for x in labels:
        for y in c.d(x):
            if c.degree(y) != c.degree(x) - 1:
                check.fail({"label": x, "image": y, "reason": "degree"})
        square: dict = {}
        for y, coef in c.d(x).items():
            vec_add(square, c.d(y), coef)
        if square:
            check.fail({"label": x, "reason": "d∘d ≠ 0"})
    results.append(check)

    check = CheckResult("coderivation")
    for x in labels:
        lhs: dict = {}
        for y, coef in c.d(x).items():
            vec_add(lhs, c.delta(y), coef)
        rhs: dict = {}
        for (a, b), coef in c.delta(x).items():
            for a1, c1 in c.d(a).items():
                _tensor_add(rhs, (a1, b), coef * c1)
            for b1, c2 in c.d(b).items():
                _tensor_add(rhs, (a, b1), coef * c2 * sign_of(c.degree(a)))
        if lhs != rhs:
            check.fail({"label": x})
    results.append(check)

    if c.has_pairing:
        results.extend(_pairing_checks(c))
    else:
        results.append(CheckResult("pairing", status="skipped"))
    return results


def _pairing_checks(c: CoalgebraModel) -> list[CheckResult]:
    labels = c.labels
    d = c.pairing_degree
    results = []

    check = CheckResult("pairing_degree")
    for (x, y), value in c.pairing.items():
        if scalar(value) and c.degree(x) + c.degree(y) != d:
            check.fail({"pair": [x, y], "degree": d})
    results.append(check)

    check = CheckResult("pairing_symmetry")
    for i, x in enumerate(labels):
        for y in labels[i:]:
            expected = sign_of(c.degree(x) * c.degree(y)) * c.pair(x, y)
            if c.pair(y, x) != expected:
                check.fail({"pair": [x, y]})
    results.append(check)

    # ⟨v′,w⟩v″ = ⟨v,w″⟩w′
    check = CheckResult("pairing_cyclicity")
    for v in labels:
        for w in labels:
            lhs: dict = {}
            for (a, b), coef in c.delta(v).items():
                value = c.pair(a, w)
                if value:
                    vec_add(lhs, {b: coef * value})
            rhs: dict = {}
            for (a, b), coef in c.delta(w).items():
                value = c.pair(v, b)
                if value:
                    vec_add(rhs, {a: coef * value})
            if lhs != rhs:
                check.fail({"pair": [v, w]})
    results.append(check)

    # ⟨du,v⟩ = (−1)^{|u|}⟨u,dv⟩
    check = CheckResult("pairing_dg")
    for u in labels:
        for v in labels:
            lhs = sum((coef * c.pair(y, v) for y, coef in c.d(u).items()), ZERO)
            rhs = sum((coef * c.pair(u, y) for y, coef in c.d(v).items()), ZERO)
            if lhs != sign_of(c.degree(u)) * rhs:
                check.fail({"pair": [u, v]})
    results.append(check)

    check = CheckResult("pairing_nondegenerate")
    index = {label: i for i, label in enumerate(labels)}
    rows = [{index[y]: c.pair(x, y) for y in labels if c.pair(x, y)} for x in labels]
    rank = span_rank(rows, len(labels))
    if rank != len(labels):
        check.fail({"rank": rank, "dim": len(labels)})
    results.append(check)
    return results


# ─── 余バー構成 ───

class CobarAlgebra(TensorAlgebra):
    """R = Ω(C)。生成元 s⁻¹c（c ∈ C̄）と導分としての余バー微分を持つ"""

    def __init__(self, model: CoalgebraModel):
        self.model = model
        generators = []
        for label in model.reduced_labels:
            name = model.generator_names.get(label, f"s⁻¹{label}")
            generators.append(Generator(name, model.degree(label) - 1, label))
        super().__init__(generators)
        self.generator_of = {g.source: i for i, g in enumerate(self.generators)}
        self._d_generators = [self._d_generator(g.source) for g in self.generators]
        self._d_blocks: dict = {}
        self._check_square_zero()

    def iota(self, label: str) -> dict:
        """普遍ねじれ余鎖 ι: C → R（ι(1) = 0）"""
        if label == self.model.counit_label:
            return {}
        return {(self.generator_of[label],): ONE}

    def _d_generator(self, label: str) -> dict:
        model = self.model
        result: dict = {}
        for target, coef in model.d(label).items():
            if target != model.counit_label:
                vec_add(result, {(self.generator_of[target],): -coef})
        for (a, b), coef in model.reduced_delta(label).items():
            word = (self.generator_of[a], self.generator_of[b])
            vec_add(result, {word: coef * sign_of(model.degree(a))})
        return result

    def differential(self, element: dict) -> dict:
        """次数 −1 の導分として d を語の線形結合に作用させる"""
        result: dict = {}
        for word, coef in element.items():
            prefix_degree = 0
            for position, letter in enumerate(word):
                image = self._d_generators[letter]
                if image:
                    factor = coef * sign_of(prefix_degree)
                    head, tail = word[:position], word[position + 1:]
                    for middle, c2 in image.items():
                        vec_add(result, {head + middle + tail: factor * c2})
                prefix_degree += self.degrees[letter]
        return result

    def differential_columns(self, n: int) -> list[dict]:
        """d: R_n → R_{n−1} の列ベクトル（R_{n−1} 座標）"""
        if n not in self._d_blocks:
            self._d_blocks[n] = [
                self.to_vector(self.differential({w: ONE}), n - 1) for w in self.words(n)
            ]
        return self._d_blocks[n]

    def _check_square_zero(self) -> None:
        for i, g in enumerate(self.generators):
            square = self.differential(self.differential({(i,): ONE}))
            if square:
                raise D2NonZero(
                    f"余バー微分が生成元 {g.label} で d² ≠ 0", witness=g.label
                )


def cobar(c: CoalgebraModel) -> CobarAlgebra:
    """余バー構成。レジーム (i) 以外は RegimeViolation"""
    low = [x for x in c.reduced_labels if c.degree(x) <= 1]
    if c.regime != SIMPLY_CONNECTED or low:
        raise RegimeViolation(
            f"モデル {c.name} は単連結ではありません（次数 ≤ 1 の元: {low}）",
            witness=low,
        )
    algebra = CobarAlgebra(c)
    LOGGER.debug(
        "余バー構成 %s: 生成元 %s",
        c.name,
        [(g.label, g.degree) for g in algebra.generators],
    )
    return algebra


# ─── L∞ 代数 ───

@dataclass
class LInfinityModel:
    """有限次元 L∞ 代数

    operations は 𝔤[1] 上の次数付き対称形 l_k で持つ:
    昇順の添字タプル → {出力添字: 係数}。
    """

    name: str
    basis: tuple
    operations: dict = field(default_factory=dict)
    nilpotency_bound: int | None = None
    arity_bound: int | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def shifted(self) -> list[int]:
        return [b.degree + 1 for b in self.basis]

    @property
    def max_arity(self) -> int:
        return self.arity_bound or self.dim + 1

    @property
    def is_ordinary(self) -> bool:
        return all(b.degree == 0 for b in self.basis)

    def operation(self, indices) -> dict:
        """l_k(e_{i1},…,e_{ik})（並べ替えの Koszul 符号込み）"""
        indices = list(indices)
        order = sorted(range(len(indices)), key=lambda k: indices[k])
        key = tuple(indices[k] for k in order)
        value = self.operations.get(key)
        if not value:
            return {}
        sign = koszul_sign(order, [self.shifted[i] for i in indices])
        return {j: sign * scalar(c) for j, c in value.items() if c}

    def apply(self, vectors: list[dict]) -> dict:
        """l_k をベクトルに多重線形に作用させる"""
        result: dict = {}
        for combo in itertools.product(*[list(v.items()) for v in vectors]):
            coef = ONE
            for _, c in combo:
                coef *= c
            vec_add(result, self.operation([i for i, _ in combo]), coef)
        return result

    def arities(self) -> list[int]:
        return sorted({len(k) for k, v in self.operations.items() if v})

    def zeroed(self, arity: int) -> "LInfinityModel":
        """arity の演算表を 0 にした部分データ"""
        kept = {k: v for k, v in self.operations.items() if len(k) != arity}
        return LInfinityModel(self.name, self.basis, kept, self.nilpotency_bound, self.arity_bound)


def ordinary_lie(name: str, labels: list[str], brackets: dict, bound: int | None = None) -> LInfinityModel:
    """通常の Lie 代数 [e_i, e_j] = Σ c e_k（i < j）から L∞ モデルを作る"""
    basis = tuple(BasisElement(label, 0) for label in labels)
    index = {label: i for i, label in enumerate(labels)}
    operations = {}
    for (a, b), images in brackets.items():
        i, j = index[a], index[b]
        value = {index[k]: scalar(v) for k, v in images.items()}
        if i > j:
            i, j = j, i
            value = {k: -v for k, v in value.items()}
        operations[(i, j)] = value
    return LInfinityModel(name, basis, operations, bound)


def lower_central_series(g: LInfinityModel, length: int) -> list[list[dict]]:
    """F^1, …, F^length の基底（rref 済み）を返す。F[r-1] が F^r"""
    dim = g.dim
    layers: list[list[dict]] = [[{i: ONE} for i in range(dim)]]
    arities = [k for k in g.arities() if k >= 2]
    for r in range(2, length + 1):
        spanning: list[dict] = []
        for k in arities:
            for parts in _compositions(r, k):
                bases = [layers[i - 1] for i in parts]
                if any(not b for b in bases):
                    continue
                for vectors in itertools.product(*bases):
                    value = g.apply(list(vectors))
                    if value:
                        spanning.append(value)
        layers.append(rref_rows(spanning, dim)[0] if spanning else [])
    return layers


def _compositions(total: int, parts: int):
    """total を parts 個の正整数の和に分ける全通り"""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def nilpotency_index(g: LInfinityModel) -> int:
    """F^r𝔤 = 0（r 以降すべて）となる最小の r"""
    bound = g.nilpotency_bound or g.dim + 1
    length = max(bound, 2) * max(g.max_arity, 2)
    layers = lower_central_series(g, length)
    nonzero = [r for r in range(1, length + 1) if layers[r - 1]]
    index = max(nonzero) + 1 if nonzero else 1
    if g.dim == 0:
        return 1
    if index > bound:
        raise NotNilpotent(
            f"{g.name}: 下降中心列が上限 {bound} までに消えません（F^{index - 1} ≠ 0）",
            witness=index - 1,
        )
    return index


# ─── Chevalley–Eilenberg 構成 ───

def sym_multiply(a: tuple, b: tuple, shifted: list[int]):
    """Sym(𝔤[1]) の単項式の積。(符号, 単項式) か、奇元の重複で 0 なら None"""
    combined = a + b
    order = sorted(range(len(combined)), key=lambda k: combined[k])
    result = tuple(combined[k] for k in order)
    for x, y in zip(result, result[1:]):
        if x == y and shifted[x] % 2:
            return None
    return koszul_sign(order, [shifted[x] for x in combined]), result


def _ce_monomials(g: LInfinityModel, arity: int) -> list[tuple]:
    shifted = g.shifted
    found = []
    for k in range(arity + 1):
        for combo in itertools.combinations_with_replacement(range(g.dim), k):
            if any(x == y and shifted[x] % 2 for x, y in zip(combo, combo[1:])):
                continue
            found.append(combo)
    return found


def _monomial_label(g: LInfinityModel, monomial: tuple) -> str:
    if not monomial:
        return "1"
    return "∧".join(g.basis[i].label for i in monomial)


def ce_chains(g: LInfinityModel, arity: int | None = None) -> CoalgebraModel:
    """Chevalley–Eilenberg 鎖余代数 Sym^c(𝔤[1])（単項式の長さ arity で打ち切り）"""
    shifted = g.shifted
    arity = arity if arity is not None else g.dim
    monomials = _ce_monomials(g, arity)
    label = {m: _monomial_label(g, m) for m in monomials}
    basis = tuple(BasisElement(label[m], sum(shifted[i] for i in m)) for m in monomials)

    coproduct = {}
    for m in monomials:
        terms: dict = {}
        degrees = [shifted[i] for i in m]
        for mask in range(1 << len(m)):
            left = [k for k in range(len(m)) if mask >> k & 1]
            right = [k for k in range(len(m)) if not mask >> k & 1]
            sign = koszul_sign(left + right, degrees)
            key = (label[tuple(m[k] for k in left)], label[tuple(m[k] for k in right)])
            vec_add(terms, {key: sign})
        coproduct[label[m]] = [(a, b, c) for (a, b), c in terms.items()]

    differential = {}
    for m in monomials:
        image: dict = {}
        degrees = [shifted[i] for i in m]
        for mask in range(1, 1 << len(m)):
            chosen = [k for k in range(len(m)) if mask >> k & 1]
            if len(chosen) > g.max_arity:
                continue
            rest = [k for k in range(len(m)) if not mask >> k & 1]
            value = g.operation([m[k] for k in chosen])
            if not value:
                continue
            sign = koszul_sign(chosen + rest, degrees)
            tail = tuple(m[k] for k in rest)
            for j, coef in value.items():
                product = sym_multiply((j,), tail, shifted)
                if product is None:
                    continue
                s2, monomial = product
                if monomial in label:
                    vec_add(image, {label[monomial]: sign * s2 * coef})
        differential[label[m]] = [(y, c) for y, c in image.items()]

    model = CoalgebraModel(
        name=f"CE({g.name})",
        basis=basis,
        counit_label="1",
        coproduct=coproduct,
        differential=differential,
        regime=CLASSICAL_LIE if g.is_ordinary else SIMPLY_CONNECTED,
        lie=g,
    )
    for x in model.labels:
        square: dict = {}
        for y, coef in model.d(x).items():
            vec_add(square, model.d(y), coef)
        if square:
            raise LInfinityRelationsFail(
                f"{g.name}: CE 微分が次数 {model.degree(x)} で d² ≠ 0",
                witness=model.degree(x),
            )
    return model


def ce_wedge_pairing(g: LInfinityModel) -> CoalgebraModel:
    """通常の冪零 Lie 代数の CE 鎖余代数に楔積ペアリング（体積形式の係数）を載せる"""
    if not g.is_ordinary:
        raise RegimeViolation(f"{g.name} は通常の Lie 代数ではありません")
    nilpotency_index(g)
    model = ce_chains(g, g.dim)
    shifted = g.shifted
    top = tuple(range(g.dim))
    monomials = _ce_monomials(g, g.dim)
    pairing = {}
    for a in monomials:
        for b in monomials:
            if len(a) + len(b) != g.dim:
                continue
            product = sym_multiply(a, b, shifted)
            if product is not None and product[1] == top:
                pairing[(_monomial_label(g, a), _monomial_label(g, b))] = product[0]
    model.name = g.name
    model.pairing = pairing
    model.pairing_degree = g.dim
    failed = [r.name for r in _pairing_checks(model) if r.status == FAIL]
    if "pairing_nondegenerate" in failed:
        raise DegeneratePairing(f"{g.name}: 楔積ペアリングが退化しています", witness=failed)
    if failed:
        raise DegeneratePairing(f"{g.name}: 楔積ペアリングが公理を満たしません（{', '.join(failed)}）", witness=failed)
    return model


def describe_pairing(c: CoalgebraModel) -> list[str]:
    return [f"⟨{x},{y}⟩ = {scalar_text(v)}" for (x, y), v in sorted(c.pairing.items()) if scalar(v)]
