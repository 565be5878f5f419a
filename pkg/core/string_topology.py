"""弦トポロジー演算モジュール

巡回ペアリングから作る Van den Bergh 双対 Ψ: R⊗E → R⊗C、ネックレス二重括弧、
カップ積・ループ積・Gerstenhaber 括弧・BV 作用素、および巡回ホモロジーの
Hochschild ホモロジーへの作用を、代表サイクル上で計算してホモロジー座標に落とす。

Ψ の Koszul 符号は決め打ちせず、候補の規則を順に試して
2 つの微分を（符号 ±1 を除いて）絡めるものを採用する。
"""

import logging
from dataclasses import dataclass, field
from typing import Callable

from .errors import DegeneratePairing, HomologySolveError
from .exact import ONE, matrix_from_rows, rows_of, scalar_text, span_rank, vec_add
from .graded import sign_of
from .report import CONVENTION, FAIL, PASS
from theories.operators import connes_B_element, map_I_element

LOGGER = logging.getLogger(__name__)

# (名前, 指数(|r|, |e|, d))。Ψ(r⊗e^a) に掛ける符号は (−1)^指数
SIGN_RULES: list[tuple[str, Callable[[int, int, int], int]]] = [
    ("plain", lambda r, e, d: 0),
    ("r*d", lambda r, e, d: r * d),
    ("r*e", lambda r, e, d: r * e),
    ("r*(d+e)", lambda r, e, d: r * (d + e)),
    ("e", lambda r, e, d: e),
    ("e*d", lambda r, e, d: e * d),
    ("r*e+e", lambda r, e, d: r * e + e),
    ("r*d+e", lambda r, e, d: r * d + e),
]

# right: ⟨φ(e), x⟩ = e(x)、left: ⟨x, φ(e)⟩ = e(x)
VARIANTS = ("right", "left")


class PairingDual:
    """Gram 行列 G_{xy} = ⟨x,y⟩ から解いた φ: E → C と φ⁻¹"""

    def __init__(self, model, variant: str = "right"):
        if variant not in VARIANTS:
            raise ValueError(f"未知の向き: {variant}")
        if not model.has_pairing:
            raise DegeneratePairing(f"モデル {model.name} にペアリングがありません", witness=model.name)
        self.model = model
        self.variant = variant
        labels = model.labels
        self.labels = labels
        n = len(labels)
        # inverse_rows[a] = φ⁻¹ の行: φ⁻¹(c_b) = Σ_a M[a][b] e^a
        if variant == "right":
            rows = [{j: model.pair(y, x) for j, y in enumerate(labels) if model.pair(y, x)} for x in labels]
        else:
            rows = [{j: model.pair(x, y) for j, y in enumerate(labels) if model.pair(x, y)} for x in labels]
        if span_rank(rows, n) != n:
            raise DegeneratePairing(f"モデル {model.name} のペアリングが退化しています", witness=model.name)
        self._inverse_rows = rows
        forward = rows_of(matrix_from_rows(rows, n).to_dense().inv())
        # φ(e^a) = Σ_b N[b][a] c_b
        self._phi = {labels[a]: {} for a in range(n)}
        for b, row in enumerate(forward):
            for a, value in row.items():
                self._phi[labels[a]][labels[b]] = value
        self._phi_inverse = {labels[b]: {} for b in range(n)}
        for a, row in enumerate(rows):
            for b, value in row.items():
                self._phi_inverse[labels[b]][labels[a]] = value

    def phi(self, label: str) -> dict:
        """φ(e^label) = {C のラベル: 係数}"""
        return self._phi[label]

    def phi_inverse(self, label: str) -> dict:
        """φ⁻¹(c_label) = {E の双対基底ラベル: 係数}"""
        return self._phi_inverse[label]

    def check(self) -> list:
        """⟨φ(e), x⟩ = e(x)（left 向きは ⟨x, φ(e)⟩）が崩れる組"""
        bad = []
        for a in self.labels:
            for x in self.labels:
                if self.variant == "right":
                    value = sum((c * self.model.pair(b, x) for b, c in self.phi(a).items()), 0)
                else:
                    value = sum((c * self.model.pair(x, b) for b, c in self.phi(a).items()), 0)
                if value != (ONE if a == x else 0):
                    bad.append((a, x))
        return bad


class VanDenBerghDuality:
    """Ψ = Id_R ⊗ φ（符号規則つき）とその逆"""

    def __init__(self, engines, candidates: list | None = None):
        self.engines = engines
        self.algebra = engines.algebra
        self.model = engines.model
        self.d = self.model.pairing_degree or 0
        self.dual: PairingDual | None = None
        self.rule_name = ""
        self._rule = None
        self.chain_sign = ONE
        self._select(candidates or [(v, r) for v in VARIANTS for r in SIGN_RULES])

    def _sigma(self, word: tuple, label: str):
        return sign_of(self._rule(self.algebra.word_degree(word), self.model.degree(label), self.d))

    def coefficient(self, word: tuple, label: str, a: str):
        """Ψ⁻¹(word⊗c_label) の (word, e^a) 成分（符号規則込みのペアリング）"""
        value = self.dual.phi_inverse(label).get(a, 0)
        return value * self._sigma(word, a) if value else 0

    def resign(self, old: tuple, new: tuple, label: str):
        """φ⁻¹(c_label) の成分 e^a（|a| = d − |label|）で語を old → new に替えたときの符号比"""
        degree = self.d - self.model.degree(label)
        deg = self.algebra.word_degree
        return sign_of(self._rule(deg(old), degree, self.d) + self._rule(deg(new), degree, self.d))

    def psi(self, element: dict) -> dict:
        """R⊗E の元 → R⊗C の元（次数 +d）"""
        result: dict = {}
        for (word, a), coef in element.items():
            factor = coef * self._sigma(word, a)
            for b, value in self.dual.phi(a).items():
                vec_add(result, {(word, b): factor * value})
        return result

    def psi_inverse(self, element: dict) -> dict:
        result: dict = {}
        for (word, b), coef in element.items():
            for a, value in self.dual.phi_inverse(b).items():
                vec_add(result, {(word, a): coef * value * self._sigma(word, a)})
        return result

    def _intertwines(self) -> object | None:
        """全余鎖基底で ∂_hh Ψ = s·Ψ ∂_coh となる共通の s（無ければ None）"""
        hh, coh = self.engines.hh, self.engines.hhcoh
        found = None
        for n in coh.degree_range():
            for key in coh.basis(n):
                lhs = hh.boundary_element(self.psi({key: ONE}))
                rhs = self.psi(coh.boundary_element({key: ONE}))
                if not lhs and not rhs:
                    continue
                if lhs == rhs:
                    s = ONE
                elif lhs == {k: -v for k, v in rhs.items()}:
                    s = -ONE
                else:
                    return None
                if found is not None and s != found:
                    return None
                found = s
        return found if found is not None else ONE

    def _select(self, candidates: list) -> None:
        duals = {}
        for variant, (name, rule) in candidates:
            if variant not in duals:
                duals[variant] = PairingDual(self.model, variant)
            self.dual, self.rule_name, self._rule = duals[variant], f"{variant}:{name}", rule
            s = self._intertwines()
            if s is not None:
                self.chain_sign = s
                LOGGER.debug("Ψ の符号規則 %s（∂Ψ = %s·Ψ∂）", self.rule_name, scalar_text(s))
                return
        raise HomologySolveError(
            f"モデル {self.model.name}: 微分を絡める Ψ の符号規則が見つかりません",
            witness=[f"{v}:{r[0]}" for v, r in candidates],
        )

    # ─── ベクトル版 ───

    def psi_vector(self, n: int, vector: dict) -> dict:
        """余鎖次数 n → Hochschild 次数 n + d"""
        element = self.engines.hhcoh.from_vector(vector, n)
        return self.engines.hh.to_vector(self.psi(element), n + self.d)

    def psi_inverse_vector(self, n: int, vector: dict) -> dict:
        element = self.engines.hh.from_vector(vector, n)
        return self.engines.hhcoh.to_vector(self.psi_inverse(element), n - self.d)


def duality(engines) -> VanDenBerghDuality:
    """エンジン束ごとに一度だけ Ψ を作る"""
    cached = getattr(engines, "_duality", None)
    if cached is None:
        cached = VanDenBerghDuality(engines)
        engines._duality = cached
    return cached


# ─── ネックレス二重括弧 ───

def _rotation(algebra, word: tuple, i: int) -> tuple[object, tuple]:
    """w = ε·(w_i w_{i+1} … w_{i−1}) の ε と、w_i を除いた残り w_{>i} w_{<i}"""
    sign = sign_of(algebra.word_degree(word[:i]) * algebra.word_degree(word[i:]))
    return sign, word[i + 1:] + word[:i]


def _necklace_terms(algebra, model, first: tuple, second: tuple):
    """(i, j, 係数, A, B) を列挙する。A, B は v_i, w_j を除いた回転"""
    d = model.pairing_degree or 0
    for i, v in enumerate(first):
        eps_a, rest_a = _rotation(algebra, first, i)
        for j, w in enumerate(second):
            value = model.pair(algebra.generators[v].source, algebra.generators[w].source)
            if not value:
                continue
            eps_b, rest_b = _rotation(algebra, second, j)
            exponent = algebra.word_degree(rest_a) * (algebra.degrees[w] + d) + algebra.degrees[v] * d
            yield i, j, eps_a * eps_b * sign_of(exponent) * value, rest_a, rest_b


def double_bracket(algebra, model, first: tuple, second: tuple) -> dict:
    """{{v, w}} = Σ ±⟨sv_i, sw_j⟩ (w_{<j} v_{>i}) ⊗ (v_{<i} w_{>j})"""
    result: dict = {}
    for i, j, coef, _, _ in _necklace_terms(algebra, model, first, second):
        left = second[:j] + first[i + 1:]
        right = first[:i] + second[j + 1:]
        head = algebra.word_degree(second[:j])
        # ♮μ{{v,w}} が括弧 A·B の回転に一致するように合わせる
        middle = algebra.word_degree(first[i + 1:] + first[:i]) + algebra.word_degree(second[j + 1:])
        vec_add(result, {(left, right): coef * sign_of(head * middle)})
    return result


def double_bracket_element(algebra, model, first: dict, second: dict) -> dict:
    result: dict = {}
    for w1, c1 in first.items():
        for w2, c2 in second.items():
            vec_add(result, double_bracket(algebra, model, w1, w2), c1 * c2)
    return result


def necklace_bracket_element(algebra, model, first: dict, second: dict) -> dict:
    """R の元どうしのネックレス括弧（♮ 射影前の代表元）"""
    result: dict = {}
    for w1, c1 in first.items():
        for w2, c2 in second.items():
            for _, _, coef, rest_a, rest_b in _necklace_terms(algebra, model, w1, w2):
                vec_add(result, {rest_a + rest_b: c1 * c2 * coef})
    return result


def bracket_degree(model) -> int:
    return 2 - (model.pairing_degree or 0)


def necklace_bracket(engines, n1: int, x: dict, n2: int, y: dict) -> tuple[int, dict]:
    """R_♮ のベクトルどうしの括弧。戻り値は (次数, R_♮ ベクトル)"""
    hc = engines.hc
    n = n1 + n2 + bracket_degree(engines.model)
    element = necklace_bracket_element(
        engines.algebra, engines.model, hc.from_vector(x, n1), hc.from_vector(y, n2)
    )
    return n, hc.project(element, n)


# ─── 余鎖の演算 ───

def cup(engines, f: dict, g: dict) -> dict:
    return engines.hhcoh.convolve(f, g)


def _circle(engines, f: dict, g: dict) -> dict:
    """f∘g: f の語で出力 e^b に対応する文字を g の語で置き換える"""
    algebra, model = engines.algebra, engines.model
    coh = engines.hhcoh
    result: dict = {}
    for (w2, b), c2 in g.items():
        if b == model.counit_label:
            continue
        letter = algebra.generator_of[b]
        g_degree = coh.key_degree((w2, b))
        for (w1, a), c1 in f.items():
            prefix = 0
            for j, x in enumerate(w1):
                if x == letter:
                    sign = sign_of((g_degree + 1) * prefix)
                    vec_add(result, {(w1[:j] + w2 + w1[j + 1:], a): c1 * c2 * sign})
                prefix += algebra.degrees[x]
    return result


def _element_degree(theory, element: dict) -> int:
    degrees = {theory.key_degree(k) for k in element}
    if len(degrees) > 1:
        raise ValueError(f"斉次でない元です（次数 {sorted(degrees)}）")
    return degrees.pop() if degrees else 0


def gerstenhaber(engines, f: dict, g: dict) -> dict:
    """[f, g]_G = f∘g − (−1)^{(|f|+1)(|g|+1)} g∘f"""
    coh = engines.hhcoh
    if not f or not g:
        return {}
    fd, gd = _element_degree(coh, f), _element_degree(coh, g)
    result = _circle(engines, f, g)
    return vec_add(result, _circle(engines, g, f), -sign_of((fd + 1) * (gd + 1)))


# ─── 合成演算（ベクトル版） ───

def string_bracket(engines, n1: int, x: dict, n2: int, y: dict) -> tuple[int, dict]:
    """I Ψ(Ψ⁻¹B(x) ∪ Ψ⁻¹B(y))"""
    dual = duality(engines)
    hc = engines.hc
    left = dual.psi_inverse(connes_B_element(engines.algebra, hc.from_vector(x, n1)))
    right = dual.psi_inverse(connes_B_element(engines.algebra, hc.from_vector(y, n2)))
    product = dual.psi(cup(engines, left, right))
    n = n1 + n2 + bracket_degree(engines.model)
    return n, hc.project(map_I_element(engines.model, product), n)


def loop_product(engines, n1: int, a: dict, n2: int, b: dict) -> tuple[int, dict]:
    """Ψ(Ψ⁻¹a ∪ Ψ⁻¹b)。次数 −d"""
    dual = duality(engines)
    hh = engines.hh
    product = cup(engines, dual.psi_inverse(hh.from_vector(a, n1)), dual.psi_inverse(hh.from_vector(b, n2)))
    n = n1 + n2 - dual.d
    return n, hh.to_vector(dual.psi(product), n)


def loop_unit(engines) -> tuple[int, dict]:
    """余鎖の単位 1⊗e^1 の Ψ 像（次数 d）"""
    dual = duality(engines)
    return dual.d, engines.hh.to_vector(dual.psi(engines.hhcoh.unit()), dual.d)


def hh_action(engines, n1: int, x: dict, n2: int, y: dict) -> tuple[int, dict]:
    """{x, y} = Ψ([Ψ⁻¹B(x), Ψ⁻¹(y)]_G)"""
    dual = duality(engines)
    f = dual.psi_inverse(connes_B_element(engines.algebra, engines.hc.from_vector(x, n1)))
    g = dual.psi_inverse(engines.hh.from_vector(y, n2))
    n = n1 + n2 + bracket_degree(engines.model)
    return n, engines.hh.to_vector(dual.psi(gerstenhaber(engines, f, g)), n)


def hh_action_chain_element(dual: VanDenBerghDuality, first: dict, second: dict) -> dict:
    """二重括弧を R⊗C に直接作用させる計算

      {p, q⊗c} = Σ_{i,j} ±⟨sv_j, c⟩_Ψ (v_{>i} v_{<i} の v_j を q に置換) ⊗ sv_i
               − Σ_{i,k} ±⟨sv_i, su_k⟩_Ψ (u_{<k} v_{>i} v_{<i} u_{>k}) ⊗ c

    ⟨−,−⟩_Ψ は Ψ⁻¹ の成分として読むペアリング（選ばれた符号規則を含む）。
    """
    algebra, model, d = dual.algebra, dual.model, dual.d
    result: dict = {}
    for word, c1 in first.items():
        total = algebra.word_degree(word)
        for i, v in enumerate(word):
            head = algebra.word_degree(word[: i + 1])
            eps = sign_of(head * (total - head) + algebra.degrees[v])
            rest = word[i + 1:] + word[:i]
            source = algebra.generators[v].source
            f_degree = algebra.word_degree(rest) - (d - model.degree(source))
            for (q, c), c2 in second.items():
                y_degree = algebra.word_degree(q) - (d - model.degree(c))
                prefix = 0
                for j, letter in enumerate(rest):
                    value = dual.coefficient(q, c, algebra.generators[letter].source)
                    if value:
                        new = rest[:j] + q + rest[j + 1:]
                        sign = sign_of((y_degree + 1) * prefix) * dual.resign(rest, new, source)
                        vec_add(result, {(new, source): c1 * c2 * eps * sign * value})
                    prefix += algebra.degrees[letter]
                twist = -sign_of((f_degree + 1) * (y_degree + 1))
                prefix = 0
                for k, letter in enumerate(q):
                    value = dual.coefficient(rest, source, algebra.generators[letter].source)
                    if value:
                        new = q[:k] + rest + q[k + 1:]
                        sign = sign_of((f_degree + 1) * prefix) * dual.resign(q, new, c)
                        vec_add(result, {(new, c): c1 * c2 * eps * twist * sign * value})
                    prefix += algebra.degrees[letter]
    return result


def hh_action_chain(engines, n1: int, x: dict, n2: int, y: dict) -> tuple[int, dict]:
    element = hh_action_chain_element(
        duality(engines), engines.hc.from_vector(x, n1), engines.hh.from_vector(y, n2)
    )
    n = n1 + n2 + bracket_degree(engines.model)
    return n, engines.hh.to_vector(element, n)


def bv_delta_element(engines, f: dict) -> dict:
    """Δ = Ψ⁻¹ B I Ψ（余鎖次数 +1）"""
    dual = duality(engines)
    cyclic = map_I_element(engines.model, dual.psi(f))
    return dual.psi_inverse(connes_B_element(engines.algebra, cyclic))


def bv_delta(engines, n: int, f: dict) -> tuple[int, dict]:
    coh = engines.hhcoh
    return n + 1, coh.to_vector(bv_delta_element(engines, coh.from_vector(f, n)), n + 1)


def cup_vectors(engines, n1: int, f: dict, n2: int, g: dict) -> tuple[int, dict]:
    coh = engines.hhcoh
    return n1 + n2, coh.to_vector(cup(engines, coh.from_vector(f, n1), coh.from_vector(g, n2)), n1 + n2)


def gerstenhaber_vectors(engines, n1: int, f: dict, n2: int, g: dict) -> tuple[int, dict]:
    coh = engines.hhcoh
    n = n1 + n2 + 1
    return n, coh.to_vector(gerstenhaber(engines, coh.from_vector(f, n1), coh.from_vector(g, n2)), n)


def leibniz_B(engines, n1: int, x: dict, n2: int, y: dict) -> tuple[int, dict]:
    """B{x, y}（Hochschild 側の値）"""
    n, value = necklace_bracket(engines, n1, x, n2, y)
    element = connes_B_element(engines.algebra, engines.hc.from_vector(value, n))
    return n + 1, engines.hh.to_vector(element, n + 1)


def leibniz_G(engines, n1: int, x: dict, n2: int, y: dict) -> tuple[int, dict]:
    """Ψ[Ψ⁻¹B(x), Ψ⁻¹B(y)]_G"""
    dual = duality(engines)
    hc = engines.hc
    f = dual.psi_inverse(connes_B_element(engines.algebra, hc.from_vector(x, n1)))
    g = dual.psi_inverse(connes_B_element(engines.algebra, hc.from_vector(y, n2)))
    n = n1 + n2 + bracket_degree(engines.model) + 1
    return n, engines.hh.to_vector(dual.psi(gerstenhaber(engines, f, g)), n)


# ─── 構造定数表 ───

# 種類 → (第 1 因子, 第 2 因子, 値の理論, 演算)
OPERATIONS = {
    "string": ("hc", "hc", "hc", string_bracket),
    "necklace": ("hc", "hc", "hc", necklace_bracket),
    "action": ("hc", "hh", "hh", hh_action),
    "action-chain": ("hc", "hh", "hh", hh_action_chain),
    "loop": ("hh", "hh", "hh", loop_product),
    "cup": ("hhcoh", "hhcoh", "hhcoh", cup_vectors),
    "gerstenhaber": ("hhcoh", "hhcoh", "hhcoh", gerstenhaber_vectors),
    "leibniz-B": ("hc", "hc", "hh", leibniz_B),
    "leibniz-G": ("hc", "hc", "hh", leibniz_G),
}

# CLI の bracket サブコマンドが受け付ける種類
BRACKET_KINDS = {"string": "string", "action": "action", "loop": "loop"}


def degree_shift(engines, kind: str) -> int:
    d = engines.model.pairing_degree or 0
    return {
        "string": 2 - d,
        "necklace": 2 - d,
        "action": 2 - d,
        "action-chain": 2 - d,
        "loop": -d,
        "cup": 0,
        "gerstenhaber": 1,
        "leibniz-B": 3 - d,
        "leibniz-G": 3 - d,
    }[kind]


@dataclass
class BracketTable:
    """ホモロジー基底上の構造定数 c^k_{ij}"""

    kind: str
    model: str
    shift: int
    entries: dict = field(default_factory=dict)   # (左の tag, 右の tag) → {値の tag: 係数}
    sources: dict = field(default_factory=dict)   # tag → (次数, 重み)
    targets: dict = field(default_factory=dict)   # tag → (次数, 重み)
    pairs: int = 0

    def nonzero(self) -> dict:
        return {k: v for k, v in self.entries.items() if v}

    def weight_violations(self, drop: int = 2) -> list:
        """値の重みが p + q − drop でない項"""
        bad = []
        for (left, right), values in self.nonzero().items():
            expected = self.sources[left][1] + self.sources[right][1] - drop
            for tag in values:
                if self.targets[tag][1] != expected:
                    bad.append({"pair": [left, right], "target": tag, "expected_weight": expected})
        return bad

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "model": self.model,
            "shift": self.shift,
            "pairs": self.pairs,
            "entries": [
                {
                    "left": left,
                    "right": right,
                    "values": {tag: scalar_text(c) for tag, c in values.items()},
                }
                for (left, right), values in sorted(self.nonzero().items())
            ],
        }


def class_pairs(engines, kind: str) -> list[tuple]:
    """表に現れる (左の類, 右の類) の組（値の次数が窓に入るものだけ）"""
    first_kind, second_kind, target_kind, _ = OPERATIONS[kind]
    first, second, target = (engines.theory(k) for k in (first_kind, second_kind, target_kind))
    shift = degree_shift(engines, kind)
    pairs = []
    for n1 in first.degree_range():
        left = first.classes(n1)
        if not left:
            continue
        for n2 in second.degree_range():
            if n1 + n2 + shift not in target.degree_range():
                continue
            for x in left:
                for y in second.classes(n2):
                    pairs.append((x, y))
    return pairs


def evaluate_pair(engines, kind: str, x, y) -> tuple[int, dict]:
    """類の組に演算を施し、値をホモロジー座標 {類番号: 係数} で返す"""
    _, _, target_kind, operation = OPERATIONS[kind]
    n, vector = operation(engines, x.degree, x.vector, y.degree, y.vector)
    return n, engines.theory(target_kind).coordinates(n, vector)


def bracket_table(engines, kind: str, pairs: list | None = None) -> BracketTable:
    """構造定数表。pairs を省くと窓の中のすべての組"""
    _, _, target_kind, _ = OPERATIONS[kind]
    target = engines.theory(target_kind)
    table = BracketTable(kind, engines.model.name, degree_shift(engines, kind))
    chosen = class_pairs(engines, kind) if pairs is None else pairs
    for x, y in chosen:
        n, values = evaluate_pair(engines, kind, x, y)
        table.sources[x.tag] = (x.degree, x.weight)
        table.sources[y.tag] = (y.degree, y.weight)
        entry = {}
        for index, coef in values.items():
            cls = target.classes(n)[index]
            table.targets[cls.tag] = (cls.degree, cls.weight)
            entry[cls.tag] = coef
        table.entries[(x.tag, y.tag)] = entry
    table.pairs = len(chosen)
    LOGGER.debug("%s 表 %s: %d 組中 %d 組が非零", kind, engines.model.name, table.pairs, len(table.nonzero()))
    return table


def compare_tables(first: BracketTable, second: BracketTable) -> tuple[str, list]:
    """pass / convention（(次数, 重み) ブロックごとの符号だけ違う）/ fail"""
    blocks: dict = {}
    witnesses = []
    for key in set(first.entries) | set(second.entries):
        a, b = first.entries.get(key, {}), second.entries.get(key, {})
        if a == b:
            continue
        left, right = key
        sources = first.sources if left in first.sources else second.sources
        block = (sources[left], sources[right])
        if a == {k: -v for k, v in b.items()}:
            blocks.setdefault(block, set()).add(-1)
        else:
            witnesses.append({"pair": list(key), "first": _text(a), "second": _text(b)})
    if witnesses:
        return FAIL, witnesses
    # 一致した組が同じブロックにあれば、そのブロックは符号反転とみなせない
    for key in set(first.entries) & set(second.entries):
        a = first.entries[key]
        if a and a == second.entries[key]:
            left, right = key
            block = (first.sources[left], first.sources[right])
            if block in blocks:
                blocks[block].add(1)
    mixed = [b for b, signs in blocks.items() if len(signs) > 1]
    if mixed:
        return FAIL, [{"block": [list(b[0]), list(b[1])], "reason": "mixed signs"} for b in mixed]
    if blocks:
        return CONVENTION, [{"block": [list(b[0]), list(b[1])], "sign": -1} for b in blocks]
    return PASS, []


def _text(values: dict) -> dict:
    return {k: scalar_text(v) for k, v in values.items()}
