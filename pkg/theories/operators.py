"""B・I・Adams 作用素と、モデルごとのエンジン束

B: R_♮ → R⊗C は語の回転の和、I: R⊗C → R_♮ は Id⊗ε のあと ♮ 射影、
Ψ^k は k 重余積のあと k 重積（畳み込み冪 id^{⋆k}）。
"""

import logging
from dataclasses import dataclass

from core.coalgebra import CoalgebraModel, cobar
from core.exact import ONE, homology_at, vec_add
from core.graded import element_product, sign_of

from .base import HomologyClass, HomologyTheory
from .cochain import CochainTheory
from .cyclic import CyclicTheory
from .hochschild import HochschildTheory

LOGGER = logging.getLogger(__name__)

KINDS = ("hc", "hh", "hhcoh")

_THEORY_CLASSES = {
    "hc": CyclicTheory,
    "hh": HochschildTheory,
    "hhcoh": CochainTheory,
}


class Engines:
    """1 つのモデルと次数窓に対する R と 3 つの理論（必要になったときに作る）"""

    def __init__(self, model: CoalgebraModel, max_degree: int):
        self.model = model
        self.max_degree = max_degree
        self.algebra = cobar(model)
        self._theories: dict[str, HomologyTheory] = {}
        self._adams: dict[tuple[int, tuple], dict] = {}

    def theory(self, kind: str) -> HomologyTheory:
        if kind not in _THEORY_CLASSES:
            raise ValueError(f"未知の理論: {kind}")
        if kind not in self._theories:
            self._theories[kind] = _THEORY_CLASSES[kind](self.algebra, self.max_degree)
        return self._theories[kind]

    @property
    def hc(self) -> CyclicTheory:
        return self.theory("hc")

    @property
    def hh(self) -> HochschildTheory:
        return self.theory("hh")

    @property
    def hhcoh(self) -> CochainTheory:
        return self.theory("hhcoh")

    # ─── Adams 作用素 ───

    def adams_word(self, k: int, word: tuple) -> dict:
        """Ψ^k(w) = Σ κ Ψ^{k−1}(w′)·w″"""
        if k == 1:
            return {word: ONE}
        key = (k, word)
        if key not in self._adams:
            result: dict = {}
            for (left, right), coef in self.algebra.coproduct(word).items():
                vec_add(result, element_product(self.adams_word(k - 1, left), {right: ONE}), coef)
            self._adams[key] = result
        return self._adams[key]

    def adams_element(self, k: int, element: dict) -> dict:
        if k < 1:
            raise ValueError("Adams 作用素の添字は正の整数です")
        result: dict = {}
        for word, coef in element.items():
            vec_add(result, self.adams_word(k, word), coef)
        return result


def connes_B_element(algebra, element: dict) -> dict:
    """B(v_1…v_m) = Σ_i ±(v_{i+1}…v_m v_1…v_{i−1}) ⊗ s v_i

    符号は回転のコシュル符号 (−1)^{h(m−h)} に (−1)^{|v_i|} を掛けたもの（h は v_i までの次数和）
    """
    result: dict = {}
    for word, coef in element.items():
        total = algebra.word_degree(word)
        head_degree = 0
        for i, letter in enumerate(word):
            head_degree += algebra.degrees[letter]
            sign = sign_of(head_degree * (total - head_degree) + algebra.degrees[letter])
            rest = word[i + 1:] + word[:i]
            vec_add(result, {(rest, algebra.generators[letter].source): coef * sign})
    return result


def connes_B(engines: Engines, n: int, vector: dict) -> dict:
    """R_♮ の次数 n のベクトル → R⊗C の次数 n+1 のベクトル"""
    element = engines.hc.from_vector(vector, n)
    return engines.hh.to_vector(connes_B_element(engines.algebra, element), n + 1)


def map_I_element(model: CoalgebraModel, element: dict) -> dict:
    """(r⊗c) ↦ ε(c)·r"""
    result: dict = {}
    for (word, label), coef in element.items():
        if label == model.counit_label:
            vec_add(result, {word: coef})
    return result


def map_I(engines: Engines, n: int, vector: dict) -> dict:
    element = engines.hh.from_vector(vector, n)
    return engines.hc.project(map_I_element(engines.model, element), n)


def adams(engines: Engines, k: int, n: int, vector: dict) -> dict:
    """R_♮ 上の Ψ^k（代表元で計算して ♮ 射影）"""
    element = engines.hc.from_vector(vector, n)
    return engines.hc.project(engines.adams_element(k, element), n)


def adams_hochschild(engines: Engines, k: int, n: int, vector: dict) -> dict:
    """R⊗C 上の Ψ^k ⊗ id"""
    result: dict = {}
    for (word, label), coef in engines.hh.from_vector(vector, n).items():
        for w2, c2 in engines.adams_word(k, word).items():
            vec_add(result, {(w2, label): coef * c2})
    return engines.hh.to_vector(result, n)


@dataclass
class HomologyTable:
    """次数ごとの（重みで分けない）ホモロジー次元と代表元"""

    kind: str
    model: str
    window: range
    dims: dict
    theory: HomologyTheory

    def representatives(self, n: int) -> list[HomologyClass]:
        return self.theory.classes(n)


def homology_tables(model, window: int, kind: str, engines: Engines | None = None) -> HomologyTable:
    """kind ∈ {hc, hh, hhcoh} の次元表。次元は重み分解を使わずに直接求める"""
    engines = engines or Engines(model, window)
    theory = engines.theory(kind)
    view = theory.complex_view()
    dims = {n: homology_at(view, n).dimension for n in theory.degree_range()}
    LOGGER.debug("%s %s: %s", model.name, kind, dims)
    return HomologyTable(kind, model.name, theory.degree_range(), dims, theory)
