"""Hochschild ホモロジーエンジン

R ⊗ C にねじれ微分
  ∂(r⊗c) = d_R r⊗c + (−1)^{|r|} r⊗d_C c
           + Σ κ [(−1)^{|r|} r·ι(c′)⊗c″ − (−1)^{|c″|(|r|+|c′|)} ι(c″)·r⊗c′]
を載せた複体。基底のキーは (語, C の基底ラベル)。
"""

import logging

from core.exact import ONE, vec_add
from core.graded import element_product, sign_of

from .base import HomologyTheory

LOGGER = logging.getLogger(__name__)


class TensorTheory(HomologyTheory):
    """R ⊗ (C または E) 型の複体の共通部分。重みは R 因子の PBW 重み"""

    def __init__(self, algebra, max_degree: int):
        super().__init__(algebra, max_degree)
        self._bases: dict[int, list] = {}

    def word_degree_for(self, n: int, label: str) -> int:
        """全次数 n のキーで label と組む語の次数"""
        raise NotImplementedError

    def key_degree(self, key) -> int:
        raise NotImplementedError

    def basis(self, n: int) -> list:
        if n not in self._bases:
            keys = []
            for label in self.model.labels:
                m = self.word_degree_for(n, label)
                if m >= 0:
                    keys.extend((word, label) for word in self.algebra.words(m))
            self._bases[n] = keys
        return self._bases[n]

    def _by_label(self, n: int, vector: dict) -> dict[str, dict]:
        """ベクトルを C 因子ごとの R_m 座標に分ける"""
        keys = self.basis(n)
        groups: dict[str, dict] = {}
        for i, coef in vector.items():
            word, label = keys[i]
            m = self.word_degree_for(n, label)
            groups.setdefault(label, {})[self.algebra.index(m)[word]] = coef
        return groups

    def weights(self, n: int) -> list[int]:
        found = set()
        for label in self.model.labels:
            m = self.word_degree_for(n, label)
            if m >= 0 and self.algebra.dim(m):
                found.update(self.algebra.weight_projectors(m).occurring())
        return sorted(found)

    def split_weights(self, n: int, vector: dict) -> dict[int, dict]:
        index = self.key_index(n)
        parts: dict[int, dict] = {}
        for label, local in self._by_label(n, vector).items():
            m = self.word_degree_for(n, label)
            words = self.algebra.words(m)
            for p, component in self.algebra.weight_projectors(m).components(local).items():
                target = parts.setdefault(p, {})
                for j, c in component.items():
                    vec_add(target, {index[(words[j], label)]: c})
        return {p: v for p, v in parts.items() if v}

    def weight_space(self, n: int, p: int) -> list[dict]:
        index = self.key_index(n)
        vectors = []
        for label in self.model.labels:
            m = self.word_degree_for(n, label)
            if m < 0 or not self.algebra.dim(m):
                continue
            words = self.algebra.words(m)
            for column in self.algebra.weight_projectors(m).basis(p):
                vectors.append({index[(words[j], label)]: c for j, c in column.items()})
        return vectors

    def key_label(self, key) -> str:
        word, label = key
        return f"{self.algebra.word_label(word)}⊗{label}"

    def weight_of_key(self, key) -> int | None:
        word, _ = key
        m = self.algebra.word_degree(word)
        return self.algebra.weight_projectors(m).weight_of({self.algebra.index(m)[word]: ONE})


class HochschildTheory(TensorTheory):
    kind = "hh"

    def get_name(self) -> str:
        return "Hochschild homology"

    def degree_range(self) -> range:
        return range(0, self.max_degree + 1)

    def word_degree_for(self, n: int, label: str) -> int:
        return n - self.model.degree(label)

    def key_degree(self, key) -> int:
        word, label = key
        return self.algebra.word_degree(word) + self.model.degree(label)

    def boundary_element(self, element: dict) -> dict:
        algebra, model = self.algebra, self.model
        result: dict = {}
        for (word, label), coef in element.items():
            r_degree = algebra.word_degree(word)
            for w2, c2 in algebra.differential({word: coef}).items():
                vec_add(result, {(w2, label): c2})
            sign = sign_of(r_degree)
            for target, c2 in model.d(label).items():
                vec_add(result, {(word, target): coef * c2 * sign})
            for (left, right), kappa in model.delta(label).items():
                iota_left = algebra.iota(left)
                if iota_left:
                    for w2, c2 in element_product({word: ONE}, iota_left).items():
                        vec_add(result, {(w2, right): coef * kappa * c2 * sign})
                iota_right = algebra.iota(right)
                if iota_right:
                    twist = sign_of(model.degree(right) * (r_degree + model.degree(left)))
                    for w2, c2 in element_product(iota_right, {word: ONE}).items():
                        vec_add(result, {(w2, left): -coef * kappa * c2 * twist})
        return result


def hochschild_space(algebra, n: int) -> HochschildTheory:
    """次数 n までの R⊗C 複体（基底は basis(n)、微分は boundary）"""
    theory = HochschildTheory(algebra, max(n, 0))
    theory.basis(n)
    return theory
