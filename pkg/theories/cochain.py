"""Hochschild コホモロジーエンジン

Hom^ι(C, R) ≅ R ⊗ E（E = C*）。キー (r, a) は e_a ↦ r、他の基底 ↦ 0 の余鎖 r⊗e^a を表し、
ホモロジー次数 |r| − |e_a|（コホモロジー次数を負にしたもの）を持つ。
微分は ∂f = d_R∘f − (−1)^{|f|} f∘d_C − [ι, f]、積は畳み込み
  (f⋆g)(c) = Σ κ (−1)^{|g||c′|} f(c′)·g(c″)。
"""

import logging

from core.exact import ONE, vec_add
from core.graded import element_product, sign_of

from .hochschild import TensorTheory

LOGGER = logging.getLogger(__name__)


class CochainTheory(TensorTheory):
    kind = "hhcoh"

    def __init__(self, algebra, max_degree: int):
        super().__init__(algebra, max_degree)
        model = self.model
        self.top = model.pairing_degree if model.pairing_degree is not None else max(
            (model.degree(x) for x in model.labels), default=0
        )
        # (左, 右) → [(x, κ)]: Δe_x に κ·e_左⊗e_右 が現れる
        self._hits: dict[tuple[str, str], list] = {}
        for x in model.labels:
            for pair, kappa in model.delta(x).items():
                self._hits.setdefault(pair, []).append((x, kappa))
        # a → [(b, coef)]: d e_b に coef·e_a が現れる
        self._d_into: dict[str, list] = {}
        for b in model.labels:
            for a, coef in model.d(b).items():
                self._d_into.setdefault(a, []).append((b, coef))

    def get_name(self) -> str:
        return "Hochschild cohomology"

    def degree_range(self) -> range:
        # Ψ で Hochschild の次数 0..N に対応する範囲
        return range(-self.top, self.max_degree - self.top + 1)

    def word_degree_for(self, n: int, label: str) -> int:
        return n + self.model.degree(label)

    def key_degree(self, key) -> int:
        word, label = key
        return self.algebra.word_degree(word) - self.model.degree(label)

    def key_label(self, key) -> str:
        word, label = key
        return f"{self.algebra.word_label(word)}⊗{label}*"

    def unit(self) -> dict:
        """畳み込みの単位 1⊗e^1"""
        return {((), self.model.counit_label): ONE}

    def convolve(self, left: dict, right: dict) -> dict:
        """畳み込み積（鎖レベル）"""
        model = self.model
        result: dict = {}
        for (r, a), c1 in left.items():
            for (s, b), c2 in right.items():
                hits = self._hits.get((a, b))
                if not hits:
                    continue
                g_degree = self.algebra.word_degree(s) - model.degree(b)
                sign = sign_of(g_degree * model.degree(a))
                for x, kappa in hits:
                    vec_add(result, {(r + s, x): c1 * c2 * kappa * sign})
        return result

    def iota_commutator(self, element: dict) -> dict:
        """[ι, f] = ι⋆f − (−1)^{|f|} f⋆ι"""
        algebra, model = self.algebra, self.model
        result: dict = {}
        for (word, a), coef in element.items():
            f_degree = algebra.word_degree(word) - model.degree(a)
            for (left, right), hits in self._hits.items():
                if right == a:
                    iota = algebra.iota(left)
                    if iota:
                        sign = sign_of(f_degree * model.degree(left))
                        for w2, c2 in element_product(iota, {word: ONE}).items():
                            for x, kappa in hits:
                                vec_add(result, {(w2, x): coef * kappa * c2 * sign})
                if left == a:
                    iota = algebra.iota(right)
                    if iota:
                        sign = -sign_of(f_degree) * sign_of(model.degree(a))
                        for w2, c2 in element_product({word: ONE}, iota).items():
                            for x, kappa in hits:
                                vec_add(result, {(w2, x): coef * kappa * c2 * sign})
        return result

    def boundary_element(self, element: dict) -> dict:
        algebra, model = self.algebra, self.model
        result: dict = {}
        for (word, a), coef in element.items():
            f_degree = algebra.word_degree(word) - model.degree(a)
            for w2, c2 in algebra.differential({word: coef}).items():
                vec_add(result, {(w2, a): c2})
            sign = sign_of(f_degree)
            for b, c2 in self._d_into.get(a, ()):
                vec_add(result, {(word, b): -coef * c2 * sign})
        vec_add(result, self.iota_commutator(element), -ONE)
        return result


def cochain_space(algebra, n: int) -> CochainTheory:
    """R⊗E 複体（次数 n の基底は basis(n)、積は convolve）"""
    theory = CochainTheory(algebra, max(n, 0))
    theory.basis(n)
    return theory
