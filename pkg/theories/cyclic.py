"""巡回ホモロジーエンジン

R_♮ = R/(k·1 + [R,R]) の複体。交換子は「先頭の文字を末尾に回す」回転関係で張られる。
"""

import logging
from dataclasses import dataclass

from core.exact import ONE, Quotient, rref_rows, vec_add
from core.graded import sign_of

from .base import HomologyTheory

LOGGER = logging.getLogger(__name__)


@dataclass
class CyclicSpace:
    """(R_♮)_n の基底と商写像"""

    degree: int
    words: list          # 商の基底に選んだ語
    quotient: Quotient

    @property
    def dim(self) -> int:
        return self.quotient.rank


def rotation_relations(algebra, n: int) -> list[dict]:
    """次数 n の k·1 と交換子 a·v − (−1)^{|a||v|} v·a（a は 1 文字）"""
    if n == 0:
        return [{0: ONE}]
    index = algebra.index(n)
    relations = []
    for word in algebra.words(n):
        head, tail = word[0], word[1:]
        if not tail:
            continue
        sign = sign_of(algebra.degrees[head] * algebra.word_degree(tail))
        relation = {index[word]: ONE}
        vec_add(relation, {index[tail + (head,)]: ONE}, -sign)
        if relation:
            relations.append(relation)
    return relations


class CyclicTheory(HomologyTheory):
    kind = "hc"

    def __init__(self, algebra, max_degree: int):
        super().__init__(algebra, max_degree)
        self._spaces: dict[int, CyclicSpace] = {}

    def get_name(self) -> str:
        return "reduced cyclic homology"

    def degree_range(self) -> range:
        return range(1, self.max_degree + 1)

    def space(self, n: int) -> CyclicSpace:
        if n not in self._spaces:
            algebra = self.algebra
            quotient = Quotient(algebra.dim(n), rotation_relations(algebra, n) if n >= 0 else [])
            words = [algebra.words(n)[j] for j in quotient.complement]
            self._spaces[n] = CyclicSpace(n, words, quotient)
            LOGGER.debug("R_♮ 次数 %d: dim %d (R_%d: dim %d)", n, quotient.rank, n, algebra.dim(n))
        return self._spaces[n]

    def basis(self, n: int) -> list:
        if n < 0:
            return []
        return self.space(n).words

    def key_label(self, key) -> str:
        return f"({self.algebra.word_label(key)})♮"

    def project(self, element: dict, n: int) -> dict:
        """R の元を ♮ 射影して商座標にする"""
        if n < 0 or not element:
            return {}
        return self.space(n).quotient.project(self.algebra.to_vector(element, n))

    def to_vector(self, element: dict, n: int) -> dict:
        return self.project(element, n)

    def lift(self, vector: dict, n: int) -> dict:
        """商座標 → R_n 座標（補空間の語）"""
        return self.space(n).quotient.lift(vector)

    def boundary_element(self, element: dict) -> dict:
        return self.algebra.differential(element)

    def weights(self, n: int) -> list[int]:
        if n <= 0 or not self.dim(n):
            return []
        return self.algebra.weight_projectors(n).occurring()

    def split_weights(self, n: int, vector: dict) -> dict[int, dict]:
        components = self.algebra.weight_projectors(n).components(self.lift(vector, n))
        parts = {}
        for p, part in components.items():
            projected = self.space(n).quotient.project(part)
            if projected:
                parts[p] = projected
        return parts

    def weight_space(self, n: int, p: int) -> list[dict]:
        if n <= 0:
            return []
        quotient = self.space(n).quotient
        images = [quotient.project(col) for col in self.algebra.weight_projectors(n).basis(p)]
        images = [v for v in images if v]
        return rref_rows(images, quotient.rank)[0] if images else []


def cyclic_space(algebra, n: int) -> CyclicSpace:
    """(R_♮)_n の基底と商写像を返す"""
    return CyclicTheory(algebra, max(n, 1)).space(n)
