"""検証スイート

モデル 1 つと次数窓に対して、公理・Adams 作用素・Hodge 分解の保存・
2 経路の一致・ループ積・BV・Todd 形式・Connes 列の B/I 部分を確かめ、
CheckResult のリストを積み上げる。組の数が予算を超えたら、
シード付きの一様標本だけを調べて "sampled" を付ける。
"""

import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from .coalgebra import CoalgebraModel, LInfinityModel, nilpotency_index, validate_model
from .errors import NecklaceError
from .exact import ONE, scalar_text, span_rank, vec_add
from .graded import sign_of
from .hodge import todd_check, verify_adams
from .report import CONVENTION, FAIL, PASS, SKIPPED, CheckResult, all_ok
from .string_topology import (
    BracketTable,
    PairingDual,
    bracket_degree,
    bracket_table,
    bv_delta,
    class_pairs,
    compare_tables,
    cup_vectors,
    double_bracket,
    duality,
    gerstenhaber_vectors,
    hh_action,
    loop_product,
    loop_unit,
    necklace_bracket,
)
from theories.operators import KINDS, Engines, connes_B, map_I

LOGGER = logging.getLogger(__name__)

SUITES = ("axioms", "adams", "hodge-containment", "poisson-cup", "action", "loop", "bv", "todd", "connes-bi")

# レジーム (ii)・L∞ モデルで意味を持つスイート
LIE_SUITES = ("axioms", "todd")

# 二重括弧の公理を調べる語の長さの上限
MAX_WORD_LENGTH = 3


def parse_suites(text: str) -> list[str]:
    if text.strip() in ("", "all"):
        return list(SUITES)
    names = [s.strip() for s in text.split(",") if s.strip()]
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"未知のスイート: {unknown}")
    return names


def sample(items: list, budget: int, seed: int) -> tuple[list, bool]:
    """予算を超えたらシード付きで一様に budget 個選ぶ（順序は元のまま）"""
    if len(items) <= budget:
        return items, False
    rng = np.random.default_rng(seed)
    chosen = np.sort(rng.choice(len(items), size=budget, replace=False))
    LOGGER.warning("%d 組のうち %d 組を標本として調べます（seed=%d）", len(items), budget, seed)
    return [items[i] for i in chosen.tolist()], True


@dataclass
class VerificationReport:
    model: str
    window: int
    suites: dict = field(default_factory=dict)   # スイート名 → [CheckResult]

    @property
    def checks(self) -> list[CheckResult]:
        return [c for results in self.suites.values() for c in results]

    @property
    def ok(self) -> bool:
        return all_ok(self.checks)

    def suite_status(self, name: str) -> str:
        results = self.suites.get(name, [])
        if not results or all(r.status == SKIPPED for r in results):
            return SKIPPED
        if any(r.status == FAIL for r in results):
            return FAIL
        if any(r.status == CONVENTION for r in results):
            return CONVENTION
        return PASS

    def to_dict(self) -> list[dict]:
        items = []
        for suite, results in self.suites.items():
            for r in results:
                data = r.to_dict()
                data["suite"] = suite
                items.append(data)
        return items


def _status_check(name: str, status: str, witnesses: list) -> CheckResult:
    check = CheckResult(name, status=status)
    check.witnesses = witnesses[:5]
    if status == CONVENTION:
        LOGGER.warning("%s: 2 経路がブロックごとの符号だけ食い違います", name)
    return check


def _block_classify(name: str, rows: list, witness_of) -> tuple[CheckResult, dict]:
    """(ブロック, lhs, rhs, witness) の列を比べる

    すべて lhs = rhs なら pass。ブロックごとに lhs = ±rhs の符号が一つに決まれば convention
    （反転したブロックを witness に残す）。それ以外は fail。戻り値の 2 つ目は {ブロック: 符号}。
    """
    signs: dict = {}
    check = CheckResult(name)
    for block, lhs, rhs, witness in rows:
        if lhs == rhs:
            if lhs:
                signs.setdefault(block, set()).add(1)
        elif lhs == {k: -v for k, v in rhs.items()}:
            signs.setdefault(block, set()).add(-1)
        else:
            check.fail(witness_of(witness, lhs, rhs))
    for block, found in signs.items():
        if len(found) > 1:
            check.fail({"block": [list(b) for b in block], "reason": "mixed signs"})
    resolved = {block: found.pop() for block, found in signs.items() if len(found) == 1}
    if check.status == FAIL:
        return check, resolved
    flipped = [block for block, sign in resolved.items() if sign < 0]
    if flipped:
        check = _status_check(name, CONVENTION, [{"block": [list(b) for b in block], "sign": -1} for block in flipped])
        check.details["flipped_blocks"] = len(flipped)
    return check, resolved


def _bv_deviation(signs: dict) -> str:
    """BV 恒等式の反転ブロックが a の次数の偶奇だけで決まるかを名前にする"""
    if all(sign < 0 for sign in signs.values()):
        return "-1"
    if all((sign < 0) == (block[0][0] % 2 == 1) for block, sign in signs.items()):
        return "(-1)^|a|"
    if all((sign < 0) == (block[0][0] % 2 == 0) for block, sign in signs.items()):
        return "-(-1)^|a|"
    return "block signs"


def _coords_text(values: dict) -> dict:
    return {str(k): scalar_text(v) for k, v in values.items()}


class Verifier:
    """1 つのモデルに対する検証。表はスイート間で共有する"""

    def __init__(self, model, max_degree: int, weight_max: int = 6, seed: int = 0, pair_budget: int = 10000):
        self.model = model
        self.max_degree = max_degree
        self.weight_max = weight_max
        self.seed = seed
        self.pair_budget = pair_budget
        self._engines: Engines | None = None
        self._pairs: dict[str, tuple[list, bool]] = {}
        self._tables: dict[str, BracketTable] = {}

    # ─── 共有キャッシュ ───

    @property
    def lie(self) -> LInfinityModel | None:
        if isinstance(self.model, LInfinityModel):
            return self.model
        return self.model.lie

    @property
    def is_cobar(self) -> bool:
        return isinstance(self.model, CoalgebraModel) and self.model.lie is None

    @property
    def engines(self) -> Engines:
        if self._engines is None:
            self._engines = Engines(self.model, self.max_degree)
        return self._engines

    def pairs(self, kind: str) -> tuple[list, bool]:
        if kind not in self._pairs:
            self._pairs[kind] = sample(class_pairs(self.engines, kind), self.pair_budget, self.seed)
        return self._pairs[kind]

    def table(self, kind: str, pairs_of: str | None = None) -> BracketTable:
        """pairs_of の組（同じ型の演算なら共通の標本）で kind の表を作る"""
        if kind not in self._tables:
            chosen, _ = self.pairs(pairs_of or kind)
            self._tables[kind] = bracket_table(self.engines, kind, chosen)
        return self._tables[kind]

    def _mark(self, results: list[CheckResult], *kinds: str) -> list[CheckResult]:
        if any(self.pairs(k)[1] for k in kinds):
            for r in results:
                r.sampled = True
        return results

    # ─── 実行 ───

    def run(self, suites: list[str]) -> VerificationReport:
        report = VerificationReport(getattr(self.model, "name", "?"), self.max_degree)
        for name in suites:
            if not self.is_cobar and name not in LIE_SUITES:
                report.suites[name] = [CheckResult(name, status=SKIPPED, details={"reason": "regime"})]
                continue
            method = getattr(self, "suite_" + name.replace("-", "_"))
            try:
                report.suites[name] = method()
            except NecklaceError as exc:
                failed = CheckResult(name)
                failed.fail({"error": type(exc).__name__, "message": str(exc), "witness": exc.witness})
                report.suites[name] = [failed]
            LOGGER.info("スイート %s: %s", name, report.suite_status(name))
        return report

    # ─── 各スイート ───

    def suite_axioms(self) -> list[CheckResult]:
        if isinstance(self.model, LInfinityModel):
            check = CheckResult("nilpotency")
            check.details["index"] = nilpotency_index(self.model)
            return [check]
        results = validate_model(self.model)
        if not self.is_cobar:
            check = CheckResult("nilpotency")
            check.details["index"] = nilpotency_index(self.model.lie)
            return results + [check]
        if not all_ok(results):
            return results
        results += self._d_squared()
        if self.model.has_pairing:
            dual = duality(self.engines)
            check = CheckResult("pairing_dual")
            for bad in PairingDual(self.model, dual.dual.variant).check():
                check.fail({"pair": list(bad)})
            check.details["sign_rule"] = dual.rule_name
            check.details["chain_sign"] = scalar_text(dual.chain_sign)
            results.append(check)
            results.append(self._psi_weight(dual))
            results.append(self._double_skew())
            results.append(self._double_jacobi())
            results += self._necklace_lie()
        return results

    def _psi_weight(self, dual) -> CheckResult:
        """Ψ が重み p の余鎖類を重み p の Hochschild 類へ全単射に送ること"""
        coh, hh = self.engines.hhcoh, self.engines.hh
        check = CheckResult("psi_weight")
        for n in coh.degree_range():
            if n + dual.d not in hh.degree_range():
                continue
            targets = hh.classes(n + dual.d)
            for p in sorted({c.weight for c in coh.classes(n)} | {c.weight for c in targets}):
                members = [c for c in coh.classes(n) if c.weight == p]
                images = []
                for f in members:
                    image = hh.coordinates(n + dual.d, dual.psi_vector(n, f.vector))
                    images.append(image)
                    for index in image:
                        if targets[index].weight != p:
                            check.fail({"class": f.tag, "target": targets[index].tag})
                expected = sum(1 for c in targets if c.weight == p)
                if len(members) != expected or span_rank(images, len(targets)) != expected:
                    check.fail({"degree": n, "weight": p, "cochain": len(members), "hochschild": expected})
        return check

    def _d_squared(self) -> list[CheckResult]:
        results = []
        for kind in KINDS:
            theory = self.engines.theory(kind)
            check = CheckResult(f"d_squared_{kind}")
            for n in theory.degree_range():
                for j in range(theory.dim(n)):
                    if theory.boundary(n - 1, theory.boundary(n, {j: ONE})):
                        check.fail({"degree": n, "basis": theory.key_label(theory.basis(n)[j])})
            results.append(check)
        return results

    def _short_words(self) -> list[tuple]:
        algebra = self.engines.algebra
        words = []
        for n in range(1, self.max_degree + 1):
            words.extend(w for w in algebra.words(n) if len(w) <= MAX_WORD_LENGTH)
        return words

    def _double_skew(self) -> CheckResult:
        """{{a,b}} = −(−1)^{(|a|+k)(|b|+k)} τ{{b,a}}（τ は Koszul 符号付きの入れ替え）。符号の読み替えは認めない"""
        algebra, model = self.engines.algebra, self.model
        k = bracket_degree(model)
        words = self._short_words()
        pairs, sampled = sample(list(itertools.product(words, words)), self.pair_budget, self.seed)
        check = CheckResult("double_bracket_skew", sampled=sampled)
        for a, b in pairs:
            lhs = double_bracket(algebra, model, a, b)
            factor = -sign_of((algebra.word_degree(a) + k) * (algebra.word_degree(b) + k))
            for (x, y), c in double_bracket(algebra, model, b, a).items():
                sign = sign_of(algebra.word_degree(x) * algebra.word_degree(y))
                vec_add(lhs, {(y, x): c * sign}, -factor)
            if lhs:
                check.fail({"words": [algebra.word_label(a), algebra.word_label(b)]})
        return check

    def _double_jacobi(self) -> CheckResult:
        """Σ_巡回 (−1)^{(|a|+k)(|c|+k)} τ^i {{a, {{b, c}}}}_L = 0"""
        algebra, model = self.engines.algebra, self.model
        k = bracket_degree(model)
        deg = algebra.word_degree
        words = [w for w in self._short_words() if len(w) <= 2]
        triples, sampled = sample(list(itertools.product(words, repeat=3)), self.pair_budget, self.seed)
        check = CheckResult("double_jacobi", sampled=sampled)

        def left_bracket(a, b, c):
            result: dict = {}
            for (x, y), coef in double_bracket(algebra, model, b, c).items():
                for (p, q), c2 in double_bracket(algebra, model, a, x).items():
                    vec_add(result, {(p, q, y): coef * c2})
            return result

        def rotate(element, times):
            for _ in range(times):
                rotated: dict = {}
                for (x, y, z), coef in element.items():
                    vec_add(rotated, {(z, x, y): coef * sign_of(deg(z) * (deg(x) + deg(y)))})
                element = rotated
            return element

        for a, b, c in triples:
            total: dict = {}
            for i, (p, q, r) in enumerate(((a, b, c), (b, c, a), (c, a, b))):
                factor = sign_of((deg(p) + k) * (deg(r) + k))
                vec_add(total, rotate(left_bracket(p, q, r), i), factor)
            if total:
                check.fail({"words": [algebra.word_label(w) for w in (a, b, c)]})
        return check

    def _necklace_lie(self) -> list[CheckResult]:
        """ホモロジー上の反対称性と Jacobi 恒等式（次数 2−d）"""
        engines = self.engines
        hc = engines.hc
        k = bracket_degree(self.model)
        table = self.table("necklace", "string")
        anti = CheckResult("necklace_antisymmetry")
        for (left, right), values in table.entries.items():
            swapped = table.entries.get((right, left))
            if swapped is None:
                continue
            factor = -sign_of((table.sources[left][0] + k) * (table.sources[right][0] + k))
            if values != {t: factor * c for t, c in swapped.items()}:
                anti.fail({"pair": [left, right]})

        jacobi = CheckResult("necklace_jacobi")
        classes = [c for n in hc.degree_range() for c in hc.classes(n)]
        triples = [
            t for t in itertools.product(classes, repeat=3)
            if sum(c.degree for c in t) + 2 * k in hc.degree_range()
        ]
        triples, sampled = sample(triples, self.pair_budget, self.seed)
        jacobi.sampled = sampled

        def nested(a, b, c):
            n, inner = necklace_bracket(engines, b.degree, b.vector, c.degree, c.vector)
            return necklace_bracket(engines, a.degree, a.vector, n, inner)

        for a, b, c in triples:
            total: dict = {}
            n = None
            for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
                n, value = nested(p, q, r)
                vec_add(total, value, sign_of((p.degree + k) * (r.degree + k)))
            if total and hc.coordinates(n, total):
                jacobi.fail({"triple": [a.tag, b.tag, c.tag]})
        return self._mark([anti], "string") + [jacobi]

    def suite_adams(self) -> list[CheckResult]:
        return verify_adams(self.engines, self.weight_max)

    def suite_hodge_containment(self) -> list[CheckResult]:
        results = []
        for kind in ("string", "necklace"):
            check = CheckResult(f"{kind}_weight_containment")
            for bad in self.table(kind, "string").weight_violations(drop=2):
                check.fail(bad)
            check.details["nonzero"] = len(self.table(kind, "string").nonzero())
            results.append(check)
        return self._mark(results, "string")

    def suite_poisson_cup(self) -> list[CheckResult]:
        status, witnesses = compare_tables(self.table("string"), self.table("necklace", "string"))
        results = [_status_check("string_equals_necklace", status, witnesses)]
        status, witnesses = compare_tables(
            self.table("leibniz-B", "leibniz-B"), self.table("leibniz-G", "leibniz-B")
        )
        results.append(_status_check("leibniz_B_gerstenhaber", status, witnesses))
        return self._mark(results, "string", "leibniz-B")

    def suite_action(self) -> list[CheckResult]:
        action = self.table("action")
        status, witnesses = compare_tables(action, self.table("action-chain", "action"))
        results = [_status_check("action_two_routes", status, witnesses)]
        contain = CheckResult("action_weight_containment")
        for bad in action.weight_violations(drop=2):
            contain.fail(bad)
        results.append(contain)
        results.append(self._action_module())
        return self._mark(results, "action")

    def _action_module(self) -> CheckResult:
        """{α,{β,y}} − (−1)^{(|α|+k)(|β|+k)} {β,{α,y}} = {{α,β},y}"""
        engines = self.engines
        hc, hh = engines.hc, engines.hh
        k = bracket_degree(self.model)
        cyclic = [c for n in hc.degree_range() for c in hc.classes(n)]
        targets = [c for n in hh.degree_range() for c in hh.classes(n)]
        triples = [
            (a, b, y) for a, b, y in itertools.product(cyclic, cyclic, targets)
            if a.degree + b.degree + y.degree + 2 * k in hh.degree_range()
            and a.degree + b.degree + k in hc.degree_range()
        ]
        triples, sampled = sample(triples, self.pair_budget, self.seed)
        check = CheckResult("action_module", sampled=sampled)
        for a, b, y in triples:
            n1, by = hh_action(engines, b.degree, b.vector, y.degree, y.vector)
            n, lhs = hh_action(engines, a.degree, a.vector, n1, by)
            n2, ay = hh_action(engines, a.degree, a.vector, y.degree, y.vector)
            _, second = hh_action(engines, b.degree, b.vector, n2, ay)
            vec_add(lhs, second, -sign_of((a.degree + k) * (b.degree + k)))
            m, ab = necklace_bracket(engines, a.degree, a.vector, b.degree, b.vector)
            _, rhs = hh_action(engines, m, ab, y.degree, y.vector)
            difference = vec_add(dict(lhs), rhs, -ONE)
            if difference and hh.coordinates(n, difference):
                check.fail({"triple": [a.tag, b.tag, y.tag]})
        return check

    def suite_loop(self) -> list[CheckResult]:
        engines = self.engines
        hh = engines.hh
        d = self.model.pairing_degree or 0
        table = self.table("loop")
        results = []

        unit = CheckResult("loop_unit")
        n0, unit_vector = loop_unit(engines)
        for n in hh.degree_range():
            if n + n0 - d not in hh.degree_range():
                continue
            for y in hh.classes(n):
                for left in (True, False):
                    if left:
                        m, value = loop_product(engines, n0, unit_vector, n, y.vector)
                    else:
                        m, value = loop_product(engines, n, y.vector, n0, unit_vector)
                    if hh.coordinates(m, value) != {y.index: ONE}:
                        unit.fail({"class": y.tag, "side": "left" if left else "right"})
        results.append(unit)

        commutative = CheckResult("loop_commutative")
        for (left, right), values in table.entries.items():
            swapped = table.entries.get((right, left))
            if swapped is None:
                continue
            factor = sign_of((table.sources[left][0] - d) * (table.sources[right][0] - d))
            if values != {t: factor * c for t, c in swapped.items()}:
                commutative.fail({"pair": [left, right]})
        results.append(commutative)

        additive = CheckResult("loop_weight_additive")
        for bad in table.weight_violations(drop=0):
            additive.fail(bad)
        results.append(additive)
        results.append(self._loop_associative())
        return self._mark(results, "loop")

    def _loop_associative(self) -> CheckResult:
        engines = self.engines
        hh = engines.hh
        d = self.model.pairing_degree or 0
        classes = [c for n in hh.degree_range() for c in hh.classes(n)]
        triples = [
            t for t in itertools.product(classes, repeat=3)
            if sum(c.degree for c in t) - 2 * d in hh.degree_range()
            and t[0].degree + t[1].degree - d in hh.degree_range()
            and t[1].degree + t[2].degree - d in hh.degree_range()
        ]
        triples, sampled = sample(triples, self.pair_budget, self.seed)
        check = CheckResult("loop_associative", sampled=sampled)
        for a, b, c in triples:
            n1, ab = loop_product(engines, a.degree, a.vector, b.degree, b.vector)
            n, lhs = loop_product(engines, n1, ab, c.degree, c.vector)
            n2, bc = loop_product(engines, b.degree, b.vector, c.degree, c.vector)
            _, rhs = loop_product(engines, a.degree, a.vector, n2, bc)
            difference = vec_add(dict(lhs), rhs, -ONE)
            if difference and hh.coordinates(n, difference):
                check.fail({"triple": [a.tag, b.tag, c.tag]})
        return check

    def suite_bv(self) -> list[CheckResult]:
        engines = self.engines
        coh = engines.hhcoh
        square = CheckResult("bv_square_zero")
        lowers = CheckResult("bv_lowers_weight")
        for n in coh.degree_range():
            if n + 1 not in coh.degree_range():
                continue
            for f in coh.classes(n):
                m, once = bv_delta(engines, n, f.vector)
                values = coh.coordinates(m, once)
                for index in values:
                    target = coh.classes(m)[index]
                    if target.weight != f.weight - 1:
                        lowers.fail({"class": f.tag, "target": target.tag})
                if m + 1 in coh.degree_range():
                    _, twice = bv_delta(engines, m, once)
                    if twice and coh.coordinates(m + 1, twice):
                        square.fail({"class": f.tag})

        pairs = [
            (a, b) for a, b in class_pairs(engines, "gerstenhaber")
            if a.degree + b.degree in coh.degree_range()
            and a.degree + 1 in coh.degree_range()
            and b.degree + 1 in coh.degree_range()
        ]
        pairs, sampled = sample(pairs, self.pair_budget, self.seed)
        rows = []
        for a, b in pairs:
            n, bracket = gerstenhaber_vectors(engines, a.degree, a.vector, b.degree, b.vector)
            m, product = cup_vectors(engines, a.degree, a.vector, b.degree, b.vector)
            _, rhs = bv_delta(engines, m, product)
            da_n, da = bv_delta(engines, a.degree, a.vector)
            _, term = cup_vectors(engines, da_n, da, b.degree, b.vector)
            vec_add(rhs, term, -ONE)
            db_n, db = bv_delta(engines, b.degree, b.vector)
            _, term = cup_vectors(engines, a.degree, a.vector, db_n, db)
            # |a| はコホモロジー次数 −n。[a,b] = Δ(ab) − Δ(a)b − (−1)^{|a|} aΔ(b)
            vec_add(rhs, term, -sign_of(a.degree))
            block = ((a.degree, a.weight), (b.degree, b.weight))
            rows.append((block, coh.coordinates(n, bracket), coh.coordinates(n, rhs), (a.tag, b.tag)))
        identity, signs = _block_classify(
            "bv_identity",
            rows,
            lambda w, lhs, rhs: {"pair": list(w), "bracket": _coords_text(lhs), "bv": _coords_text(rhs)},
        )
        if identity.status == CONVENTION:
            identity.details["deviation"] = _bv_deviation(signs)
        identity.sampled = sampled
        return [square, lowers, identity]

    def suite_todd(self) -> list[CheckResult]:
        g = self.lie
        if g is None:
            return [CheckResult("todd", status=SKIPPED, details={"reason": "no L-infinity model"})]
        return todd_check(g)

    def suite_connes_bi(self) -> list[CheckResult]:
        """Connes 列の HH_n での完全性 im B = ker I を重みごとに確かめる

        B は重みを 1 下げ、I は重みを保つ。簡約 HC は k·1 を除くので、
        HH_0 の重み 0 にある単位類 1⊗1 は ker I にあって im B にない（その 1 次元だけ差し引く）。
        """
        engines = self.engines
        hc, hh = engines.hc, engines.hh
        composite = CheckResult("connes_IB_zero")
        shift = CheckResult("connes_B_weight")
        keeps = CheckResult("connes_I_weight")
        segments = CheckResult("connes_segment")
        for n in hh.degree_range():
            targets = hh.classes(n)
            incoming = hc.classes(n - 1) if n - 1 in hc.degree_range() else []
            outgoing = hc.classes(n) if n in hc.degree_range() else []
            images = []
            for x in incoming:
                value = hh.coordinates(n, connes_B(engines, n - 1, x.vector))
                images.append(value)
                for index in value:
                    if targets[index].weight != x.weight - 1:
                        shift.fail({"class": x.tag, "target": targets[index].tag})
                if value and outgoing:
                    vector: dict = {}
                    for index, c in value.items():
                        vec_add(vector, targets[index].vector, c)
                    if hc.coordinates(n, map_I(engines, n, vector)):
                        composite.fail({"class": x.tag})
            columns = {}
            for y in targets:
                columns[y.index] = hc.coordinates(n, map_I(engines, n, y.vector)) if outgoing else {}
                for index in columns[y.index]:
                    if outgoing[index].weight != y.weight:
                        keeps.fail({"class": y.tag, "target": outgoing[index].tag})
            for p in sorted({c.weight for c in targets}):
                members = [c for c in targets if c.weight == p]
                restricted = [{i: c for i, c in v.items() if targets[i].weight == p} for v in images]
                rank_B = span_rank([v for v in restricted if v], len(targets))
                rank_I = span_rank([columns[c.index] for c in members], len(outgoing)) if outgoing else 0
                unit = 1 if n == 0 and p == 0 else 0
                defect = len(members) - rank_I - rank_B - unit
                segments.details[f"{n},{p}"] = {"rank_B": rank_B, "rank_I": rank_I, "defect": defect}
                if defect:
                    segments.fail({"degree": n, "weight": p, "kernel_I": len(members) - rank_I, "rank_B": rank_B})
        return [composite, shift, keeps, segments]


def run_verification(
    model,
    max_degree: int,
    suites: list[str] | None = None,
    weight_max: int = 6,
    seed: int = 0,
    pair_budget: int = 10000,
) -> VerificationReport:
    verifier = Verifier(model, max_degree, weight_max, seed, pair_budget)
    return verifier.run(suites or list(SUITES))
