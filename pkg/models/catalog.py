"""組み込みモデルのカタログ

名前の文法:
  point / sphere:N / cpn:N / product:M1,M2 / heisenberg / abelian:K / filiform:4
  minimal:sphere:N / minimal:cpn:N （Todd 検査用の極小 L∞ モデル）

球面・射影空間・積は形式的空間のコホモロジー環の双対余代数（Poincaré 双対ペアリング付き）、
Lie 代数は Chevalley–Eilenberg 鎖余代数に楔積ペアリングを載せたもの。
"""

import logging
from dataclasses import dataclass

from core.coalgebra import (
    SIMPLY_CONNECTED,
    BasisElement,
    CoalgebraModel,
    LInfinityModel,
    ce_wedge_pairing,
    nilpotency_index,
    ordinary_lie,
)
from core.errors import UnknownModel
from core.exact import ONE
from core.graded import sign_of

LOGGER = logging.getLogger(__name__)

_CPN_NAMES = ["u", "v", "w"]
_PRODUCT_NAMES = ["x", "y", "z", "w"]


@dataclass(frozen=True)
class ModelCatalogEntry:
    name: str
    regime: str
    note: str


def point() -> CoalgebraModel:
    return CoalgebraModel(
        name="point",
        basis=(BasisElement("1", 0),),
        coproduct={"1": [("1", "1", 1)]},
        pairing={("1", "1"): ONE},
        pairing_degree=0,
    )


def sphere(n: int) -> CoalgebraModel:
    if n < 2:
        raise UnknownModel(f"sphere:{n} は対象外です（n ≥ 2）", witness=f"sphere:{n}")
    top = f"c{n}"
    return CoalgebraModel(
        name=f"sphere:{n}",
        basis=(BasisElement("1", 0), BasisElement(top, n)),
        coproduct={"1": [("1", "1", 1)], top: [(top, "1", 1), ("1", top, 1)]},
        pairing={("1", top): ONE, (top, "1"): ONE},
        pairing_degree=n,
        generator_names={top: "t"},
    )


def cpn(n: int) -> CoalgebraModel:
    """Q[a]/a^{n+1}（|a| = 2）の双対: Δc_{2k} = Σ_{i+j=k} c_{2i}⊗c_{2j}"""
    if n < 1:
        raise UnknownModel(f"cpn:{n} は対象外です（n ≥ 1）", witness=f"cpn:{n}")

    def label(k: int) -> str:
        return "1" if k == 0 else f"c{2 * k}"

    basis = tuple(BasisElement(label(k), 2 * k) for k in range(n + 1))
    coproduct = {label(k): [(label(i), label(k - i), 1) for i in range(k + 1)] for k in range(n + 1)}
    pairing = {(label(i), label(n - i)): ONE for i in range(n + 1)}
    names = {
        label(k): _CPN_NAMES[k - 1] if k <= len(_CPN_NAMES) else f"u{k}"
        for k in range(1, n + 1)
    }
    return CoalgebraModel(
        name=f"cpn:{n}",
        basis=basis,
        coproduct=coproduct,
        pairing=pairing,
        pairing_degree=2 * n,
        generator_names=names,
    )


def product(first: CoalgebraModel, second: CoalgebraModel) -> CoalgebraModel:
    """テンソル積余代数。Δ(a⊗b) = Σ (−1)^{|a″||b′|} (a′⊗b′)⊗(a″⊗b″)"""
    u1, u2 = first.counit_label, second.counit_label

    def label(a: str, b: str) -> str:
        if a == u1 and b == u2:
            return "1"
        return f"{'1' if a == u1 else a}⊗{'1' if b == u2 else b}"

    pairs = [(a, b) for b in second.labels for a in first.labels]
    basis = tuple(BasisElement(label(a, b), first.degree(a) + second.degree(b)) for a, b in pairs)

    coproduct = {}
    differential = {}
    for a, b in pairs:
        terms = []
        for (a1, a2), c1 in first.delta(a).items():
            for (b1, b2), c2 in second.delta(b).items():
                sign = sign_of(first.degree(a2) * second.degree(b1))
                terms.append((label(a1, b1), label(a2, b2), c1 * c2 * sign))
        coproduct[label(a, b)] = terms
        image = [(label(x, b), c) for x, c in first.d(a).items()]
        image += [(label(a, y), c * sign_of(first.degree(a))) for y, c in second.d(b).items()]
        if image:
            differential[label(a, b)] = image

    pairing = {}
    for a, b in pairs:
        for a2, b2 in pairs:
            value = first.pair(a, a2) * second.pair(b, b2)
            if value:
                sign = sign_of(second.degree(b) * first.degree(a2))
                pairing[(label(a, b), label(a2, b2))] = value * sign

    reduced = [label(a, b) for a, b in pairs if (a, b) != (u1, u2)]
    names = {
        x: _PRODUCT_NAMES[i] for i, x in enumerate(reduced) if i < len(_PRODUCT_NAMES)
    }
    regime = SIMPLY_CONNECTED if first.regime == second.regime == SIMPLY_CONNECTED else first.regime
    degree = None
    if first.pairing_degree is not None and second.pairing_degree is not None:
        degree = first.pairing_degree + second.pairing_degree
    return CoalgebraModel(
        name=f"product:{first.name},{second.name}",
        basis=basis,
        coproduct=coproduct,
        differential=differential,
        pairing=pairing,
        pairing_degree=degree,
        regime=regime,
        generator_names=names,
    )


def heisenberg_lie() -> LInfinityModel:
    return ordinary_lie("heisenberg", ["e1", "e2", "e3"], {("e1", "e2"): {"e3": 1}}, bound=3)


def abelian_lie(k: int) -> LInfinityModel:
    if k < 1:
        raise UnknownModel(f"abelian:{k} は対象外です（k ≥ 1）", witness=f"abelian:{k}")
    return ordinary_lie(f"abelian:{k}", [f"a{i}" for i in range(1, k + 1)], {}, bound=2)


def filiform_lie(n: int = 4) -> LInfinityModel:
    if n != 4:
        raise UnknownModel(f"filiform:{n} は未対応です（filiform:4 のみ）", witness=f"filiform:{n}")
    brackets = {("e1", "e2"): {"e3": 1}, ("e1", "e3"): {"e4": 1}}
    return ordinary_lie("filiform:4", ["e1", "e2", "e3", "e4"], brackets, bound=4)


def minimal_sphere(n: int) -> LInfinityModel:
    """Sⁿ の有理ホモトピー Lie 代数（奇数 n は生成元 1 つ、偶数 n は [a,a] = b）"""
    if n < 2:
        raise UnknownModel(f"minimal:sphere:{n} は対象外です", witness=n)
    if n % 2:
        basis = (BasisElement("a", n - 1),)
        return LInfinityModel(f"minimal:sphere:{n}", basis, {}, nilpotency_bound=2)
    basis = (BasisElement("a", n - 1), BasisElement("b", 2 * n - 2))
    return LInfinityModel(f"minimal:sphere:{n}", basis, {(0, 0): {1: ONE}}, nilpotency_bound=3)


def minimal_cpn(n: int) -> LInfinityModel:
    """CPⁿ の極小 L∞ モデル: l_{n+1}(a,…,a) = b（|a| = 1, |b| = 2n）"""
    if n < 1:
        raise UnknownModel(f"minimal:cpn:{n} は対象外です", witness=n)
    basis = (BasisElement("a", 1), BasisElement("b", 2 * n))
    operations = {(0,) * (n + 1): {1: ONE}}
    return LInfinityModel(
        f"minimal:cpn:{n}", basis, operations, nilpotency_bound=n + 2, arity_bound=n + 1
    )


def with_lie(g: LInfinityModel) -> CoalgebraModel:
    return ce_wedge_pairing(g)


def _integer(text: str, name: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UnknownModel(f"モデル名 {name} の数値部分が不正です", witness=name) from None


def _split_product(arguments: str, name: str) -> tuple[str, str]:
    # 各因子は sphere:3 のように ':' を含むので ',' で分ける（入れ子の積は左の因子に置けない）
    left, comma, right = arguments.partition(",")
    if not comma or not left or not right:
        raise UnknownModel(f"{name}: product には 2 つの因子が必要です", witness=name)
    return left, right


def normalize(name: str) -> str:
    """sphere(3) 形式を sphere:3 形式にそろえる"""
    return name.strip().replace(" ", "").replace("(", ":").replace(")", "")


def minimal_model(name: str) -> LInfinityModel:
    text = normalize(name)
    if text.startswith("minimal:"):
        text = text[len("minimal:"):]
    kind, _, argument = text.partition(":")
    if kind == "sphere":
        return minimal_sphere(_integer(argument, name))
    if kind == "cpn":
        return minimal_cpn(_integer(argument, name))
    if kind in ("heisenberg", "abelian", "filiform"):
        model = builtin(text)
        return model.lie
    raise UnknownModel(f"{name} の極小 L∞ モデルはカタログにありません", witness=name)


def builtin(name: str):
    """カタログ名からモデルを作る。CoalgebraModel か（minimal: のとき）LInfinityModel"""
    text = normalize(name)
    kind, _, argument = text.partition(":")
    if kind == "point" and not argument:
        model = point()
    elif kind == "sphere":
        model = sphere(_integer(argument, name))
    elif kind == "cpn":
        model = cpn(_integer(argument, name))
    elif kind == "product":
        left, right = _split_product(argument, name)
        model = product(builtin(left), builtin(right))
    elif kind == "heisenberg" and not argument:
        model = with_lie(heisenberg_lie())
    elif kind == "abelian":
        model = with_lie(abelian_lie(_integer(argument, name)))
    elif kind == "filiform":
        model = with_lie(filiform_lie(_integer(argument or "4", name)))
    elif kind == "minimal":
        g = minimal_model(text)
        nilpotency_index(g)
        return g
    else:
        raise UnknownModel(f"モデル {name} はカタログにありません", witness=name)
    LOGGER.debug("組み込みモデル %s: 基底 %s", model.name, model.labels)
    return model


# models コマンドの説明（models.json が無いときの一覧）
CATALOG = {
    "point": ModelCatalogEntry("point", SIMPLY_CONNECTED, "一点。すべての被約群が 0"),
    "sphere": ModelCatalogEntry("sphere:N", SIMPLY_CONNECTED, "H*(Sⁿ) の双対、ペアリング次数 n"),
    "cpn": ModelCatalogEntry("cpn:N", SIMPLY_CONNECTED, "Q[a]/a^{n+1} の双対、ペアリング次数 2n"),
    "product": ModelCatalogEntry("product:M1,M2", SIMPLY_CONNECTED, "余代数のテンソル積"),
    "heisenberg": ModelCatalogEntry("heisenberg", "classical_lie", "3 次元 Heisenberg Lie 代数"),
    "abelian": ModelCatalogEntry("abelian:K", "classical_lie", "K 次元可換 Lie 代数"),
    "filiform": ModelCatalogEntry("filiform:4", "classical_lie", "4 次元 filiform Lie 代数（冪零指数 4）"),
    "minimal": ModelCatalogEntry("minimal:M", "l_infinity", "Todd 検査用の極小 L∞ モデル"),
}
