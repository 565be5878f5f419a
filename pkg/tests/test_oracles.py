"""密行列で素朴に計算した次元との照合

エンジンの疎な消去やキャッシュを通さず、基底を列挙して sympy の Matrix.rank で
ホモロジーの次元を出す。小さいモデルでしか使えない。
"""

import itertools

from sympy import Matrix, Rational

from core.hodge import lie_hodge_tables
from models.catalog import builtin, heisenberg_lie
from theories.operators import Engines


def _words(model, m):
    """余バー R の次数 m の語（C̄ のラベルの列、文字の次数は |c| − 1）"""
    if m == 0:
        return [()]
    found = []
    for c in model.reduced_labels:
        step = model.degree(c) - 1
        if 0 < step <= m:
            found.extend((c,) + rest for rest in _words(model, m - step))
    return found


def _word_degree(model, word):
    return sum(model.degree(c) - 1 for c in word)


def _add(target, key, value):
    target[key] = target.get(key, 0) + value


def _d_word(model, word):
    result = {}
    prefix = 0
    for i, c in enumerate(word):
        head, tail = word[:i], word[i + 1:]
        sign = (-1) ** prefix
        for target, coef in model.d(c).items():
            if target != model.counit_label:
                _add(result, head + (target,) + tail, -sign * coef)
        for (a, b), coef in model.reduced_delta(c).items():
            _add(result, head + (a, b) + tail, sign * coef * (-1) ** model.degree(a))
        prefix += model.degree(c) - 1
    return result


def _hh_boundary(model, word, label):
    """R⊗C の微分（ねじれテンソル積）"""
    result = {}
    r = _word_degree(model, word)
    for w2, coef in _d_word(model, word).items():
        _add(result, (w2, label), coef)
    for target, coef in model.d(label).items():
        _add(result, (word, target), (-1) ** r * coef)
    for (left, right), kappa in model.delta(label).items():
        if left != model.counit_label:
            _add(result, (word + (left,), right), (-1) ** r * kappa)
        if right != model.counit_label:
            twist = (-1) ** (model.degree(right) * (r + model.degree(left)))
            _add(result, ((right,) + word, left), -kappa * twist)
    return result


def _hh_keys(model, n):
    keys = []
    for label in model.labels:
        m = n - model.degree(label)
        if m >= 0:
            keys.extend((w, label) for w in _words(model, m))
    return keys


def _rank(columns, rows):
    if not columns or not rows:
        return 0
    index = {key: i for i, key in enumerate(rows)}
    matrix = Matrix.zeros(len(rows), len(columns))
    for j, column in enumerate(columns):
        for key, value in column.items():
            if value:
                matrix[index[key], j] = Rational(str(value))
    return matrix.rank()


def naive_hochschild_dims(model, max_degree):
    dims = {}
    for n in range(max_degree + 1):
        here = _hh_keys(model, n)
        outgoing = _rank([_hh_boundary(model, *k) for k in here], _hh_keys(model, n - 1)) if n else 0
        incoming = _rank([_hh_boundary(model, *k) for k in _hh_keys(model, n + 1)], here)
        dims[n] = len(here) - outgoing - incoming
    return dims


def naive_commutator_quotient_dims(model, max_degree):
    """d = 0 のとき R_♮ = R/(k + [R,R]) の次元"""
    dims = {}
    for n in range(1, max_degree + 1):
        words = _words(model, n)
        relations = []
        for word in words:
            for i in range(1, len(word)):
                u, v = word[:i], word[i:]
                relation = {}
                _add(relation, u + v, 1)
                _add(relation, v + u, -(-1) ** (_word_degree(model, u) * _word_degree(model, v)))
                relations.append(relation)
        dims[n] = len(words) - _rank(relations, words)
    return dims


def _ce_boundary(brackets, subset):
    """∂(x_{i1}∧…∧x_{iq}) = Σ_{a<b} (−1)^{a+b+1} [x_a, x_b]∧(残り)"""
    result = {}
    for a, b in itertools.combinations(range(len(subset)), 2):
        rest = [x for k, x in enumerate(subset) if k not in (a, b)]
        for z, coef in brackets.get((subset[a], subset[b]), {}).items():
            if z in rest:
                continue
            ordered = sorted([z] + rest)
            # z を先頭から定位置へ動かす符号
            sign = (-1) ** ordered.index(z)
            _add(result, tuple(ordered), (-1) ** (a + b + 1) * sign * coef)
    return result


def naive_ce_dims(dim, brackets):
    chains = {q: list(itertools.combinations(range(dim), q)) for q in range(dim + 1)}
    ranks = {
        q: _rank([_ce_boundary(brackets, s) for s in chains[q]], chains[q - 1]) if q else 0
        for q in range(dim + 1)
    }
    return [len(chains[q]) - ranks[q] - ranks.get(q + 1, 0) for q in range(dim + 1)]


# ─── 照合 ───

def test_odd_sphere_hochschild_against_dense_complex():
    model = builtin("sphere:3")
    dims = naive_hochschild_dims(model, 12)
    assert dims == {0: 1, 1: 0, **{n: 1 for n in range(2, 13)}}
    assert Engines(model, 12).hh.dimensions() == dims


def test_product_hochschild_against_dense_complex():
    model = builtin("product:sphere:3,sphere:3")
    dims = naive_hochschild_dims(model, 8)
    assert Engines(model, 8).hh.dimensions() == dims


def test_even_sphere_cyclic_against_commutator_quotient():
    model = builtin("sphere:2")
    dims = naive_commutator_quotient_dims(model, 9)
    assert dims[2] == 0 and dims[3] == 1
    assert Engines(model, 9).hc.dimensions() == dims


def test_heisenberg_chevalley_eilenberg_against_dense_complex():
    # [e1, e2] = e3
    dims = naive_ce_dims(3, {(0, 1): {2: 1}})
    assert dims == [1, 2, 2, 1]
    homology, cohomology = lie_hodge_tables(heisenberg_lie(), 1)
    assert [cohomology.dims[(q, 0)] for q in range(4)] == dims
    # H_0(𝔤; 𝔤) = 𝔤/[𝔤, 𝔤]
    assert homology.dims[(0, 1)] == 2
