"""Randomized identities, each checked on at least 200 generated cases (n <= 4)."""
from collections import Counter

from hypothesis import assume, given, strategies as st

from jkl.freegroup import (AutWord, Word, abelianization_matrix, aut_commutator,
                           compose, evaluate, magnus_letters, nielsen_letters, word_commutator,
                           word_reduce)
from jkl.glrep import (Dual, Std, Tensor, Wedge, apply_eij, apply_group, character_decompose,
                       decompose, generated_dimension, is_highest_weight_vector, lambda_dual,
                       tensor_elements, wedge_elements, weyl_dimension)
from jkl.johnson import abelian_cycle_image, map_modules, named_map, tau, tau2
from jkl.linalg import matmul
from jkl.magnus import (dsw_left_normed, filtration_degree, is_lie_element, leading_term,
                        magnus_expand)

ranks = st.integers(min_value=2, max_value=4)


@st.composite
def words(draw, n=None, max_len=8):
    n = n or draw(ranks)
    raw = draw(st.lists(st.integers(1, n).flatmap(lambda i: st.sampled_from([i, -i])),
                        max_size=max_len))
    return word_reduce(raw, n)


@st.composite
def word_pairs(draw):
    n = draw(ranks)
    return n, draw(words(n)), draw(words(n))


@st.composite
def magnus_words(draw, n, max_len=4):
    letters = magnus_letters(n)
    picks = draw(st.lists(st.tuples(st.sampled_from(letters), st.booleans()), min_size=1,
                          max_size=max_len))
    return AutWord(tuple(a.inv() if flip else a for a, flip in picks), n)


@st.composite
def any_words(draw, n, max_len=6):
    letters = magnus_letters(n) + nielsen_letters(n)
    picks = draw(st.lists(st.tuples(st.sampled_from(letters), st.booleans()), max_size=max_len))
    return AutWord(tuple(a.inv() if flip else a for a, flip in picks), n)


# ---------------------------------------------------------------------------
# free groups and the Magnus expansion


@given(words())
def test_reduce_idempotent(w):
    assert word_reduce(w.letters) == w


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(any_words(n), any_words(n))))
def test_evaluate_is_homomorphism(pair):
    u, v = pair
    assert evaluate(u * v) == compose(evaluate(u), evaluate(v))
    assert evaluate(u * u.inverse()).is_identity()
    assert abelianization_matrix(evaluate(u * v)) == matmul(abelianization_matrix(evaluate(u)),
                                                            abelianization_matrix(evaluate(v)))


@given(word_pairs(), st.integers(1, 4))
def test_magnus_homomorphism(triple, degree):
    n, u, v = triple
    assert magnus_expand(u * v, degree) == magnus_expand(u, degree) * magnus_expand(v, degree)


@st.composite
def deep_words(draw):
    """Products of conjugated double commutators, so they lie in F^(3)."""
    n = draw(ranks)
    out = Word()
    for _ in range(draw(st.integers(1, 2))):
        a, b, c, g = (draw(words(n, 3)) for _ in range(4))
        term = word_commutator(word_commutator(a, b), c)
        out = out * g * term * g.inverse()
    return out


@given(deep_words())
def test_dsw_on_degree_three_leading_terms(w):
    t = leading_term(w, 3)
    assert is_lie_element(t)
    dsw_left_normed(t)


@given(st.integers(2, 4).flatmap(lambda k: st.tuples(st.just(k), st.lists(words(3, 2),
                                                                        min_size=k, max_size=k))))
def test_brackets_lie_deep(data):
    k, ws = data
    w = ws[0]
    for x in ws[1:]:
        w = word_commutator(w, x)
    d = filtration_degree(w, 4)
    assert d is None or d >= k


# ---------------------------------------------------------------------------
# Johnson homomorphisms


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(magnus_words(n), magnus_words(n))))
def test_tau_additive(pair):
    u, v = pair
    assert tau(u * v) == tau(u) + tau(v)


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(any_words(n, 3), magnus_words(n, 3))))
def test_tau_equivariant_under_nielsen(pair):
    phi, a = pair
    A = abelianization_matrix(evaluate(phi))
    assert tau(phi * a * phi.inverse()) == apply_group(A, tau(a))


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(
    st.just(n), *(st.sampled_from(magnus_letters(n)) for _ in range(3)))))
def test_tau2_kills_double_commutators(data):
    n, a, b, c = data
    u, v, w = (AutWord.of(n, x) for x in (a, b, c))
    assert tau2(aut_commutator(aut_commutator(u, v), w)).is_zero()


def _derivation(a):
    """tau(a) as x_j -> degree-2 tensor."""
    out = {}
    for (wedge, j), c in tau(a).coords.items():
        p, q = wedge
        d = out.setdefault(j, {})
        d[(p, q)] = d.get((p, q), 0) + c
        d[(q, p)] = d.get((q, p), 0) - c
    return out


def _apply_derivation(D, tensor):
    out = {}
    for m, c in tensor.items():
        for t, letter in enumerate(m):
            for img, v in D.get(letter, {}).items():
                key = m[:t] + img + m[t + 1:]
                out[key] = out.get(key, 0) + c * v
    return {k: v for k, v in out.items() if v}


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.sampled_from(magnus_letters(n)),
                                                     st.sampled_from(magnus_letters(n)),
                                                     st.just(n))))
def test_tau2_matches_derivation_bracket(data):
    """Independent oracle: the class of [u,v] is the commutator of the derivations."""
    a, b, n = data
    u, v = AutWord.of(n, a), AutWord.of(n, b)
    Du, Dv = _derivation(u), _derivation(v)
    e = evaluate(aut_commutator(u, v))
    for j in range(1, n + 1):
        want = {}
        for sign, first, second in ((1, Du, Dv), (-1, Dv, Du)):
            for k, c in _apply_derivation(first, second.get(j, {})).items():
                want[k] = want.get(k, 0) + sign * c
        got = leading_term(e.images[j - 1] * Word.gen(j, -1), 3).coeffs
        assert {k: c for k, c in got.items() if c} == {k: c for k, c in want.items() if c}


@given(st.integers(3, 4).flatmap(lambda n: st.tuples(st.sampled_from(magnus_letters(n)),
                                                     st.sampled_from(magnus_letters(n)),
                                                     st.just(n))))
def test_cycle_antisymmetry(data):
    a, b, n = data
    u, v = AutWord.of(n, a), AutWord.of(n, b)
    if compose(evaluate(u), evaluate(v)) != compose(evaluate(v), evaluate(u)):
        return
    assert abelian_cycle_image(u, v) == -1 * abelian_cycle_image(v, u)


# ---------------------------------------------------------------------------
# gl(n) modules


leaf = st.integers(2, 3).flatmap(lambda n: st.sampled_from([Std(n), Dual(Std(n))]))


def _combine(children):
    pairs = st.tuples(children, children).filter(lambda p: p[0].n == p[1].n)
    return st.one_of(pairs.map(lambda p: Tensor(*p)), children.map(lambda m: Wedge(m, 2)))


modules = st.recursive(leaf, _combine, max_leaves=4).filter(lambda m: 1 <= m.dim <= 120)


@given(modules)
def test_decompose_dual(m):
    d = decompose(m)
    dual = decompose(Dual(m))
    assert dual == Counter({lambda_dual(lam): k for lam, k in d.items()})
    assert character_decompose(m) == d


@st.composite
def module_vectors(draw):
    m = draw(modules)
    keys = draw(st.lists(st.sampled_from(m.basis), min_size=1, max_size=4))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(keys), max_size=len(keys)))
    return m.element(dict(zip(keys, coeffs)))


@given(module_vectors(), st.data())
def test_gl_commutator_identity(v, data):
    n = v.module.n
    i, j, k, l = (data.draw(st.integers(1, n)) for _ in range(4))
    lhs = apply_eij(i, j, apply_eij(k, l, v)) - apply_eij(k, l, apply_eij(i, j, v))
    rhs = v.module.zero()
    if j == k:
        rhs = rhs + apply_eij(i, l, v)
    if l == i:
        rhs = rhs - apply_eij(k, j, v)
    assert lhs == rhs


@st.composite
def dominant_weights(draw):
    n = draw(ranks)
    cols = draw(st.lists(st.integers(1, n), max_size=4))
    shift = draw(st.integers(-1, 1))
    return n, sorted(cols, reverse=True), shift


@given(dominant_weights())
def test_weyl_dimension_by_lowering(data):
    n, cols, shift = data
    h = Std(n)
    lam = tuple(sum(1 for c in cols if c > i) + shift for i in range(n))
    assume(weyl_dimension(lam) <= 200)
    e = h.basis_element
    v = None
    for c in cols + ([n] if shift == 1 else []):
        piece = wedge_elements(*(e(i) for i in range(1, c + 1)))
        v = piece if v is None else tensor_elements(v, piece)
    if shift == -1:
        hs = Dual(h)
        det = wedge_elements(*(hs.basis_element(i) for i in range(1, n + 1)))
        v = det if v is None else tensor_elements(v, det)
    if v is None:
        assert weyl_dimension(lam) == 1
        return
    assert is_highest_weight_vector(v) and v.weight == lam
    assert generated_dimension(v) == weyl_dimension(lam)


MAP_CASES = [(name, n) for n in (3, 4) for name in
             ("f1", "f2", "f", "g1", "g2", "h1", "h2", "k", "l", "m", "nmap", "contract3", "wedge12")]


@given(st.sampled_from(MAP_CASES), st.data())
def test_named_maps_equivariant(case, data):
    name, n = case
    domain = map_modules(n)[name][0]
    keys = data.draw(st.lists(st.sampled_from(domain.basis), min_size=1, max_size=3))
    v = domain.element({k: 1 + t for t, k in enumerate(keys)})
    i, j = data.draw(st.integers(1, n)), data.draw(st.integers(1, n))
    assert named_map(name, apply_eij(i, j, v)) == apply_eij(i, j, named_map(name, v))


def test_alt_depends_on_the_representative():
    """alt is defined on wedge keys written with a < b, so it is not equivariant."""
    n = 3
    v = map_modules(n)["alt"][0].basis_element((((1, 2), 3), 3))
    lhs = named_map("alt", apply_eij(2, 1, v))
    rhs = apply_eij(2, 1, named_map("alt", v))
    assert lhs != rhs
