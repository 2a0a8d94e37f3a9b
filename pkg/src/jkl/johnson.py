"""Johnson homomorphisms on IA_n and the equivariant maps used to probe them.

``tau`` records f(x_j) x_j^-1 modulo F^(3) and lands in
U = wedge^2 H (x) H^*; ``tau2`` is defined on ker(tau) and records the same
words in F^(3)/F^(4), landing in ((wedge^2 H (x) H)/wedge^3 H) (x) H^*.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from .freegroup import (AutWord, Endomorphism, G, Word, abelianization_matrix,
                        compose, evaluate, is_IA)
from .glrep import (DomainError, Module, ModuleElement, Quotient, Std, Dual, Tensor, Wedge,
                    U, lie3, linear_map, tau2_lift_target, tau2_target, wedge_elements)
from .linalg import add_into, sort_sign
from .magnus import (DEFAULT_DEGREE, dsw_left_normed, filtration_degree, l2_to_wedge,
                     l3_to_quotient, leading_term)


class NotIA(ValueError):
    def __init__(self, matrix):
        self.matrix = matrix
        super().__init__(f"not an IA automorphism (abelianization {matrix})")


class NotInKernel(ValueError):
    pass


class NotCommuting(ValueError):
    pass


def _defects(e: Endomorphism) -> List[Tuple[int, Word]]:
    out = []
    for j, img in enumerate(e.images, start=1):
        w = img * Word.gen(j, -1)
        if not w.is_identity():
            out.append((j, w))
    return out


def _as_endomorphism(a) -> Endomorphism:
    return a if isinstance(a, Endomorphism) else evaluate(a)


def tau(a) -> ModuleElement:
    """Johnson homomorphism of an AutWord (or an already evaluated endomorphism)."""
    e = _as_endomorphism(a)
    if not is_IA(e):
        raise NotIA(abelianization_matrix(e))
    n = e.n
    out: Dict = {}
    for j, w in _defects(e):
        wedge = l2_to_wedge(leading_term(w, 2), n)
        for k, c in wedge.coords.items():
            add_into(out, {(k, j): c})
    return U(n).element(out)


def tau2(a) -> ModuleElement:
    e = _as_endomorphism(a)
    if not tau(e).is_zero():
        raise NotInKernel("not in ker τ")
    n = e.n
    target = tau2_target(n)
    out: Dict = {}
    for j, w in _defects(e):
        cls = l3_to_quotient(dsw_left_normed(leading_term(w, 3)), n)
        for k, c in cls.coords.items():
            add_into(out, {(k, j): c})
    return target.element(out)


def in_K(a, i: int, degree: int = DEFAULT_DEGREE) -> bool:
    """Membership in the Andreadakis filtration: trivial action on F/F^(i+1)."""
    if i not in (1, 2, 3):
        raise ValueError("only K^(1), K^(2), K^(3) are supported")
    e = _as_endomorphism(a)
    if i == 1:
        return is_IA(e)
    for j, img in enumerate(e.images, start=1):
        w = img * Word.gen(j, -1)
        d = filtration_degree(w, max(degree, i + 1))
        if d is not None and d < i + 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Inner automorphisms and the outer quotients


def conjugation_word(n: int, k: int) -> AutWord:
    """Inner automorphism w -> x_k w x_k^-1 as a product of Magnus letters."""
    return AutWord(tuple(G(k, i) for i in range(1, n + 1) if i != k), n)


def inner_embed(k: int, n: int) -> ModuleElement:
    out: Dict = {}
    for i in range(1, n + 1):
        sign, key = sort_sign((k, i))
        if sign:
            out[(key, i)] = sign
    return U(n).element(out)


def inner_embed2(j: int, k: int, n: int) -> ModuleElement:
    sign, key = sort_sign((j, k))
    L = lie3(n)
    out: Dict = {}
    if sign:
        for i in range(1, n + 1):
            cls = L.element({(key, i): sign})
            for kk, c in cls.coords.items():
                add_into(out, {(kk, i): c})
    return tau2_target(n).element(out)


@lru_cache(maxsize=None)
def outer_target(n: int) -> Quotient:
    """(wedge^2 H (x) H^*) / H."""
    return Quotient.build(U(n), [inner_embed(k, n).coords for k in range(1, n + 1)],
                          "(wedge2(H)⊗dual(H))/H")


@lru_cache(maxsize=None)
def outer_target2(n: int) -> Quotient:
    rels = [inner_embed2(j, k, n).coords for j, k in itertools.combinations(range(1, n + 1), 2)]
    return Quotient.build(tau2_target(n), rels, "((wedge2(H)⊗H)/wedge3(H)⊗dual(H))/wedge2(H)")


def tau_bar(a) -> ModuleElement:
    return outer_target(_as_endomorphism(a).n).element(tau(a).coords)


def tau2_bar(a) -> ModuleElement:
    return outer_target2(_as_endomorphism(a).n).element(tau2(a).coords)


# ---------------------------------------------------------------------------
# Abelian cycles


def abelian_cycle_image(u: AutWord, v: AutWord) -> ModuleElement:
    """tau(u) ^ tau(v) in wedge^2 U, for automorphisms that commute."""
    eu, ev = evaluate(u), evaluate(v)
    if compose(eu, ev) != compose(ev, eu):
        raise NotCommuting("the two automorphisms do not commute")
    return wedge_elements(tau(eu), tau(ev))


# ---------------------------------------------------------------------------
# Equivariant contraction maps


@lru_cache(maxsize=None)
def _T(n: int) -> Tensor:
    """H (x) H (x) H^*."""
    return Tensor(Tensor(Std(n), Std(n)), Dual(Std(n)))


@lru_cache(maxsize=None)
def _H3Hs(n: int) -> Tensor:
    return Tensor(Tensor(Tensor(Std(n), Std(n)), Std(n)), Dual(Std(n)))


@lru_cache(maxsize=None)
def map_modules(n: int) -> Dict[str, Tuple[Module, Module]]:
    h, hs = Std(n), Dual(Std(n))
    w2 = Wedge(h, 2)
    uu = Tensor(U(n), U(n))
    tt = Tensor(_T(n), _T(n))
    return {
        "f1": (Wedge(U(n), 2), uu),
        "f2": (uu, tt),
        "f": (Wedge(U(n), 2), tt),
        "g1": (tt, w2),
        "g2": (tt, w2),
        "h1": (tt, _H3Hs(n)),
        "h2": (tt, _H3Hs(n)),
        "k": (tt, Tensor(Tensor(w2, w2), Wedge(hs, 2))),
        "l": (tt, Tensor(Tensor(Tensor(Wedge(h, 3), h), hs), hs)),
        "m": (tt, Tensor(Tensor(h, w2), hs)),
        "nmap": (tt, Tensor(Wedge(h, 4), Wedge(hs, 2))),
        "alt": (tau2_lift_target(n), _H3Hs(n)),
        "contract3": (_H3Hs(n), w2),
        "wedge12": (_H3Hs(n), tau2_lift_target(n)),
    }


def _wedge_key(*xs) -> Dict:
    sign, key = sort_sign(xs)
    return {key: sign} if sign else {}


def _f1(key):
    u1, u2 = key
    return {(u1, u2): 1, (u2, u1): -1}


def _expand_u(ukey):
    (a, b), c = ukey
    return [(((a, b), c), 1), (((b, a), c), -1)]


def _f2(key):
    x, y = key
    out: Dict = {}
    for kx, cx in _expand_u(x):
        for ky, cy in _expand_u(y):
            out[(kx, ky)] = out.get((kx, ky), 0) + cx * cy
    return out


def _f(key):
    out: Dict = {}
    for k, c in _f1(key).items():
        add_into(out, _f2(k), c)
    return out


def _unpack(key):
    ((a1, b1), c1), ((a2, b2), c2) = key
    return a1, b1, c1, a2, b2, c2


def _g1(key):
    a1, b1, c1, a2, b2, c2 = _unpack(key)
    return _wedge_key(a1, a2) if c1 == b2 and c2 == b1 else {}


def _g2(key):
    a1, b1, c1, a2, b2, c2 = _unpack(key)
    return _wedge_key(a1, a2) if c1 == b1 and c2 == b2 else {}


def _h1(key):
    a1, b1, c1, a2, b2, c2 = _unpack(key)
    return {(((a1, a2), b2), c2): 1} if c1 == b1 else {}


def _h2(key):
    a1, b1, c1, a2, b2, c2 = _unpack(key)
    return {(((a1, a2), b1), c2): 1} if c1 == b2 else {}


def _k(key):
    a1, b1, c1, a2, b2, c2 = _unpack(key)
    s1, w1 = sort_sign((a1, b1))
    s2, w2 = sort_sign((a2, b2))
    s3, w3 = sort_sign((c1, c2))
    s = s1 * s2 * s3
    return {((w1, w2), w3): s} if s else {}


def _l(key):
    a1, b1, c1, a2, b2, c2 = _unpack(key)
    s, w = sort_sign((a1, a2, b1))
    return {(((w, b2), c1), c2): s} if s else {}


def _m(key):
    a1, b1, c1, a2, b2, c2 = _unpack(key)
    if c1 != b1:
        return {}
    s, w = sort_sign((a2, b2))
    return {((a1, w), c2): s} if s else {}


def _nmap(key):
    a1, b1, c1, a2, b2, c2 = _unpack(key)
    s1, w1 = sort_sign((a1, a2, b1, b2))
    s2, w2 = sort_sign((c1, c2))
    return {(w1, w2): s1 * s2} if s1 * s2 else {}


def _alt(key):
    (((a, b), c), d) = key
    out: Dict = {}
    for t, s in ((a, b, c), 1), ((b, a, c), -1), ((c, b, a), 1), ((b, c, a), -1):
        k = (((t[0], t[1]), t[2]), d)
        out[k] = out.get(k, 0) + s
    return {k: c for k, c in out.items() if c}


def _contract3(key):
    (((a, b), c), d) = key
    return _wedge_key(a, b) if c == d else {}


def _wedge12(key):
    (((a, b), c), d) = key
    s, w = sort_sign((a, b))
    return {((w, c), d): s} if s else {}


_KEY_MAPS: Dict[str, Callable] = {
    "f1": _f1, "f2": _f2, "f": _f, "g1": _g1, "g2": _g2, "h1": _h1, "h2": _h2,
    "k": _k, "l": _l, "m": _m, "nmap": _nmap, "n": _nmap,
    "alt": _alt, "contract3": _contract3, "wedge12": _wedge12,
}

MAP_NAMES = ("f1", "f2", "f", "g1", "g2", "h1", "h2", "k", "l", "m", "nmap",
             "alt", "contract3", "wedge12")


def lift(v: ModuleElement) -> ModuleElement:
    """Normal-form representative of a tau2 value in (wedge^2 H (x) H) (x) H^*."""
    n = v.module.n
    if v.module != tau2_target(n):
        raise DomainError(f"expected an element of {tau2_target(n).name}")
    return tau2_lift_target(n).element(v.coords)


def named_map(name: str, v: ModuleElement) -> ModuleElement:
    if name not in _KEY_MAPS:
        raise KeyError(f"unknown map {name!r}")
    name = "nmap" if name == "n" else name
    n = v.module.n
    if name == "alt" and v.module == tau2_target(n):
        v = lift(v)
    domain, codomain = map_modules(n)[name]
    return linear_map(domain, codomain, _KEY_MAPS[name], v)


def chain(v: ModuleElement, *steps) -> ModuleElement:
    """Apply steps right to left: maps by name, (i, j) tuples as E_ij."""
    from .glrep import apply_eij

    for step in reversed(steps):
        if isinstance(step, tuple):
            v = apply_eij(step[0], step[1], v)
        else:
            v = named_map(step, v)
    return v
