"""Weight modules for GL(n, Q) built from combinators.

Every module has a deterministic basis of hashable, orderable keys, a
weight for each key, and the action of the elementary matrices E_ij of
gl(n).  Quotients keep their elements in a normal form obtained by
eliminating, weight space by weight space, the smallest key of each
relation.  Highest weight vectors are computed as exact joint kernels of
the raising operators E_{i,i+1}.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Hashable, Iterable, List, Mapping, Sequence, Tuple

from . import linalg
from .linalg import Echelon, add_into, sort_sign

Weight = Tuple[int, ...]
Lambda = Tuple[int, ...]
PhiLabel = Tuple[int, ...]


class ModuleError(ValueError):
    pass


class DomainError(ValueError):
    pass


class Module:
    """Base class; subclasses implement the per-key primitives."""

    # subclasses: n, _keys(), _weight(key), _act(i, j, key), label(key)

    def __str__(self) -> str:
        return self.name

    @cached_property
    def basis(self) -> List[Hashable]:
        return self._keys()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _index(self) -> Dict[Hashable, int]:
        return {k: t for t, k in enumerate(self.basis)}

    @cached_property
    def _weights(self) -> Dict[Hashable, Weight]:
        return {}

    def weight(self, key) -> Weight:
        w = self._weights.get(key)
        if w is None:
            w = self._weights[key] = self._weight(key)
        return w

    @cached_property
    def weight_spaces(self) -> Dict[Weight, List[Hashable]]:
        spaces: Dict[Weight, List[Hashable]] = {}
        for k in self.basis:
            spaces.setdefault(self.weight(k), []).append(k)
        return spaces

    @cached_property
    def _act_cache(self) -> Dict[tuple, Dict]:
        return {}

    def act(self, i: int, j: int, key) -> Dict[Hashable, Fraction]:
        ck = (i, j, key)
        r = self._act_cache.get(ck)
        if r is None:
            r = self._act_cache[ck] = self._act(i, j, key)
        return r

    def normalize(self, vec: Dict) -> Dict:
        return vec

    def element(self, coords: Mapping = ()) -> "ModuleElement":
        vec = {k: Fraction(c) for k, c in dict(coords).items() if c}
        return ModuleElement(self, self.normalize(vec))

    def basis_element(self, key) -> "ModuleElement":
        return self.element({key: 1})

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, {})

    @property
    def has_quotient(self) -> bool:
        return False

    @cached_property
    def labels(self) -> Dict[str, Hashable]:
        return {self.label(k): k for k in self.basis}


def _wrap(module: Module, text: str) -> str:
    return f"({text})" if isinstance(module, Tensor) else text


@dataclass(frozen=True, eq=True)
class Std(Module):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ModuleError("rank must be positive")

    @property
    def name(self) -> str:
        return "H"

    def _keys(self):
        return list(range(1, self.n + 1))

    def _weight(self, key):
        return tuple(int(t == key - 1) for t in range(self.n))

    def _act(self, i, j, key):
        return {i: Fraction(1)} if key == j else {}

    def act_group(self, g, ginvt, key):
        return {r + 1: Fraction(g[r][key - 1]) for r in range(self.n) if g[r][key - 1]}

    def label(self, key) -> str:
        return str(key)


@dataclass(frozen=True, eq=True)
class Dual(Module):
    inner: Module

    def __post_init__(self):
        if self.inner.has_quotient:
            raise ModuleError("dual of a quotient or submodule is not supported")

    @property
    def n(self):
        return self.inner.n

    @property
    def name(self) -> str:
        return f"dual({self.inner.name})"

    def _keys(self):
        return list(self.inner.basis)

    def _weight(self, key):
        return tuple(-x for x in self.inner.weight(key))

    def _act(self, i, j, key):
        # transpose of E_ij on an orthonormal functorial basis is E_ji
        return {k: -c for k, c in self.inner.act(j, i, key).items()}

    def act_group(self, g, ginvt, key):
        return self.inner.act_group(ginvt, g, key)

    def label(self, key) -> str:
        s = self.inner.label(key)
        return f"({s})*" if isinstance(self.inner, (Tensor, Dual)) else s + "*"


@dataclass(frozen=True, eq=True)
class Tensor(Module):
    left: Module
    right: Module

    def __post_init__(self):
        if self.left.n != self.right.n:
            raise ModuleError("tensor factors have different rank")

    @property
    def n(self):
        return self.left.n

    @property
    def name(self) -> str:
        return f"{_wrap(self.left, self.left.name)}⊗{_wrap(self.right, self.right.name)}"

    @property
    def has_quotient(self) -> bool:
        return self.left.has_quotient or self.right.has_quotient

    def _keys(self):
        return list(itertools.product(self.left.basis, self.right.basis))

    def _weight(self, key):
        a, b = key
        return tuple(x + y for x, y in zip(self.left.weight(a), self.right.weight(b)))

    def _act(self, i, j, key):
        a, b = key
        out: Dict = {}
        for a2, c in self.left.act(i, j, a).items():
            out[(a2, b)] = out.get((a2, b), 0) + c
        for b2, c in self.right.act(i, j, b).items():
            k = (a, b2)
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def act_group(self, g, ginvt, key):
        a, b = key
        ra = self.left.act_group(g, ginvt, a)
        rb = self.right.act_group(g, ginvt, b)
        return {(x, y): cx * cy for x, cx in ra.items() for y, cy in rb.items()}

    def label(self, key) -> str:
        a, b = key
        return f"{_wrap(self.left, self.left.label(a))}⊗{_wrap(self.right, self.right.label(b))}"


@dataclass(frozen=True, eq=True)
class Wedge(Module):
    inner: Module
    k: int

    def __post_init__(self):
        if self.inner.has_quotient:
            raise ModuleError("exterior powers of quotients are not supported")
        if self.k < 1:
            raise ModuleError("exterior degree must be positive")

    @property
    def n(self):
        return self.inner.n

    @property
    def name(self) -> str:
        return f"wedge{self.k}({self.inner.name})"

    def _keys(self):
        return list(itertools.combinations(self.inner.basis, self.k))

    def _weight(self, key):
        w = [0] * self.n
        for f in key:
            for t, x in enumerate(self.inner.weight(f)):
                w[t] += x
        return tuple(w)

    def _act(self, i, j, key):
        out: Dict = {}
        for p, f in enumerate(key):
            for f2, c in self.inner.act(i, j, f).items():
                sign, new = sort_sign(key[:p] + (f2,) + key[p + 1:])
                if sign:
                    s = out.get(new, 0) + sign * c
                    if s:
                        out[new] = s
                    else:
                        out.pop(new, None)
        return out

    def act_group(self, g, ginvt, key):
        images = [self.inner.act_group(g, ginvt, f) for f in key]
        out: Dict = {}
        for combo in itertools.product(*(list(im.items()) for im in images)):
            sign, new = sort_sign(tuple(x for x, _ in combo))
            if sign:
                c = sign
                for _, cx in combo:
                    c *= cx
                out[new] = out.get(new, 0) + c
        return {k: c for k, c in out.items() if c}

    def label(self, key) -> str:
        parts = [self.inner.label(f) for f in key]
        if isinstance(self.inner, (Tensor, Wedge)):
            parts = [f"({p})" for p in parts]
        return "(" + "^".join(parts) + ")"


def _freeze(vec: Mapping) -> Tuple:
    return tuple(sorted((k, Fraction(c)) for k, c in vec.items() if c))


def _split_weights(module: Module, vec: Mapping) -> List[Dict]:
    parts: Dict[Weight, Dict] = {}
    for k, c in vec.items():
        if c:
            parts.setdefault(module.weight(k), {})[k] = Fraction(c)
    return list(parts.values())


@dataclass(frozen=True, eq=True)
class Quotient(Module):
    """``inner`` modulo the span of ``relations`` (which must be invariant)."""

    inner: Module
    relations: Tuple[Tuple, ...]
    label_text: str = ""

    @staticmethod
    def build(inner: Module, relations: Iterable[Mapping], name: str = "",
              check: bool = True) -> "Quotient":
        q = Quotient(inner, tuple(_freeze(inner.normalize(dict(r))) for r in relations), name)
        if check:
            q.check_invariant()
        return q

    @property
    def n(self):
        return self.inner.n

    @property
    def name(self) -> str:
        return self.label_text or f"({self.inner.name})/<{len(self.relations)} relations>"

    @property
    def has_quotient(self) -> bool:
        return True

    @cached_property
    def _echelon(self) -> Echelon:
        known = set(self.inner.basis)
        ech = Echelon()
        for rel in self.relations:
            vec = dict(rel)
            if any(k not in known for k in vec):
                raise ModuleError("relation has coordinates outside the module basis")
            for part in _split_weights(self.inner, vec):
                ech.insert(part)
        return ech

    def check_invariant(self) -> None:
        ech = self._echelon
        for row in list(ech.rows.values()):
            for i in range(1, self.n + 1):
                for j in range(1, self.n + 1):
                    img: Dict = {}
                    for k, c in row.items():
                        add_into(img, self.inner.act(i, j, k), c)
                    if not ech.contains(self.inner.normalize(img)):
                        raise ModuleError("relations do not span a submodule")

    def _keys(self):
        pivots = self._echelon.rows
        return [k for k in self.inner.basis if k not in pivots]

    def _weight(self, key):
        return self.inner.weight(key)

    def normalize(self, vec):
        return self._echelon.reduce(self.inner.normalize(vec))

    def _act(self, i, j, key):
        return self.normalize(self.inner.act(i, j, key))

    def act_group(self, g, ginvt, key):
        return self.normalize(self.inner.act_group(g, ginvt, key))

    def lift(self, vec: Mapping) -> Dict:
        return dict(vec)

    def label(self, key) -> str:
        return f"[{self.inner.label(key)}]"


@dataclass(frozen=True, eq=True)
class Submodule(Module):
    """The span of ``generators`` inside ``inner``; must be invariant."""

    inner: Module
    generators: Tuple[Tuple, ...]
    label_text: str = ""

    @staticmethod
    def build(inner: Module, generators: Iterable[Mapping], name: str = "",
              check: bool = True) -> "Submodule":
        s = Submodule(inner, tuple(_freeze(inner.normalize(dict(g))) for g in generators), name)
        if check:
            s.check_invariant()
        return s

    @property
    def n(self):
        return self.inner.n

    @property
    def name(self) -> str:
        return self.label_text or f"span<{len(self.generators)}>⊂{self.inner.name}"

    @property
    def has_quotient(self) -> bool:
        return True

    @cached_property
    def _echelon(self) -> Echelon:
        ech = Echelon()
        for gen in self.generators:
            for part in _split_weights(self.inner, dict(gen)):
                ech.insert(part)
        return ech

    @cached_property
    def _rows(self) -> List[Tuple[Hashable, Dict]]:
        rows = sorted(self._echelon.rows.items(),
                      key=lambda t: (tuple(-x for x in self.inner.weight(t[0])), t[0]))
        return rows

    @cached_property
    def _pivot_index(self) -> Dict[Hashable, int]:
        return {p: t for t, (p, _) in enumerate(self._rows)}

    def check_invariant(self) -> None:
        for t in range(len(self._rows)):
            for i in range(1, self.n + 1):
                for j in range(1, self.n + 1):
                    self._act(i, j, t)

    def _keys(self):
        return list(range(len(self._rows)))

    def _weight(self, key):
        return self.inner.weight(self._rows[key][0])

    def coordinates(self, vec: Mapping) -> Dict[int, Fraction]:
        vec = self.inner.normalize(dict(vec))
        try:
            coords = self._echelon.coordinates(vec)
        except ValueError:
            raise ModuleError("vector is not in the submodule") from None
        return {self._pivot_index[p]: c for p, c in coords.items()}

    def embed(self, key) -> Dict:
        return dict(self._rows[key][1])

    def _act(self, i, j, key):
        img: Dict = {}
        for k, c in self._rows[key][1].items():
            add_into(img, self.inner.act(i, j, k), c)
        return self.coordinates(img)

    def act_group(self, g, ginvt, key):
        img: Dict = {}
        for k, c in self._rows[key][1].items():
            add_into(img, self.inner.act_group(g, ginvt, k), c)
        return self.coordinates(img)

    def label(self, key) -> str:
        return f"<{key}>"


# ---------------------------------------------------------------------------
# Elements


@dataclass(frozen=True, eq=False)
class ModuleElement:
    module: Module
    coords: Dict[Hashable, Fraction] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return (isinstance(other, ModuleElement) and self.module == other.module
                and self.coords == other.coords)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coords

    def _check(self, other: "ModuleElement"):
        if self.module != other.module:
            raise DomainError(f"cannot combine {self.module} with {other.module}")

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._check(other)
        return ModuleElement(self.module, add_into(dict(self.coords), other.coords))

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        self._check(other)
        return ModuleElement(self.module, add_into(dict(self.coords), other.coords, -1))

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.module, {k: -c for k, c in self.coords.items()})

    def __rmul__(self, scalar) -> "ModuleElement":
        if scalar == 0:
            return self.module.zero()
        return ModuleElement(self.module, {k: scalar * c for k, c in self.coords.items()})

    def __getitem__(self, key) -> Fraction:
        return self.coords.get(key, Fraction(0))

    def weights(self) -> List[Weight]:
        return sorted({self.module.weight(k) for k in self.coords})

    @property
    def weight(self) -> Weight:
        ws = self.weights()
        if len(ws) != 1:
            raise ModuleError("element is not a weight vector")
        return ws[0]

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for k in self.module.basis if len(self.coords) > 64 else sorted(self.coords):
            if k not in self.coords:
                continue
            c = self.coords[k]
            parts.append(f"{fmt_scalar(c)}*{self.module.label(k)}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ModuleElement({self.module.name}: {self})"


def fmt_scalar(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def linear_map(domain: Module, codomain: Module, on_key, v: ModuleElement) -> ModuleElement:
    """Linear extension of ``on_key`` (key -> dict on codomain keys)."""
    if v.module != domain:
        raise DomainError(f"expected an element of {domain.name}, got {v.module.name}")
    out: Dict = {}
    for k, c in v.coords.items():
        add_into(out, on_key(k), c)
    return codomain.element(out)


def tensor_elements(x: ModuleElement, y: ModuleElement) -> ModuleElement:
    m = Tensor(x.module, y.module)
    return ModuleElement(m, {(a, b): ca * cb for a, ca in x.coords.items()
                             for b, cb in y.coords.items()})


def wedge_elements(*xs: ModuleElement) -> ModuleElement:
    inner = xs[0].module
    for x in xs:
        if x.module != inner:
            raise DomainError("wedge factors must lie in the same module")
    m = Wedge(inner, len(xs))
    out: Dict = {}
    for combo in itertools.product(*(list(x.coords.items()) for x in xs)):
        sign, key = sort_sign(tuple(k for k, _ in combo))
        if sign:
            c = Fraction(sign)
            for _, cx in combo:
                c *= cx
            add_into(out, {key: c})
    return ModuleElement(m, out)


# ---------------------------------------------------------------------------
# gl(n) and GL(n) actions


def apply_eij(i: int, j: int, v: ModuleElement) -> ModuleElement:
    m = v.module
    if not (1 <= i <= m.n and 1 <= j <= m.n):
        raise ModuleError(f"E_{i}{j} out of range for n={m.n}")
    out: Dict = {}
    for k, c in v.coords.items():
        add_into(out, m.act(i, j, k), c)
    return ModuleElement(m, out)


def apply_group(g: Sequence[Sequence], v: ModuleElement) -> ModuleElement:
    """Action of an invertible rational matrix (columns are images of e_j)."""
    m = v.module
    g = [[Fraction(x) for x in row] for row in g]
    ginvt = linalg.transpose(linalg.inverse(g))
    out: Dict = {}
    for k, c in v.coords.items():
        add_into(out, m.act_group(g, ginvt, k), c)
    return ModuleElement(m, m.normalize(out))


def is_dominant(weight: Sequence[int]) -> bool:
    return all(weight[t] >= weight[t + 1] for t in range(len(weight) - 1))


def is_highest_weight_vector(v: ModuleElement) -> bool:
    if v.is_zero():
        return False
    v.weight  # raises if not homogeneous
    return all(apply_eij(i, i + 1, v).is_zero() for i in range(1, v.module.n))


def hwv_space(module: Module, mu: Weight) -> List[ModuleElement]:
    keys = module.weight_spaces.get(tuple(mu), [])
    n = module.n
    images = []
    for k in keys:
        img: Dict = {}
        for i in range(1, n):
            for k2, c in module.act(i, i + 1, k).items():
                img[(i, k2)] = c
        images.append(img)
    return [ModuleElement(module, {keys[t]: c for t, c in vec.items()})
            for vec in linalg.kernel(images)]


def highest_weight_vectors(module: Module) -> List[Tuple[Weight, List[ModuleElement]]]:
    out = []
    for mu in sorted(module.weight_spaces, reverse=True):
        if not is_dominant(mu):
            continue
        vecs = hwv_space(module, mu)
        if vecs:
            out.append((mu, vecs))
    return out


def decompose(module: Module) -> Counter:
    """Multiplicities of irreducibles, keyed by dominant weight (lambda form)."""
    result: Counter = Counter()
    for mu in module.weight_spaces:
        if is_dominant(mu):
            m = len(hwv_space(module, mu))
            if m:
                result[mu] = m
    total = sum(m * weyl_dimension(lam) for lam, m in result.items())
    if total != module.dim:
        raise AssertionError(f"dimension accounting failed for {module.name}: "
                             f"{total} != {module.dim}")
    return result


def highest_weight_rank(vectors: Sequence[Sequence[ModuleElement]], weight: Weight) -> int:
    """Number of copies of the irreducible of highest weight ``weight`` detected.

    Each entry of ``vectors`` is a tuple of components in a direct sum of
    modules, all of weight ``weight``.  The result is their rank modulo the
    lowered subspace sum_i E_{i+1,i} N_{weight + alpha_i}, which a weight
    space splits off from its highest weight vectors.
    """
    if not vectors:
        return 0
    modules = [c.module for c in vectors[0]]
    n = modules[0].n
    ech = Echelon()
    for t, m in enumerate(modules):
        for i in range(1, n):
            up = list(weight)
            up[i - 1] += 1
            up[i] -= 1
            for k in m.weight_spaces.get(tuple(up), []):
                img = {(t, k2): c for k2, c in m.act(i + 1, i, k).items()}
                if img:
                    ech.insert(img)
    base = ech.rank
    for vec in vectors:
        flat = {}
        for t, comp in enumerate(vec):
            if comp.module != modules[t]:
                raise DomainError("direct-sum components do not match")
            if comp.coords and comp.weight != tuple(weight):
                raise ModuleError("vector does not have the requested weight")
            flat.update({(t, k): c for k, c in comp.coords.items()})
        ech.insert(flat)
    return ech.rank - base


def character_decompose(module: Module) -> Counter:
    """Multiplicities from weight multiplicities alone (Weyl character formula).

    m_lambda = sum over permutations w of sign(w) * dim M_{lambda + rho - w rho}.
    Shares no code with :func:`decompose` beyond the weight bookkeeping.
    """
    n = module.n
    rho = tuple(range(n - 1, -1, -1))
    mult = {w: len(keys) for w, keys in module.weight_spaces.items()}
    shifts = []
    for perm in itertools.permutations(range(n)):
        sign, _ = sort_sign(perm)
        shifts.append((sign, tuple(rho[t] - rho[perm[t]] for t in range(n))))
    out: Counter = Counter()
    for lam in mult:
        if not is_dominant(lam):
            continue
        m = sum(sign * mult.get(tuple(a + b for a, b in zip(lam, d)), 0) for sign, d in shifts)
        if m:
            out[lam] = m
    return out


def generated_dimension(v: ModuleElement) -> int:
    """Dimension of the span of v under repeated lowering operators E_{i+1,i}."""
    m = v.module
    spaces: Dict[Weight, Echelon] = {}
    frontier = []
    for part in _split_weights(m, v.coords):
        w = m.weight(next(iter(part)))
        ech = spaces.setdefault(w, Echelon())
        if ech.insert(part) is None:
            frontier.append(part)
    while frontier:
        nxt = []
        for vec in frontier:
            for i in range(1, m.n):
                img: Dict = {}
                for k, c in vec.items():
                    add_into(img, m.act(i + 1, i, k), c)
                if not img:
                    continue
                w = m.weight(next(iter(img)))
                ech = spaces.setdefault(w, Echelon())
                if ech.insert(img) is None:
                    nxt.append(img)
        frontier = nxt
    return sum(e.rank for e in spaces.values())


# ---------------------------------------------------------------------------
# Labels and dimensions


def phi_to_lambda(a: Sequence[int]) -> Lambda:
    out, s = [], 0
    for x in reversed(a):
        s += x
        out.append(s)
    return tuple(reversed(out))


def lambda_to_phi(lam: Sequence[int]) -> PhiLabel:
    lam = tuple(lam)
    return tuple(lam[t] - lam[t + 1] for t in range(len(lam) - 1)) + (lam[-1],)


def lambda_dual(lam: Sequence[int]) -> Lambda:
    return tuple(-x for x in reversed(lam))


def phi_dual(a: Sequence[int]) -> PhiLabel:
    return lambda_to_phi(lambda_dual(phi_to_lambda(a)))


def weyl_dimension(lam: Sequence[int]) -> int:
    if not is_dominant(lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")
    d = Fraction(1)
    n = len(lam)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert d.denominator == 1
    return int(d)


def weyl_dimension_phi(a: Sequence[int]) -> int:
    if any(x < 0 for x in a[:-1]):
        raise ValueError(f"label {tuple(a)} is not dominant")
    return weyl_dimension(phi_to_lambda(a))


def decomposition_json(decomp: Mapping[Lambda, int]) -> List[dict]:
    return [{"phi": list(lambda_to_phi(lam)), "lambda": list(lam),
             "multiplicity": m, "dimension": weyl_dimension(lam)}
            for lam, m in sorted(decomp.items(), reverse=True)]


def decomposition_str(decomp: Mapping[Lambda, int]) -> str:
    parts = []
    for lam, m in sorted(decomp.items(), reverse=True):
        label = "Φ_{" + ",".join(map(str, lambda_to_phi(lam))) + "}"
        parts.append(f"{m}{label}" if m > 1 else label)
    return " ⊕ ".join(parts) or "0"


# ---------------------------------------------------------------------------
# Standard modules


@lru_cache(maxsize=None)
def H(n: int) -> Std:
    return Std(n)


@lru_cache(maxsize=None)
def Hs(n: int) -> Dual:
    return Dual(Std(n))


@lru_cache(maxsize=None)
def wedge2H(n: int) -> Wedge:
    return Wedge(Std(n), 2)


@lru_cache(maxsize=None)
def U(n: int) -> Tensor:
    """wedge^2 H (x) H^*."""
    return Tensor(Wedge(Std(n), 2), Dual(Std(n)))


@lru_cache(maxsize=None)
def U_dual(n: int) -> Dual:
    return Dual(U(n))


def jacobi_relations(n: int) -> List[Dict]:
    rels = []
    for a, b, c in itertools.combinations(range(1, n + 1), 3):
        # (a^b)(x)c + (b^c)(x)a + (c^a)(x)b, written on sorted wedge keys
        rels.append({((a, b), c): 1, ((b, c), a): 1, ((a, c), b): -1})
    return rels


@lru_cache(maxsize=None)
def lie3(n: int) -> Quotient:
    """(wedge^2 H (x) H) / wedge^3 H, the degree-3 part of the free Lie algebra."""
    inner = Tensor(Wedge(Std(n), 2), Std(n))
    return Quotient.build(inner, jacobi_relations(n), "(wedge2(H)⊗H)/wedge3(H)")


@lru_cache(maxsize=None)
def tau2_target(n: int) -> Tensor:
    return Tensor(lie3(n), Dual(Std(n)))


@lru_cache(maxsize=None)
def tau2_lift_target(n: int) -> Tensor:
    return Tensor(Tensor(Wedge(Std(n), 2), Std(n)), Dual(Std(n)))
