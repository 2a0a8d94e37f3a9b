"""Truncated Magnus expansion and the lower central series of F_n.

x_i maps to 1 + X_i and x_i^-1 to the geometric series 1 - X_i + X_i^2 - ...
in noncommuting variables, truncated at a degree bound.  Monomials are
tuples of generator indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .freegroup import Word

DEFAULT_DEGREE = 4

Monomial = Tuple[int, ...]


class NotInFiltration(ValueError):
    pass


class NotLieElement(ValueError):
    pass


class NotAntisymmetric(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    degree: int
    coeffs: Dict[Monomial, int]

    def part(self, k: int) -> Dict[Monomial, int]:
        return {m: c for m, c in self.coeffs.items() if len(m) == k}

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        d = min(self.degree, other.degree)
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                if len(m1) + len(m2) <= d:
                    m = m1 + m2
                    out[m] = out.get(m, 0) + c1 * c2
        return TruncatedSeries(d, {m: c for m, c in out.items() if c})

    def __eq__(self, other) -> bool:
        return (isinstance(other, TruncatedSeries) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __str__(self) -> str:
        terms = sorted(self.coeffs.items(), key=lambda t: (len(t[0]), t[0]))
        return " + ".join(f"{c}*{''.join(f'X{i}' for i in m) or '1'}" for m, c in terms)


@dataclass(frozen=True)
class HomogeneousTensor:
    """Element of H^{(x)k}, keyed by length-k index tuples."""

    degree: int
    coeffs: Dict[Monomial, Fraction]

    def __post_init__(self):
        if any(len(m) != self.degree for m in self.coeffs):
            raise ValueError("monomial degree does not match tensor degree")

    def is_zero(self) -> bool:
        return not self.coeffs


def _expand(letters: Tuple[int, ...], degree: int) -> Dict[Monomial, int]:
    series: Dict[Monomial, int] = {(): 1}
    for a in letters:
        i = abs(a)
        out: Dict[Monomial, int] = {}
        for m, c in series.items():
            out[m] = out.get(m, 0) + c
            room = degree - len(m)
            if a > 0:
                if room >= 1:
                    mm = m + (i,)
                    out[mm] = out.get(mm, 0) + c
            else:
                mm = m
                s = c
                for _ in range(room):
                    mm = mm + (i,)
                    s = -s
                    out[mm] = out.get(mm, 0) + s
        series = {m: c for m, c in out.items() if c}
    return series


@lru_cache(maxsize=200_000)
def _expand_cached(letters: Tuple[int, ...], degree: int) -> Dict[Monomial, int]:
    return _expand(letters, degree)


def magnus_expand(w: Word, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    if degree < 1:
        raise ValueError("degree bound must be at least 1")
    return TruncatedSeries(degree, dict(_expand_cached(w.letters, degree)))


def filtration_degree(w: Word, degree: int = DEFAULT_DEGREE) -> Optional[int]:
    """Largest k with w in F^(k), or ``None`` if w lies in F^(degree+1)."""
    s = _expand_cached(w.letters, degree)
    lengths = [len(m) for m in s if m]
    return min(lengths) if lengths else None


def in_lcs(w: Word, k: int) -> bool:
    """Whether w lies in the k-th lower central series term F^(k)."""
    if k <= 1:
        return True
    d = filtration_degree(w, k - 1)
    return d is None


def leading_term(w: Word, k: int) -> HomogeneousTensor:
    s = _expand_cached(w.letters, k)
    if any(0 < len(m) < k for m in s):
        raise NotInFiltration(f"not in F^({k})")
    return HomogeneousTensor(k, {m: Fraction(c) for m, c in s.items() if len(m) == k})


def bracket_tensor(m: Monomial) -> Dict[Monomial, int]:
    """Left-normed bracket [[..[x_a, x_b], ..], x_z] expanded as tensors."""
    out: Dict[Monomial, int] = {m[:1]: 1}
    for c in m[1:]:
        nxt: Dict[Monomial, int] = {}
        for t, v in out.items():
            nxt[t + (c,)] = nxt.get(t + (c,), 0) + v
            nxt[(c,) + t] = nxt.get((c,) + t, 0) - v
        out = {t: v for t, v in nxt.items() if v}
    return out


def dynkin_map(T: HomogeneousTensor) -> Dict[Monomial, Fraction]:
    out: Dict[Monomial, Fraction] = {}
    for m, c in T.coeffs.items():
        for t, v in bracket_tensor(m).items():
            out[t] = out.get(t, 0) + c * v
    return {t: v for t, v in out.items() if v}


def is_lie_element(T: HomogeneousTensor) -> bool:
    k = T.degree
    rho = dynkin_map(T)
    target = {m: k * c for m, c in T.coeffs.items() if c}
    return rho == target


def dsw_left_normed(T: HomogeneousTensor) -> Dict[Tuple[Tuple[int, int], int], Fraction]:
    """Coefficients of a degree-3 Lie element on [[x_a, x_b], x_c] with a < b."""
    if T.degree != 3:
        raise ValueError("expected a degree-3 tensor")
    if not is_lie_element(T):
        raise NotLieElement("not a Lie element")
    out: Dict[Tuple[Tuple[int, int], int], Fraction] = {}
    for (a, b, c), v in T.coeffs.items():
        if a == b:
            continue
        key, s = ((a, b), c), 1
        if a > b:
            key, s = ((b, a), c), -1
        out[key] = out.get(key, 0) + s * Fraction(v) / 3
    return {k: v for k, v in out.items() if v}


def l2_to_wedge(T: HomogeneousTensor, n: int):
    from .glrep import Std, Wedge

    if T.degree != 2:
        raise ValueError("expected a degree-2 tensor")
    for (a, b), c in T.coeffs.items():
        if c + T.coeffs.get((b, a), 0) != 0:
            raise NotAntisymmetric("not antisymmetric")
    module = Wedge(Std(n), 2)
    return module.element({(a, b): c for (a, b), c in T.coeffs.items() if a < b})


def l3_to_quotient(coeffs: Dict[Tuple[Tuple[int, int], int], Fraction], n: int):
    """Send [[x_a, x_b], x_c] to the class of (e_a ^ e_b) (x) e_c."""
    from .glrep import lie3

    return lie3(n).element(coeffs)
