"""Expected decomposition tables, written in subscript notation.

Labels are strings of the form ``"1,1,0,...,0,1,-1"``: the ``...`` stands
for a run of zeros sized to fit the rank.  They are instantiated through
the weakly decreasing weight form, which stays unambiguous when n is so
small that the explicit positions collide.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .glrep import Lambda, phi_to_lambda

_PROBE = 64


@lru_cache(maxsize=None)
def _run_form(pattern: str) -> Tuple[Tuple[int, ...], Optional[int], Tuple[int, ...]]:
    tokens = [t.strip().replace("−", "-") for t in pattern.split(",")]
    tokens = ["..." if t in ("...", "…") else t for t in tokens]
    if "..." not in tokens:
        return tuple(phi_to_lambda([int(t) for t in tokens])), None, ()
    if tokens.count("...") != 1:
        raise ValueError(f"label {pattern!r} has more than one ellipsis")
    p = tokens.index("...")
    before = [int(t) for t in tokens[:p]]
    after = [int(t) for t in tokens[p + 1:]]
    fill = _PROBE - len(before) - len(after)
    lam = phi_to_lambda(before + [0] * fill + after)
    mid = len(before) + fill // 2
    c = lam[mid]
    s, e = mid, mid
    while s > 0 and lam[s - 1] == c:
        s -= 1
    while e < len(lam) - 1 and lam[e + 1] == c:
        e += 1
    return tuple(lam[:s]), c, tuple(lam[e + 1:])


def expand_label(pattern: str, n: int) -> Optional[Lambda]:
    """Weight form of a subscript pattern at rank n, or None if it does not fit."""
    head, c, tail = _run_form(pattern)
    if c is None:
        return head if len(head) == n else None
    if n < len(head) + len(tail):
        return None
    return head + (c,) * (n - len(head) - len(tail)) + tail


def expand_table(rows: Sequence[Tuple[int, str]], n: int) -> Optional[Counter]:
    out: Counter = Counter()
    for mult, pattern in rows:
        lam = expand_label(pattern, n)
        if lam is None:
            return None
        out[lam] += mult
    return out


def _ones(*patterns: str) -> List[Tuple[int, str]]:
    return [(1, p) for p in patterns]


DECOMP_U_DUAL: Dict[object, List[Tuple[int, str]]] = {
    3: _ones("2,0,-1", "0,1,-1"),
    "generic": _ones("1,0,...,0,1,0,-1", "0,...,0,1,-1"),
}

WEDGE2_U_DUAL: Dict[object, List[Tuple[int, str]]] = {
    3: [(2, "1,0,-1"), (2, "2,1,-2")],
    4: [(1, "2,0,0,-1"), (3, "0,1,0,-1"), (1, "0,3,0,-2"), (1, "3,0,1,-2"), (2, "1,1,1,-2")],
    5: [(2, "1,1,0,0,-1"), (3, "0,0,1,0,-1"), (1, "0,1,2,0,-2"), (1, "2,1,0,1,-2"),
        (2, "1,0,1,1,-2")],
    6: [(1, "0,2,0,0,0,-1"), (2, "1,0,1,0,0,-1"), (3, "0,0,0,1,0,-1"), (1, "0,1,0,2,0,-2"),
        (1, "2,0,1,0,1,-2"), (2, "1,0,0,1,1,-2")],
    "generic": [(1, "0,1,0,...,0,1,0,0,0,-1"), (2, "1,0,...,0,1,0,0,-1"), (3, "0,...,0,1,0,-1"),
                (1, "0,1,0,...,0,2,0,-2"), (1, "2,0,...,0,1,0,1,-2"), (2, "1,0,...,0,1,1,-2")],
}
WEDGE2_GENERIC_FROM = 7

TAU2_TARGET = _ones("0,1,0,...,0", "1,1,0,...,0,1,-1", "2,0,...,0")
TAU2_IMAGE = _ones("0,1,0,...,0", "1,1,0,...,0,1,-1")
OA_TAU2_IMAGE = _ones("1,1,0,...,0,1,-1")
OUTER_U_DUAL = "1,0,...,0,1,0,-1"

KERNEL_TAU_STAR = _ones("0,...,0,1,0,-1", "1,0,...,0,1,1,-2")
KERNEL_TAU_BAR_STAR = _ones("1,0,...,0,1,1,-2")

# hwv labels of the two lower-bound vectors and their expected values
LOWER_WEDGE_LABEL = "0,1,0,...,0,0"
LOWER_TWISTED_LABEL = "1,1,0,...,0,1,-1"
LOWER_WEDGE_VALUE = 6
LOWER_TWISTED_VALUE = -4

# dual labels detected by the abelian-cycle compositions
UPPER_BOUND_COMPOSITIONS = {
    "g1.f(w1)": "0,...,0,1,0,-1",
    "g2.f(w2)": "0,...,0,1,0,-1",
    "h2.f.E(3,n)(w1)": "1,0,...,0,1,0,0,-1",
    "h1.f(w3)": "1,0,...,0,1,0,0,-1",
    "k.f.E(2,n-1).E(1,n)(w1)": "0,1,0,...,0,2,0,-2",
    "l.f.E(3,n).E(1,n)(w2)": "2,0,...,0,1,0,1,-2",
    "m.f.E(1,4).E(4,n)(w1)": "1,0,...,0,1,1,-2",
    "n.f.E(3,n-1).E(4,n)(w2)": "0,1,0,...,0,1,0,0,0,-1",
}
CYCLE_VALUE = 2


def tau_rank(n: int) -> int:
    return n * n * (n - 1) // 2


def corollary_rank(n: int) -> int:
    num = 2 * n * n * (n * n - 4) + 3 * n * (n - 1)
    assert num % 6 == 0
    return num // 6


def oa_image_dim(n: int) -> int:
    return n * n * (n * n - 4) // 3


IA3_RANK = 18
IA3_COMMUTATORS = 36
