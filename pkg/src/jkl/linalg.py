"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts mapping a hashable, orderable key to a
``Fraction`` (or ``int``); missing keys are zero.  Nothing here ever
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Vector = Dict[Hashable, Fraction]


def clean(v: Vector) -> Vector:
    return {k: c for k, c in v.items() if c != 0}


def add_into(acc: Vector, v: Vector, scale=1) -> Vector:
    """``acc += scale * v`` in place, dropping cancelled entries."""
    for k, c in v.items():
        s = acc.get(k, 0) + scale * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Each stored row has a pivot (its smallest key) with coefficient 1, and
    no row contains another row's pivot.  ``track=True`` records, for every
    stored row, the combination of inserted vectors that produced it, which
    is what kernel computations need.
    """

    def __init__(self, track: bool = False):
        self.rows: Dict[Hashable, Vector] = {}
        self.track = track
        self.history: Dict[Hashable, Vector] = {}
        self._count = 0

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vector, combo: Optional[Vector] = None) -> Vector:
        r = dict(v)
        for p in [k for k in r if k in self.rows]:
            c = r.get(p, 0)
            if not c:
                continue
            add_into(r, self.rows[p], -c)
            if combo is not None:
                add_into(combo, self.history[p], -c)
        return r

    def insert(self, v: Vector, tag: Hashable = None) -> Optional[Vector]:
        """Add ``v``; returns ``None`` if it was new, else the dependency.

        With tracking on, a dependent insert returns the combination of
        previously inserted tags (plus ``tag`` itself) that vanishes.
        """
        if tag is None:
            tag = self._count
        self._count += 1
        combo = {tag: Fraction(1)} if self.track else None
        r = self.reduce(v, combo)
        if not r:
            return combo if self.track else {}
        p = min(r)
        inv = 1 / Fraction(r[p])
        r = {k: c * inv for k, c in r.items()}
        if combo is not None:
            combo = {k: c * inv for k, c in combo.items()}
        for q, row in self.rows.items():
            c = row.get(p, 0)
            if c:
                add_into(row, r, -c)
                if self.track:
                    add_into(self.history[q], combo, -c)
        self.rows[p] = r
        if self.track:
            self.history[p] = combo
        return None

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: Vector) -> Dict[Hashable, Fraction]:
        """Express ``v`` on the stored rows, keyed by pivot; raises if outside."""
        coords = {p: Fraction(v[p]) for p in self.rows if v.get(p, 0)}
        residual = dict(v)
        for p, c in coords.items():
            add_into(residual, self.rows[p], -c)
        if residual:
            raise ValueError("vector is not in the span")
        return coords


def rank(vectors: Iterable[Vector]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return ech.rank


def kernel(images: Sequence[Vector]) -> List[Vector]:
    """Basis of the kernel of the map sending basis vector ``t`` to ``images[t]``.

    Kernel vectors are dicts over the indices ``0..len(images)-1``.
    """
    ech = Echelon(track=True)
    out = []
    for t, v in enumerate(images):
        dep = ech.insert(v, tag=t)
        if dep is not None:
            out.append(clean(dep))
    return out


def inverse(matrix: Sequence[Sequence]) -> List[List[Fraction]]:
    """Gauss-Jordan inverse of a square matrix with rational entries."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def transpose(matrix: Sequence[Sequence]) -> List[list]:
    return [list(col) for col in zip(*matrix)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def sort_sign(seq: Sequence) -> Tuple[int, Tuple]:
    """Sort ``seq`` and return (sign of the sorting permutation, sorted tuple).

    The sign is 0 when ``seq`` has a repeated entry (the wedge vanishes).
    """
    items = list(seq)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for x, y in zip(items, items[1:]):
        if x == y:
            return 0, tuple(items)
    return sign, tuple(items)
