"""Reduced words in F_n and words in generators of Aut(F_n).

Letters of a word are signed generator indices: ``+i`` is x_i and ``-i``
is x_i^{-1}.  Commutators are ``[a, b] = a b a^-1 b^-1`` and automorphism
words act with the rightmost letter first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple


class WordError(ValueError):
    pass


def word_reduce(letters: Iterable[int], n: int | None = None) -> "Word":
    """Freely reduce a raw letter sequence (stack-based, hence confluent)."""
    out: List[int] = []
    for a in letters:
        if a == 0 or (n is not None and abs(a) > n):
            raise WordError(f"generator index {a} out of range for rank {n}")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return Word(tuple(out))


@dataclass(frozen=True)
class Word:
    letters: Tuple[int, ...] = ()

    @staticmethod
    def gen(i: int, sign: int = 1) -> "Word":
        return Word((sign * i,))

    def __mul__(self, other: "Word") -> "Word":
        a = list(self.letters)
        b = other.letters
        k = 0
        while a and k < len(b) and a[-1] == -b[k]:
            a.pop()
            k += 1
        return Word(tuple(a) + b[k:])

    def inverse(self) -> "Word":
        return Word(tuple(-a for a in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)


IDENTITY = Word()


def word_commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


# ---------------------------------------------------------------------------
# Automorphism letters

KINDS = {"G": 2, "F": 3, "P": 2, "I": 1, "T": 2}


@dataclass(frozen=True)
class AutLetter:
    """One generator of Aut(F_n) or its formal inverse.

    ``G(i,j)``: x_j -> x_i x_j x_i^-1.  ``F(i,j,k)``: x_k -> x_k [x_i, x_j].
    ``P(i,j)`` swaps x_i and x_j, ``I(i)`` inverts x_i and ``T(i,j)`` is the
    transvection x_i -> x_i x_j.
    """

    kind: str
    idx: Tuple[int, ...]
    inverse: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise WordError(f"unknown automorphism letter {self.kind!r}")
        if len(self.idx) != KINDS[self.kind]:
            raise WordError(f"{self.kind} takes {KINDS[self.kind]} indices")
        if any(i < 1 for i in self.idx):
            raise WordError("indices start at 1")
        if self.kind in "GPT" and self.idx[0] == self.idx[1]:
            raise WordError(f"{self.kind}{list(self.idx)} needs distinct indices")
        if self.kind == "F":
            i, j, k = self.idx
            if not i < j or k in (i, j):
                raise WordError(f"F{list(self.idx)} needs i<j and k not in {{i,j}}")

    def inv(self) -> "AutLetter":
        if self.kind in "PI":
            return self
        return AutLetter(self.kind, self.idx, not self.inverse)

    @property
    def is_magnus(self) -> bool:
        return self.kind in "GF"

    def images(self) -> Dict[int, Word]:
        """Images of the generators this letter moves."""
        x = Word.gen
        if self.kind == "G":
            i, j = self.idx
            if self.inverse:
                return {j: Word((-i, j, i))}
            return {j: Word((i, j, -i))}
        if self.kind == "F":
            i, j, k = self.idx
            if self.inverse:
                return {k: Word((k, j, i, -j, -i))}
            return {k: Word((k, i, j, -i, -j))}
        if self.kind == "P":
            i, j = self.idx
            return {i: x(j), j: x(i)}
        if self.kind == "I":
            (i,) = self.idx
            return {i: x(i, -1)}
        i, j = self.idx
        return {i: Word((i, -j)) if self.inverse else Word((i, j))}

    def __str__(self) -> str:
        s = f"{self.kind.lower() if self.kind in 'GF' else self.kind}[{','.join(map(str, self.idx))}]"
        return s + "^-1" if self.inverse else s


def G(i, j):
    return AutLetter("G", (i, j))


def F(i, j, k):
    return AutLetter("F", (i, j, k))


@dataclass(frozen=True)
class AutWord:
    letters: Tuple[AutLetter, ...]
    n: int

    def __post_init__(self):
        for a in self.letters:
            if max(a.idx) > self.n:
                raise WordError(f"letter {a} exceeds rank {self.n}")

    @staticmethod
    def of(n: int, *letters: AutLetter) -> "AutWord":
        return AutWord(tuple(letters), n)

    def __mul__(self, other: "AutWord") -> "AutWord":
        if self.n != other.n:
            raise WordError("rank mismatch")
        return AutWord(self.letters + other.letters, self.n)

    def inverse(self) -> "AutWord":
        return AutWord(tuple(a.inv() for a in reversed(self.letters)), self.n)

    def __str__(self) -> str:
        return "*".join(map(str, self.letters)) or "id"


def aut_commutator(u: AutWord, v: AutWord) -> AutWord:
    return u * v * u.inverse() * v.inverse()


def magnus_letters(n: int) -> List[AutLetter]:
    """The Magnus generators of IA_n, g's first then f's, in index order."""
    gs = [G(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    fs = [F(i, j, k) for i, j in itertools.combinations(range(1, n + 1), 2)
          for k in range(1, n + 1) if k not in (i, j)]
    return gs + fs


def nielsen_letters(n: int) -> List[AutLetter]:
    letters = [AutLetter("P", (i, j)) for i, j in itertools.combinations(range(1, n + 1), 2)]
    letters += [AutLetter("I", (i,)) for i in range(1, n + 1)]
    letters += [AutLetter("T", (i, j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return letters


# ---------------------------------------------------------------------------
# Endomorphisms


@dataclass(frozen=True)
class Endomorphism:
    n: int
    images: Tuple[Word, ...]

    @staticmethod
    def identity(n: int) -> "Endomorphism":
        return Endomorphism(n, tuple(Word.gen(i) for i in range(1, n + 1)))

    def apply(self, w: Word) -> Word:
        out = IDENTITY
        for a in w.letters:
            img = self.images[abs(a) - 1]
            out = out * (img if a > 0 else img.inverse())
        return out

    def __call__(self, w: Word) -> Word:
        return self.apply(w)

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1}->{w}" for i, w in enumerate(self.images))

    def is_identity(self) -> bool:
        return all(w.letters == (i + 1,) for i, w in enumerate(self.images))


def compose(a: Endomorphism, b: Endomorphism) -> Endomorphism:
    """``a o b``: apply ``b`` first."""
    if a.n != b.n:
        raise WordError("rank mismatch")
    return Endomorphism(a.n, tuple(a.apply(w) for w in b.images))


def letter_endomorphism(letter: AutLetter, n: int) -> Endomorphism:
    moved = letter.images()
    return Endomorphism(n, tuple(moved.get(i, Word.gen(i)) for i in range(1, n + 1)))


def evaluate(aw: AutWord) -> Endomorphism:
    e = Endomorphism.identity(aw.n)
    for letter in reversed(aw.letters):
        e = compose(letter_endomorphism(letter, aw.n), e)
    return e


def abelianization_matrix(e: Endomorphism) -> List[List[int]]:
    """Entry (i, j) is the exponent sum of x_{i+1} in e(x_{j+1})."""
    m = [[0] * e.n for _ in range(e.n)]
    for j, w in enumerate(e.images):
        for a in w.letters:
            m[abs(a) - 1][j] += 1 if a > 0 else -1
    return m


def is_IA(e: Endomorphism) -> bool:
    m = abelianization_matrix(e)
    return all(m[i][j] == (i == j) for i in range(e.n) for j in range(e.n))
