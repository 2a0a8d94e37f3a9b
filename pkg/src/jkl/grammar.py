"""Text formats shared by the CLI and the reports.

Words:      x1*x2^-1*[x1,x2]
Aut words:  g[1,2]*f[1,2,3]^-1*[g[1,2],g[2,1]]   (leftmost acts last)
Modules:    wedge2(tensor(wedge2(H),dual(H)))  or  wedge2(H)⊗dual(H)
Vectors:    {"module": "...", "coords": {"(1^2)⊗2*": 1, ...}}
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import List, Tuple

from .freegroup import AutLetter, AutWord, Word, WordError, aut_commutator, word_commutator
from .glrep import (Dual, Module, ModuleElement, ModuleError, Std, Tensor, Wedge, U, fmt_scalar,
                    lie3, tau2_target)


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\^-1)|([A-Za-z]+\d*)|(\d+)|(.))")


def _tokenize(text: str) -> List[str]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        tok = next(g for g in m.groups() if g is not None)
        out.append(tok)
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'more input'} in {self.text!r}")
        self.i += 1
        return tok

    def done(self):
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r} in {self.text!r}")

    def ints(self) -> Tuple[int, ...]:
        self.take("[")
        vals = [int(self.take())]
        while self.peek() == ",":
            self.take(",")
            vals.append(int(self.take()))
        self.take("]")
        return tuple(vals)


# ---------------------------------------------------------------------------
# words


def _group_expr(p: _Parser, atom, mul, inv, comm, one):
    def product():
        acc = term()
        while p.peek() == "*":
            p.take("*")
            acc = mul(acc, term())
        return acc

    def term():
        tok = p.peek()
        if tok == "[":
            p.take("[")
            a = product()
            p.take(",")
            b = product()
            p.take("]")
            val = comm(a, b)
        elif tok == "(":
            p.take("(")
            val = product()
            p.take(")")
        elif tok == "1":
            p.take()
            val = one
        else:
            val = atom()
        if p.peek() == "^-1":
            p.take()
            val = inv(val)
        return val

    out = product()
    p.done()
    return out


def parse_word(text: str, n: int) -> Word:
    p = _Parser(text)

    def atom():
        tok = p.take()
        m = re.fullmatch(r"x(\d+)", tok)
        if not m:
            raise ParseError(f"bad generator {tok!r}")
        i = int(m.group(1))
        if not 1 <= i <= n:
            raise ParseError(f"generator {tok} out of range for n={n}")
        return Word.gen(i)

    return _group_expr(p, atom, lambda a, b: a * b, Word.inverse, word_commutator, Word())


def parse_autword(text: str, n: int) -> AutWord:
    p = _Parser(text)

    def atom():
        tok = p.take()
        kind = {"g": "G", "f": "F", "P": "P", "I": "I", "T": "T"}.get(tok)
        if kind is None:
            raise ParseError(f"unknown automorphism letter {tok!r}")
        try:
            return AutWord((AutLetter(kind, p.ints()),), n)
        except WordError as exc:
            raise ParseError(str(exc)) from None

    try:
        return _group_expr(p, atom, lambda a, b: a * b, AutWord.inverse, aut_commutator,
                           AutWord((), n))
    except (ValueError, IndexError) as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# modules


def build_quotient(num: Module, den: Module) -> Module:
    from .johnson import outer_target, outer_target2

    n = num.n
    if num == Tensor(Wedge(Std(n), 2), Std(n)) and den == Wedge(Std(n), 3):
        return lie3(n)
    if num == U(n) and den == Std(n):
        return outer_target(n)
    if num == tau2_target(n) and den == Wedge(Std(n), 2):
        return outer_target2(n)
    raise ParseError(f"no known embedding of {den.name} into {num.name}")


def parse_module(text: str, n: int) -> Module:
    p = _Parser(text.replace("⊗", "@"))

    def expr():
        acc = quot()
        while p.peek() == "@":
            p.take("@")
            acc = Tensor(acc, quot())
        return acc

    def quot():
        a = atom()
        if p.peek() == "/":
            p.take("/")
            a = build_quotient(a, atom())
        return a

    def atom():
        tok = p.take()
        if tok == "(":
            m = expr()
            p.take(")")
            return m
        if tok == "H":
            return Std(n)
        if tok == "U":
            return U(n)
        p.take("(")
        if tok == "dual":
            m = Dual(expr())
        elif tok == "tensor":
            a = expr()
            p.take(",")
            m = Tensor(a, expr())
        elif re.fullmatch(r"wedge\d+", tok):
            m = Wedge(expr(), int(tok[5:]))
        else:
            raise ParseError(f"unknown combinator {tok!r}")
        p.take(")")
        return m

    try:
        m = expr()
        p.done()
    except ModuleError as exc:
        raise ParseError(str(exc)) from None
    return m


# ---------------------------------------------------------------------------
# vectors


def _scalar_json(c: Fraction):
    return int(c) if c.denominator == 1 else fmt_scalar(c)


def vector_to_dict(v: ModuleElement) -> dict:
    index = v.module._index
    keys = sorted(v.coords, key=index.__getitem__)
    return {"module": v.module.name,
            "coords": {v.module.label(k): _scalar_json(v.coords[k]) for k in keys}}


def vector_to_json(v: ModuleElement) -> str:
    return json.dumps(vector_to_dict(v), ensure_ascii=False)


def vector_from_dict(data: dict, n: int) -> ModuleElement:
    module = parse_module(data["module"], n)
    labels = module.labels
    coords = {}
    for label, value in data["coords"].items():
        if label not in labels:
            raise ParseError(f"unknown basis label {label!r} for {module.name}")
        coords[labels[label]] = Fraction(value)
    return module.element(coords)


def vector_from_json(text: str, n: int) -> ModuleElement:
    return vector_from_dict(json.loads(text), n)
