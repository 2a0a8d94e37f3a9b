import json

import pytest

from jkl.freegroup import AutWord, F, G, Word, word_commutator
from jkl.glrep import Dual, Std, Tensor, U, Wedge, lie3
from jkl.grammar import (ParseError, parse_autword, parse_module, parse_word, vector_from_json,
                         vector_to_json)
from jkl.johnson import outer_target, outer_target2, tau, tau2


def test_parse_word():
    x1, x2 = Word.gen(1), Word.gen(2)
    assert parse_word("x1*x2^-1", 3) == x1 * x2.inverse()
    assert parse_word("[[x1,x2],x1]", 3) == word_commutator(word_commutator(x1, x2), x1)
    assert parse_word("1", 2).is_identity()


@pytest.mark.parametrize("text", ["x4", "y1", "x1*", "[x1,x2", "x1 x2"])
def test_parse_word_errors(text):
    with pytest.raises(ParseError):
        parse_word(text, 3)


def test_parse_autword():
    a = parse_autword("g[1,2]*f[1,2,3]^-1", 3)
    assert a == AutWord.of(3, G(1, 2), F(1, 2, 3).inv())
    c = parse_autword("[g[1,2],g[2,1]]", 3)
    g12, g21 = AutWord.of(3, G(1, 2)), AutWord.of(3, G(2, 1))
    assert c == g12 * g21 * g12.inverse() * g21.inverse()
    assert parse_autword("P[1,2]*I[3]*T[2,3]", 3).letters[1].kind == "I"


@pytest.mark.parametrize("text", ["g[1,1]", "f[2,1,3]", "h[1,2]", "g[1,4]", "g[1,2"])
def test_parse_autword_errors(text):
    with pytest.raises(ParseError):
        parse_autword(text, 3)


@pytest.mark.parametrize("text, module", [
    ("H", Std(3)),
    ("dual(H)", Dual(Std(3))),
    ("wedge2(H)⊗dual(H)", U(3)),
    ("tensor(wedge2(H),dual(H))", U(3)),
    ("wedge2(tensor(wedge2(H),dual(H)))", Wedge(U(3), 2)),
    ("(wedge2(H)⊗H)/wedge3(H)", lie3(3)),
    ("(wedge2(H)⊗dual(H))/H", outer_target(3)),
    ("((wedge2(H)⊗H)/wedge3(H)⊗dual(H))/wedge2(H)", outer_target2(3)),
])
def test_parse_module(text, module):
    m = parse_module(text, 3)
    assert m == module
    assert parse_module(m.name, 3) == m


def test_parse_module_errors():
    with pytest.raises(ParseError):
        parse_module("wedge2(H)/H", 3)
    with pytest.raises(ParseError):
        parse_module("sym2(H)", 3)


def test_vector_json_examples():
    assert vector_to_json(tau(parse_autword("g[1,2]", 3))) == \
        '{"module": "wedge2(H)⊗dual(H)", "coords": {"(1^2)⊗2*": 1}}'


@pytest.mark.parametrize("word", ["g[1,2]*f[1,2,3]^-1*g[3,1]", "g[2,3]^-1*f[1,3,2]"])
def test_vector_round_trip(word):
    text = vector_to_json(tau(parse_autword(word, 3)))
    assert vector_to_json(vector_from_json(text, 3)) == text


def test_tau2_round_trip_with_fraction():
    v = tau2(parse_autword("[g[1,2],g[2,1]]", 4))
    text = vector_to_json(Tensor(lie3(4), Dual(Std(4))).element({k: c / 2 for k, c in
                                                                v.coords.items()}))
    assert '"1/2"' in text
    assert vector_to_json(vector_from_json(text, 4)) == text


def test_vector_unknown_label():
    bad = json.dumps({"module": "H", "coords": {"7": 1}})
    with pytest.raises(ParseError):
        vector_from_json(bad, 3)
