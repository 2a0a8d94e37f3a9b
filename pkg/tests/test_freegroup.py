import pytest

from jkl.freegroup import (AutLetter, AutWord, Endomorphism, F, G, Word, WordError,
                           abelianization_matrix, compose, evaluate, is_IA, magnus_letters,
                           word_commutator, word_reduce)

x1, x2, x3 = Word.gen(1), Word.gen(2), Word.gen(3)


def W(*letters):
    return Word(tuple(letters))


@pytest.mark.parametrize("raw, reduced", [
    ((1, -1), ()),
    ((1, 2, -2, 1), (1, 1)),
    ((1, 2, -1, -2), (1, 2, -1, -2)),
    ((2, 1, -1, -2, 3), (3,)),
])
def test_word_reduce(raw, reduced):
    assert word_reduce(raw).letters == reduced


def test_word_reduce_range():
    with pytest.raises(WordError):
        word_reduce((1, 4), n=3)


def test_commutators():
    assert word_commutator(x1, x2) == W(1, 2, -1, -2)
    assert word_commutator(x1, x1).is_identity()
    assert word_commutator(word_commutator(x1, x2), x1) == W(1, 2, -1, -2, 1, 2, 1, -2, -1, -1)


def test_str():
    assert str(W(1, -2)) == "x1x2^-1"
    assert str(Word()) == "1"


def test_evaluate_g12():
    e = evaluate(AutWord.of(3, G(1, 2)))
    assert e.images == (x1, x1 * x2 * x1.inverse(), x3)


def test_evaluate_f123():
    e = evaluate(AutWord.of(3, F(1, 2, 3)))
    assert e.images == (x1, x2, x3 * word_commutator(x1, x2))


def test_inverse_images():
    assert evaluate(AutWord.of(3, G(1, 2).inv())).images[1] == x1.inverse() * x2 * x1
    assert evaluate(AutWord.of(3, F(1, 2, 3).inv())).images[2] == x3 * word_commutator(x2, x1)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_g12_g21_commutator(n):
    a = AutWord.of(n, G(1, 2))
    b = AutWord.of(n, G(2, 1))
    e = evaluate(a * b * a.inverse() * b.inverse())
    for r in range(1, n + 1):
        xr = Word.gen(r)
        want = word_commutator(word_commutator(x1, x2), xr) * xr if r <= 2 else xr
        assert e.images[r - 1] == want


def test_compose():
    e = Endomorphism.identity(3)
    g = evaluate(AutWord.of(3, G(1, 2)))
    assert compose(e, g) == g
    assert compose(g, evaluate(AutWord.of(3, G(1, 2).inv()))).is_identity()
    both = compose(g, evaluate(AutWord.of(3, G(1, 3))))
    assert both.images == (x1, x1 * x2 * x1.inverse(), x1 * x3 * x1.inverse())


def test_abelianization():
    assert abelianization_matrix(Endomorphism.identity(3)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert is_IA(evaluate(AutWord.of(3, G(1, 2))))
    t = evaluate(AutWord.of(3, AutLetter("T", (1, 2))))
    assert abelianization_matrix(t) == [[1, 0, 0], [1, 1, 0], [0, 0, 1]]
    assert not is_IA(t)


@pytest.mark.parametrize("kind, idx", [("G", (1, 1)), ("F", (2, 1, 3)), ("F", (1, 2, 2)),
                                       ("P", (3, 3)), ("T", (1, 1)), ("I", (0,))])
def test_invalid_letters(kind, idx):
    with pytest.raises(WordError):
        AutLetter(kind, idx)


def test_letter_out_of_range():
    with pytest.raises(WordError):
        AutWord.of(3, G(1, 4))


@pytest.mark.parametrize("n, count", [(3, 9), (4, 24), (5, 50)])
def test_magnus_letter_count(n, count):
    letters = magnus_letters(n)
    assert len(letters) == count
    assert all(is_IA(evaluate(AutWord.of(n, a))) for a in letters)


def test_autword_str():
    assert str(AutWord.of(3, G(1, 2), F(1, 2, 3).inv())) == "g[1,2]*f[1,2,3]^-1"
