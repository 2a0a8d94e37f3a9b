from fractions import Fraction

import pytest

from jkl.linalg import Echelon, inverse, kernel, matmul, rank, sort_sign


def test_rank_of_dependent_vectors():
    vs = [{0: 1, 1: 2}, {0: 2, 1: 4}, {1: 1}]
    assert rank(vs) == 2


def test_echelon_reports_dependency():
    e = Echelon(track=True)
    assert e.insert({"a": 1}, tag=0) is None
    assert e.insert({"b": 1}, tag=1) is None
    combo = e.insert({"a": 2, "b": -3}, tag=2)
    assert combo == {2: 1, 0: -2, 1: 3}


def test_coordinates_outside_span():
    e = Echelon()
    e.insert({0: 1, 1: 1})
    assert e.coordinates({0: 3, 1: 3}) == {0: 3}
    with pytest.raises(ValueError):
        e.coordinates({0: 1})


def test_kernel_vectors_annihilate():
    images = [{0: 1}, {0: 1}, {1: 1}, {0: 1, 1: 1}]
    ker = kernel(images)
    assert len(ker) == 2
    for vec in ker:
        total = {}
        for t, c in vec.items():
            for k, v in images[t].items():
                total[k] = total.get(k, 0) + c * v
        assert all(v == 0 for v in total.values())


def test_inverse_exact():
    m = [[2, 1], [1, 1]]
    inv = inverse(m)
    assert matmul(m, inv) == [[1, 0], [0, 1]]
    assert inv[0][0] == Fraction(1)


def test_inverse_singular():
    with pytest.raises(ZeroDivisionError):
        inverse([[1, 2], [2, 4]])


@pytest.mark.parametrize("seq, sign, key", [
    ((1, 2), 1, (1, 2)),
    ((2, 1), -1, (1, 2)),
    ((3, 1, 2), 1, (1, 2, 3)),
    ((1, 1), 0, (1, 1)),
])
def test_sort_sign(seq, sign, key):
    s, k = sort_sign(seq)
    assert s == sign
    if s:
        assert k == key
