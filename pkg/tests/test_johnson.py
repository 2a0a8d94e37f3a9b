import pytest

from jkl.freegroup import AutLetter, AutWord, F, G, aut_commutator
from jkl.glrep import (DomainError, Dual, Std, U, Wedge, is_highest_weight_vector, lie3,
                       tau2_lift_target, tau2_target, tensor_elements, wedge2H, wedge_elements)
from jkl.johnson import (NotCommuting, NotIA, NotInKernel, abelian_cycle_image, chain,
                         conjugation_word, in_K, inner_embed, inner_embed2, named_map, tau, tau2,
                         tau2_bar, tau_bar)


def aw(n, *letters):
    return AutWord.of(n, *letters)


def u_elem(n, i, j, k):
    h = Std(n)
    return tensor_elements(wedge_elements(h.basis_element(i), h.basis_element(j)),
                           Dual(h).basis_element(k))


def test_tau_generators():
    assert tau(aw(3, G(1, 2))) == u_elem(3, 1, 2, 2)
    assert tau(aw(3, F(1, 2, 3))) == u_elem(3, 1, 2, 3)
    assert tau(aw(3, G(2, 1))) == u_elem(3, 2, 1, 1)


def test_tau_commutator_vanishes():
    assert tau(aut_commutator(aw(3, G(1, 2)), aw(3, G(2, 1)))).is_zero()


def test_tau_rejects_non_ia():
    with pytest.raises(NotIA, match="not an IA automorphism"):
        tau(aw(3, AutLetter("T", (1, 2))))


def test_tau2_g12_g21():
    v = tau2(aut_commutator(aw(3, G(1, 2)), aw(3, G(2, 1))))
    want = tau2_target(3).element({(((1, 2), 1), 1): 1, (((1, 2), 2), 2): 1})
    assert v == want


def test_tau2_identity_and_relation():
    assert tau2(AutWord((), 3)).is_zero()
    assert tau2(aut_commutator(aw(3, G(1, 2)), aw(3, G(1, 3)))).is_zero()


def test_tau2_rejects_outside_kernel():
    with pytest.raises(NotInKernel, match="not in ker τ"):
        tau2(aw(3, G(1, 2)))


def test_in_K():
    g12 = aw(3, G(1, 2))
    assert in_K(g12, 1) and not in_K(g12, 2)
    c = aut_commutator(g12, aw(3, G(2, 1)))
    assert in_K(c, 2) and not in_K(c, 3)
    assert in_K(aut_commutator(g12, aw(3, G(1, 3))), 3)
    with pytest.raises(ValueError):
        in_K(g12, 4)


@pytest.mark.parametrize("n", [3, 4])
def test_inner_automorphisms(n):
    for k in range(1, n + 1):
        assert tau(conjugation_word(n, k)) == inner_embed(k, n)
        assert tau_bar(conjugation_word(n, k)).is_zero()
    c = aut_commutator(conjugation_word(n, 1), conjugation_word(n, 2))
    assert tau2(c) == inner_embed2(1, 2, n)
    assert tau2_bar(c).is_zero()


def test_tau_bar_nonzero():
    assert not tau_bar(aw(3, G(1, 2))).is_zero()


def test_inner_embed_12_3():
    assert tau(aw(3, G(1, 2), G(1, 3))) == inner_embed(1, 3)


@pytest.mark.parametrize("n", [4, 5])
def test_cycle_omega1(n):
    w = abelian_cycle_image(aw(n, G(1, 2), G(1, n)), aw(n, G(2, n)))
    want = wedge_elements(u_elem(n, 1, 2, 2) + u_elem(n, 1, n, n), u_elem(n, 2, n, n))
    assert w == want
    w2 = abelian_cycle_image(aw(n, G(1, 3)), aw(n, G(2, n)))
    assert w2 == wedge_elements(u_elem(n, 1, 3, 3), u_elem(n, 2, n, n))


def test_cycle_antisymmetric_and_degenerate():
    a, b = aw(4, G(1, 3)), aw(4, G(2, 4))
    assert abelian_cycle_image(a, b) == -1 * abelian_cycle_image(b, a)
    assert abelian_cycle_image(a, a).is_zero()
    with pytest.raises(NotCommuting):
        abelian_cycle_image(aw(3, G(1, 3)), aw(3, G(2, 3)))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_lower_bound_values(n):
    v = tau2(aut_commutator(aw(n, G(1, 2)), aw(n, G(2, 1))))
    six = chain(v, "contract3", "alt")
    assert six == 6 * wedge2H(n).basis_element((1, 2))
    four = chain(v, "wedge12", (1, n), "alt")
    assert four == -4 * tau2_lift_target(n).basis_element((((1, 2), 1), n))
    assert is_highest_weight_vector(six) and is_highest_weight_vector(four)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_cycle_values(n):
    w1 = abelian_cycle_image(aw(n, G(1, 2), G(1, n)), aw(n, G(2, n)))
    w2 = abelian_cycle_image(aw(n, G(1, 3)), aw(n, G(2, n)))
    two = 2 * wedge2H(n).basis_element((1, 2))
    assert chain(w1, "g1", "f") == two
    assert chain(w2, "g2", "f") == two
    assert chain(w2, "g1", "f").is_zero()


def test_named_map_domain_mismatch():
    with pytest.raises(DomainError):
        named_map("g1", Std(3).basis_element(1))
    with pytest.raises(KeyError):
        named_map("zz", Std(3).basis_element(1))


def test_lie3_is_target_factor():
    assert tau2_target(3).dim == lie3(3).dim * 3
    assert Wedge(U(3), 2).dim == 36
