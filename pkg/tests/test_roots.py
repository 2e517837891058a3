"""Root systems, Weyl elements, the extended affine group and alcove elements."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylcox import (
    DomainError,
    DynkinType,
    act_on_coweight,
    act_on_root,
    affine_simple_action,
    cartan_matrix,
    char_poly,
    compose,
    ext_compose,
    ext_inverse,
    ext_power,
    generate_roots,
    order,
    pairing,
    pi1_automorphisms,
    sigma_representative,
)
from weylcox import exact
from weylcox.cartan import ROOT_COUNTS
from weylcox.roots import (
    ExtAffineElement,
    affine_reflection_zero,
    ext_identity,
    identity_weyl,
    translation_element,
    w_inverse,
)

SMALL_TYPES = [("A", 2), ("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2), ("F", 4)]


def _cartan(family, rank):
    return cartan_matrix(DynkinType(family, rank))


@pytest.mark.parametrize("family,rank", SMALL_TYPES + [("E", 6), ("E", 7), ("E", 8)])
def test_root_counts_match_classification(family, rank):
    rs = generate_roots(_cartan(family, rank))
    assert len(rs.roots) == ROOT_COUNTS[family](rank)
    for root in rs.roots:
        assert tuple(-x for x in root) in rs


def test_a2_roots_and_highest():
    rs = generate_roots(_cartan("A", 2))
    assert len(rs.roots) == 6
    assert rs.highest == (1, 1)


def test_b3_count_and_g2_highest():
    assert len(generate_roots(_cartan("B", 3)).roots) == 18
    g2 = generate_roots(_cartan("G", 2))
    assert len(g2.roots) == 12
    # coefficient 3 sits on the short simple root, 2 on the long one
    short = min(range(2), key=lambda i: g2.form(g2._simple(i), g2._simple(i)))
    assert g2.highest[short] == 3
    assert g2.highest[1 - short] == 2


def test_pairing_duality_and_theta():
    c = _cartan("A", 2)
    rs = generate_roots(c)
    for i in range(2):
        for j in range(2):
            assert pairing(rs._simple(i), tuple(int(j == k) for k in range(2))) == int(i == j)
    assert pairing(rs.highest, rs.coroot(rs.highest)) == 2
    assert pairing((1, 1), rs.coroot((1, 0))) == 1


def test_pairing_dimension_mismatch():
    with pytest.raises(DomainError):
        pairing((1, 0), (1, 0, 0))


@pytest.mark.parametrize("family,rank", SMALL_TYPES)
def test_simple_coroots_are_cartan_columns(family, rank):
    c = _cartan(family, rank)
    rs = generate_roots(c)
    for i in range(rank):
        expected = tuple(c.finite_matrix[j][i] for j in range(rank))
        assert rs.coroot(rs._simple(i)) == expected


def test_coroot_additivity_in_a2():
    rs = generate_roots(_cartan("A", 2))
    theta_check = rs.coroot((1, 1))
    assert theta_check == exact.vec_add(rs.coroot((1, 0)), rs.coroot((0, 1)))


def test_g2_highest_coroot_is_short_side():
    rs = generate_roots(_cartan("G", 2))
    norms = {root: rs.form(root, root) for root in rs.roots}
    assert norms[rs.highest] == max(norms.values())
    # independent recomputation of the coroot of theta from the form
    theta = rs.highest
    expected = tuple(
        exact.intify(Fraction(2) * rs.form(rs._simple(j), theta) / rs.form(theta, theta))
        for j in range(2)
    )
    assert rs.coroot(theta) == expected


def test_coroot_rejects_non_root():
    rs = generate_roots(_cartan("A", 2))
    with pytest.raises(DomainError):
        rs.coroot((2, 0))


def test_simple_reflection_action_a2():
    rs = generate_roots(_cartan("A", 2))
    s1 = rs.simple_reflection(0)
    assert act_on_root(s1, (1, 0)) == (-1, 0)
    assert act_on_root(s1, (0, 1)) == (1, 1)


def test_coxeter_element_order_a2():
    rs = generate_roots(_cartan("A", 2))
    cox = compose(rs.simple_reflection(0), rs.simple_reflection(1))
    assert order(cox) == 3


def test_char_poly_identity():
    for r in (1, 2, 5):
        expected = (1,)
        for _ in range(r):
            expected = exact.poly_mul(expected, (1, -1))
        assert char_poly(identity_weyl(r)) == expected


@pytest.mark.parametrize("family,rank", SMALL_TYPES)
def test_reflections_permute_roots_and_preserve_pairing(family, rank):
    rs = generate_roots(_cartan(family, rank))
    basis_coweights = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    for i in range(rank):
        w = rs.simple_reflection(i)
        assert {act_on_root(w, a) for a in rs.roots} == set(rs.roots)
        for a in rs.roots[:6]:
            for mu in basis_coweights:
                assert pairing(act_on_root(w, a), act_on_coweight(w, mu)) == pairing(a, mu)


@pytest.mark.parametrize("family,rank", SMALL_TYPES)
def test_coxeter_char_poly_has_no_fixed_vector(family, rank):
    rs = generate_roots(_cartan(family, rank))
    w = identity_weyl(rank)
    for i in range(rank):
        w = compose(w, rs.simple_reflection(i))
    assert exact.poly_eval(char_poly(w), 1) != 0


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_weyl_words_preserve_pairing(data):
    family, rank = data.draw(st.sampled_from(SMALL_TYPES))
    rs = generate_roots(_cartan(family, rank))
    word = data.draw(st.lists(st.integers(0, rank - 1), max_size=8))
    w = identity_weyl(rank)
    for i in word:
        w = compose(w, rs.simple_reflection(i))
    root = data.draw(st.sampled_from(rs.roots))
    mu = tuple(data.draw(st.integers(-3, 3)) for _ in range(rank))
    assert pairing(act_on_root(w, root), act_on_coweight(w, mu)) == pairing(root, mu)
    assert act_on_root(compose(w_inverse(w), w), root) == root


def test_ext_translation_subgroup():
    x = translation_element((1, 0))
    y = translation_element((0, 2))
    assert ext_compose(x, y) == translation_element((1, 2))


def test_ext_semidirect_conjugation():
    rs = generate_roots(_cartan("A", 2))
    w = rs.simple_reflection(0)
    g = ExtAffineElement((0, 0), w)
    t = translation_element((1, 1))
    conj = ext_compose(ext_compose(g, t), ext_inverse(g))
    assert conj == translation_element(act_on_coweight(w, (1, 1)))


def test_affine_node_reflection_squares_to_identity():
    rs = generate_roots(_cartan("A", 2))
    s0 = affine_reflection_zero(rs)
    assert ext_power(s0, 2) == ext_identity(2)


@pytest.mark.parametrize("family,rank", SMALL_TYPES)
def test_ext_power_by_finite_order_is_translation(family, rank):
    c = _cartan(family, rank)
    rs = generate_roots(c)
    x = affine_reflection_zero(rs)
    for i in range(rank):
        x = ext_compose(x, ExtAffineElement(tuple([0] * rank), rs.simple_reflection(i)))
    m = order(x.finite)
    assert ext_power(x, m).finite.is_identity


def test_affine_simple_action_identity_and_failure():
    c = _cartan("A", 2)
    rs = generate_roots(c)
    assert affine_simple_action(c, ext_identity(2)) == (0, 1, 2)
    assert affine_simple_action(c, affine_reflection_zero(rs)) is None


def test_sigma_representative_identity():
    c = _cartan("A", 2)
    ident = pi1_automorphisms(c)[0]
    assert sigma_representative(c, ident) == ext_identity(2)


def test_sigma_representative_a1_swap():
    c = _cartan("A", 1)
    swap = next(a for a in pi1_automorphisms(c) if not a.is_identity)
    x = sigma_representative(c, swap)
    assert x.translation == (1,)
    assert act_on_root(x.finite, (1,)) == (-1,)
    assert affine_simple_action(c, x) == (1, 0)


def test_sigma_representative_a2_rotation_is_three_cycle():
    c = _cartan("A", 2)
    rot = next(a for a in pi1_automorphisms(c) if a.permutation[0] == 1)
    x = sigma_representative(c, rot)
    assert affine_simple_action(c, x) == (1, 2, 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_sigma_representative_bn_fixes_tail(n):
    c = _cartan("B", n)
    swap = next(a for a in pi1_automorphisms(c) if not a.is_identity)
    x = sigma_representative(c, swap)
    assert x.translation == tuple(int(i == 0) for i in range(n))
    for i in range(1, n):
        simple = tuple(int(i == j) for j in range(n))
        assert act_on_root(x.finite, simple) == simple


@pytest.mark.parametrize("family,rank", [("A", 3), ("A", 4), ("D", 4), ("D", 5), ("E", 6)])
def test_sigma_representatives_compose(family, rank):
    c = _cartan(family, rank)
    autos = pi1_automorphisms(c)
    for a in autos:
        for b in autos:
            combined = ext_compose(sigma_representative(c, a), sigma_representative(c, b))
            expected = tuple(a.permutation[b.permutation[i]] for i in range(rank + 1))
            assert affine_simple_action(c, combined) == expected
