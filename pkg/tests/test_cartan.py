"""Cartan matrices, Kac labels, fundamental-group automorphisms, folding."""

import pytest

from weylcox import (
    DomainError,
    DynkinType,
    StructuralError,
    cartan_matrix,
    fold,
    kac_labels,
    pi1_automorphisms,
)
from weylcox import exact
from weylcox.cartan import compose_automorphisms, diagram_automorphism

ALL_TYPES = [
    ("A", 1), ("A", 2), ("A", 5), ("B", 3), ("B", 5), ("C", 2), ("C", 4),
    ("D", 4), ("D", 6), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
]


@pytest.mark.parametrize("family,rank", [("A", 0), ("B", 2), ("C", 1), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 4), ("H", 2)])
def test_inadmissible_types_rejected(family, rank):
    with pytest.raises(DomainError):
        DynkinType(family, rank)


def test_a1_matrices():
    c = cartan_matrix(DynkinType("A", 1))
    assert c.finite_matrix == ((2,),)
    assert c.affine_matrix == ((2, -2), (-2, 2))


def test_a2_affine_is_cyclic():
    c = cartan_matrix(DynkinType("A", 2))
    assert c.affine_matrix == ((2, -1, -1), (-1, 2, -1), (-1, -1, 2))


def test_g2_finite_orientation():
    c = cartan_matrix(DynkinType("G", 2))
    assert c.finite_matrix == ((2, -1), (-3, 2))


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_cartan_invariants(family, rank):
    c = cartan_matrix(DynkinType(family, rank))
    for m in (c.finite_matrix, c.affine_matrix):
        n = len(m)
        for i in range(n):
            assert m[i][i] == 2
            for j in range(n):
                if i != j:
                    assert m[i][j] in (0, -1, -2, -3)
                    assert (m[i][j] == 0) == (m[j][i] == 0)
    assert exact.leading_minors_positive(c.finite_matrix)
    assert exact.rank(c.affine_matrix) == rank


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_kac_labels_are_exact_null_vectors(family, rank):
    c = cartan_matrix(DynkinType(family, rank))
    labels = kac_labels(c)
    a = c.affine_matrix
    n = len(a)
    # marks kill every column, comarks every row, in integer arithmetic
    for j in range(n):
        assert sum(labels.marks[i] * a[i][j] for i in range(n)) == 0
    for i in range(n):
        assert sum(a[i][j] * labels.comarks[j] for j in range(n)) == 0
    assert labels.marks[0] == 1 and labels.comarks[0] == 1
    assert all(x > 0 for x in labels.marks + labels.comarks)


def test_kac_labels_small_cases():
    a1 = kac_labels(cartan_matrix(DynkinType("A", 1)))
    assert a1.marks == (1, 1) and a1.comarks == (1, 1)
    for n in (2, 3, 4):
        an = kac_labels(cartan_matrix(DynkinType("A", n)))
        assert an.comarks == tuple([1] * (n + 1))
    g2 = kac_labels(cartan_matrix(DynkinType("G", 2)))
    assert g2.comarks[0] == 1


def test_kac_labels_rejects_nonsingular_input():
    c = cartan_matrix(DynkinType("A", 2))
    with pytest.raises(StructuralError):
        kac_labels(c.finite_matrix)  # finite matrix has full rank


def test_pi1_a2_is_cyclic_of_order_three():
    c = cartan_matrix(DynkinType("A", 2))
    autos = pi1_automorphisms(c)
    assert len(autos) == 3
    assert sorted(a.order for a in autos) == [1, 3, 3]
    perms = {a.permutation for a in autos}
    assert (0, 1, 2) in perms
    assert (1, 2, 0) in perms and (2, 0, 1) in perms


def test_pi1_e8_trivial():
    autos = pi1_automorphisms(cartan_matrix(DynkinType("E", 8)))
    assert len(autos) == 1 and autos[0].is_identity


@pytest.mark.parametrize("n", [3, 4, 5])
def test_pi1_bn_swaps_affine_node_with_first(n):
    autos = pi1_automorphisms(cartan_matrix(DynkinType("B", n)))
    assert len(autos) == 2
    swap = next(a for a in autos if not a.is_identity)
    expected = tuple([1, 0] + list(range(2, n + 1)))
    assert swap.permutation == expected
    assert swap.order == 2


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_pi1_is_a_group_of_order_dividing_connection_index(family, rank):
    c = cartan_matrix(DynkinType(family, rank))
    autos = pi1_automorphisms(c)
    perms = {a.permutation for a in autos}
    for a in autos:
        for b in autos:
            assert compose_automorphisms(a, b).permutation in perms
    assert exact.det(c.finite_matrix) % len(autos) == 0


def test_pi1_d_even_contains_involutions_and_vector_swap():
    c = cartan_matrix(DynkinType("D", 4))
    autos = pi1_automorphisms(c)
    assert len(autos) == 4
    assert sorted(a.order for a in autos) == [1, 2, 2, 2]
    first_images = sorted(a.permutation[0] for a in autos)
    assert first_images == [0, 1, 3, 4]


def test_fold_identity_is_identity():
    c = cartan_matrix(DynkinType("B", 3))
    ident = pi1_automorphisms(c)[0]
    folded = fold(c, ident)
    assert folded.matrix == c.affine_matrix
    assert not folded.degenerate


def test_fold_a3_half_rotation():
    c = cartan_matrix(DynkinType("A", 3))
    half = next(a for a in pi1_automorphisms(c) if a.order == 2)
    folded = fold(c, half)
    assert folded.matrix == ((2, -2), (-2, 2))
    assert not folded.degenerate


def test_fold_a2_rotation_degenerates():
    c = cartan_matrix(DynkinType("A", 2))
    rot = next(a for a in pi1_automorphisms(c) if a.order == 3)
    folded = fold(c, rot)
    assert folded.degenerate
    assert folded.matrix == ((0,),)


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_fold_output_affine_or_degenerate_with_positive_labels(family, rank):
    c = cartan_matrix(DynkinType(family, rank))
    for sigma in pi1_automorphisms(c):
        if sigma.is_identity:
            continue
        folded = fold(c, sigma)
        if folded.degenerate:
            continue
        k = len(folded.matrix)
        assert exact.rank(folded.matrix) == k - 1
        labels = kac_labels(folded)
        assert len(labels.comarks) == len(sigma.orbits())
        assert all(x > 0 for x in labels.comarks)


def test_fold_rejects_non_automorphism():
    c = cartan_matrix(DynkinType("B", 3))
    bad = diagram_automorphism(cartan_matrix(DynkinType("A", 3)), (1, 2, 3, 0))
    with pytest.raises(DomainError):
        fold(c, bad)


def test_diagram_automorphism_validation():
    c = cartan_matrix(DynkinType("B", 3))
    with pytest.raises(DomainError):
        diagram_automorphism(c, (1, 2, 0, 3))  # does not preserve the matrix
    with pytest.raises(DomainError):
        diagram_automorphism(c, (0, 0, 1, 2))  # not a permutation
