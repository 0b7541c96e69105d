import pytest
from hypothesis import given, settings

from polarize.duality import alexander_dual, minimal_transversals
from polarize.ideals import Monomial, MonomialIdeal, VarRef, ideal, squarefree_power
from polarize.partitions import box_partition, partition_to_ideal, single_variable_partition
from polarize.trees import enumerate_spanning_trees, tree_polarization
from polarize.hilbert import is_polarization
from oracles import brute_force_dual
from strategies import squarefree_ideals


def test_single_generator():
    assert alexander_dual(ideal([(1, 1), (2, 1), (3, 1)])) == ideal([(1, 1)], [(2, 1)], [(3, 1)])


def test_i2_self_dual_n3():
    I = squarefree_power(3, 2)
    assert alexander_dual(I) == I
    assert brute_force_dual(I) == I


def test_i3_n4_dual_is_i2():
    I = squarefree_power(4, 3)
    assert alexander_dual(I) == squarefree_power(4, 2)
    assert brute_force_dual(I) == squarefree_power(4, 2)


@pytest.mark.parametrize("n,d", [(4, 2), (5, 2), (5, 3), (6, 3), (6, 4)])
def test_degree_complement(n, d):
    D = alexander_dual(squarefree_power(n, d))
    assert D == squarefree_power(n, n - d + 1)
    assert {g.degree for g in D.gens} == {n - d + 1}


def test_zero_ideal_dual_is_zero():
    Z = MonomialIdeal((), frozenset({VarRef(1), VarRef(2)}))
    D = alexander_dual(Z)
    assert D.is_zero and D.ambient == Z.ambient


def test_rejects_unit_and_non_squarefree():
    with pytest.raises(ValueError):
        alexander_dual(MonomialIdeal((Monomial(),)))
    with pytest.raises(ValueError):
        alexander_dual(ideal([(1, 1, 2)]))


def test_minimal_transversals_masks():
    assert sorted(minimal_transversals([0b011, 0b110])) == [0b010, 0b101]
    with pytest.raises(ValueError):
        minimal_transversals([0])


@given(squarefree_ideals(max_vars=7, max_gens=8))
@settings(max_examples=150)
def test_matches_brute_force(I):
    assert alexander_dual(I) == brute_force_dual(I)


@given(squarefree_ideals(max_vars=7, max_gens=8))
@settings(max_examples=150)
def test_involution(I):
    assert alexander_dual(alexander_dual(I)) == I


@pytest.mark.parametrize(
    "pol,target",
    [
        (partition_to_ideal(box_partition(5, 2)), squarefree_power(5, 4)),
        (partition_to_ideal(box_partition(5, 3)), squarefree_power(5, 3)),
        (partition_to_ideal(single_variable_partition(5, 3, 2)), squarefree_power(5, 3)),
    ],
)
def test_dual_of_polarization_is_polarization(pol, target):
    assert is_polarization(alexander_dual(pol), target)


def test_dual_of_tree_polarizations_n5():
    for T in enumerate_spanning_trees(5):
        assert is_polarization(alexander_dual(tree_polarization(T)), squarefree_power(5, 2))
