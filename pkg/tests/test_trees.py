import networkx as nx
import pytest

from oracles import brute_force_spanning_trees
from polarize.betti import betti_table
from polarize.cellres import is_minimal, supports_resolution
from polarize.duality import alexander_dual
from polarize.hilbert import is_polarization
from polarize.ideals import (
    box_polarization,
    canonical_form,
    depolarize,
    ideal,
    isomorphic,
    maximal_ideal_power,
    squarefree_power,
    standard_polarization,
)
from polarize.partitions import ideal_to_partition, is_maximal
from polarize.trees import (
    LabeledTree,
    enumerate_spanning_trees,
    linear_relation_graph,
    path_tree,
    relation_edges_by_vertex,
    star_tree,
    tree_complex,
    tree_dual,
    tree_polarization,
)


@pytest.mark.parametrize("n,count", [(2, 1), (3, 3), (4, 16), (5, 125)])
def test_tree_counts_match_brute_force(n, count):
    trees = enumerate_spanning_trees(n)
    assert len(trees) == count
    assert {t.edge_set for t in trees} == brute_force_spanning_trees(n)


def test_enumeration_is_deterministic_and_canonical():
    a = enumerate_spanning_trees(4)
    assert a == enumerate_spanning_trees(4)
    for t in a:
        assert all(v < w for v, w in t.edges)
        assert list(t.edges) == sorted(t.edges)


@pytest.mark.parametrize("n", [1, 9])
def test_enumeration_range(n):
    with pytest.raises(ValueError):
        enumerate_spanning_trees(n)


def test_path_polarization_example():
    P = tree_polarization(path_tree(3))
    want = ideal([(2, 1), (3, 2)], [(1, 1), (3, 2)], [(1, 1), (2, 2)])
    assert P.gens == want.gens


def test_path_dual_example():
    D = tree_dual(path_tree(3))
    want = ideal([(1, 1), (2, 1)], [(1, 1), (3, 2)], [(2, 2), (3, 2)])
    assert D.gens == want.gens
    assert alexander_dual(tree_polarization(path_tree(3))) == D


def test_edge_orientation_only_moves_labels():
    a = LabeledTree.parse(3, "1-2,2-3")
    b = LabeledTree.parse(3, "2-1,3-2")
    assert tree_polarization(a) == tree_polarization(b)
    assert a.edge_set == b.edge_set


def test_star_is_standard_polarization():
    assert isomorphic(tree_dual(star_tree(4)), standard_polarization(maximal_ideal_power(3, 2)))


def test_path_is_box_polarization():
    assert isomorphic(tree_dual(path_tree(4)), box_polarization(3, 2))


def test_path_and_star_differ():
    assert not isomorphic(tree_dual(path_tree(4)), tree_dual(star_tree(4)))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_every_tree(n):
    target = squarefree_power(n, n - 1)
    seen = set()
    for T in enumerate_spanning_trees(n):
        P = tree_polarization(T)
        assert depolarize(P).ideal == target
        assert is_polarization(P, target)
        assert is_maximal(ideal_to_partition(P, n))
        D = tree_dual(T)
        assert alexander_dual(P) == D
        assert is_polarization(D, squarefree_power(n, 2))
        assert relation_edges_by_vertex(T) == T.edge_set
        seen.add(canonical_form(P))
    assert len(seen) == n ** (n - 2)


def test_relation_graph_of_unpolarized_is_complete():
    g = linear_relation_graph(squarefree_power(5, 4))
    assert nx.is_isomorphic(g, nx.complete_graph(5))


def test_relation_graph_is_the_tree():
    T = LabeledTree.parse(5, "1-2,2-3,2-4,4-5")
    g = linear_relation_graph(tree_polarization(T))
    assert nx.is_isomorphic(g, T.graph)
    assert nx.is_tree(g)


def test_box_relation_graph_against_betti():
    B = box_polarization(4, 2)
    g = linear_relation_graph(B)
    assert nx.is_connected(g)
    # every linear first syzygy is an edge and these are all of them in degree 3
    assert g.number_of_edges() == betti_table(B).totals[(1, 3)]


def test_relation_graph_needs_equigenerated():
    with pytest.raises(ValueError):
        linear_relation_graph(ideal([(1, 1)], [(2, 1), (3, 1)]))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_tree_complex_is_minimal_resolution(n):
    for T in enumerate_spanning_trees(n)[:20]:
        X = tree_complex(T)
        P = tree_polarization(T)
        assert supports_resolution(X, P) and is_minimal(X)
        assert betti_table(P).total_betti == (n, n - 1) == X.f_vector()


def test_bad_trees_rejected():
    with pytest.raises(ValueError):
        LabeledTree.parse(4, "1-2,2-3,3-1")
    with pytest.raises(ValueError):
        LabeledTree.parse(3, "1-2")
    with pytest.raises(ValueError):
        LabeledTree.parse(3, "1-1,2-3")
    with pytest.raises(ValueError):
        LabeledTree.parse(3, "1=2,2-3")


def test_json_round_trip():
    T = LabeledTree.parse(5, "3-1,2-3,4-2,5-2")
    assert LabeledTree.from_json(T.to_json()) == T
    assert T.label(2, 4) == 3
    with pytest.raises(ValueError):
        LabeledTree.from_json({"edges": []})
