"""The eight acceptance criteria, one test each.

Each prints a PASS/FAIL line in the terminal summary (see conftest.py).
Run alone with ``python3 tests/test_acceptance.py``.  The partition sweep
for (5, 2) dominates the runtime at roughly two minutes.
"""

import sys
import time

import pytest

from polarize.ideals import ideal
from polarize.partitions import (
    PartitionFamily,
    dual_partition,
    ideal_to_partition,
    partition_to_ideal,
)
from polarize.sweeps import (
    oracle_sweep,
    partition_sweep,
    surjectivity_check,
    tree_sweep,
    triangle_sweep,
)

PARTITION_CASES = [(3, 2), (4, 2), (4, 3), (5, 2)]


@pytest.fixture(scope="module")
def partition_reports():
    return {nd: partition_sweep(*nd) for nd in PARTITION_CASES}


@pytest.fixture(scope="module")
def triangle_reports():
    return {d: triangle_sweep(d) for d in (2, 3, 4)}


@pytest.fixture(scope="module")
def tree_reports():
    start = time.time()
    reps = {n: tree_sweep(n) for n in (3, 4, 5)}
    reps["elapsed"] = time.time() - start
    return reps


@pytest.mark.acceptance(1, "example partition maps to its ideal, back, and to its dual parts")
def test_example_fidelity():
    start = time.time()
    fam = PartitionFamily.from_lists(4, 3, {1: [[[2, 3], [2, 4]], [[3, 4]]], 2: [[[1, 3]], [[1, 4], [3, 4]]]})
    expected = ideal(
        [(1, 1), (2, 1), (3, 1)],
        [(1, 1), (2, 2), (4, 1)],
        [(1, 2), (3, 1), (4, 1)],
        [(2, 2), (3, 1), (4, 1)],
    )
    I = partition_to_ideal(fam)
    assert I.gens == expected.gens
    assert ideal_to_partition(expected, 4) == fam
    D = dual_partition(fam)
    expected_dual = PartitionFamily.from_lists(4, 2, {1: [[[4], [3]], [[2]]], 2: [[[4]], [[3], [1]]]})
    assert D == expected_dual
    # part order is kept too, not just the set of parts
    assert [[set(map(frozenset, s)) for s in p] for p in D.parts[:2]] == [
        [{frozenset({4}), frozenset({3})}, {frozenset({2})}],
        [{frozenset({4})}, {frozenset({3}), frozenset({1})}],
    ]
    assert time.time() - start < 1


@pytest.mark.acceptance(2, "duality sweep: D(pol(P)) = pol(dual P) for every passing family")
def test_duality_sweep(partition_reports):
    for nd, rep in partition_reports.items():
        assert rep["families_checked"] > 0, nd
        assert rep["duality_ok"] == rep["criterion_pass"], (nd, rep["duality_failures"])
    big = partition_reports[(5, 2)]
    assert big["families_checked"] == 15 ** 5
    assert big["elapsed"] < 300


@pytest.mark.acceptance(3, "criterion agrees with the Hilbert oracle on every family")
def test_criterion_is_regularity(partition_reports):
    for nd, rep in partition_reports.items():
        assert rep["disagreements"] == 0, (nd, rep["disagreement_witnesses"])
        assert rep["criterion_pass"] == rep["hilbert_pass"]


@pytest.mark.acceptance(4, "triangle construction certified for d = 2, 3, 4")
def test_triangle_certification(triangle_reports):
    for d, rep in triangle_reports.items():
        assert rep["choices"] == 3 ** ((d - 1) * d // 2)
        assert rep["ok"], rep["failures"]
        for key in ("polarization", "resolution", "minimal", "face_counts"):
            assert rep["checks"][key] == rep["choices"]
    assert triangle_reports[4]["expected_face_counts"] == [15, 24, 10]
    assert triangle_reports[4]["elapsed"] < 120


@pytest.mark.acceptance(5, "tree sweep for n = 3, 4, 5 with path/box and star/standard identifications")
def test_tree_sweep(tree_reports):
    assert [tree_reports[n]["trees"] for n in (3, 4, 5)] == [3, 16, 125]
    for n in (3, 4, 5):
        rep = tree_reports[n]
        assert rep["ok"], rep["failures"]
        for key in ("polarization", "relation_graph", "maximal", "dual_formula"):
            assert rep["checks"][key] == rep["trees"]
    assert tree_reports[4]["path_is_box"] and tree_reports[4]["star_is_standard"]
    assert tree_reports["elapsed"] < 60


@pytest.mark.acceptance(6, "total graded Betti numbers preserved by every polarization above")
def test_betti_preservation(partition_reports, triangle_reports, tree_reports):
    for nd, rep in partition_reports.items():
        assert rep["betti_checked"] == 2 * rep["criterion_pass"], nd
        assert rep["betti_ok"] == rep["betti_checked"], (nd, rep["betti_failures"])
    for d, rep in triangle_reports.items():
        assert rep["checks"]["betti"] == rep["choices"], d
    for n in (3, 4, 5):
        assert tree_reports[n]["checks"]["betti"] == tree_reports[n]["trees"], n


@pytest.mark.acceptance(7, "surjectivity at n = 4: maximal families and tree duals give the same 16 forms")
def test_surjectivity():
    rep = surjectivity_check(4)
    assert rep["family_forms"] == rep["tree_forms"] == 16
    assert rep["ok"], (rep["only_in_families"], rep["only_in_trees"])


@pytest.mark.acceptance(8, "pivot recursion equals inclusion-exclusion on 1000 seeded ideals")
def test_oracle_consistency():
    rep = oracle_sweep(1000, seed=0)
    assert rep["ideals"] == 1000
    assert rep["mismatches"] == 0, rep["witnesses"]
    assert rep["elapsed"] < 30


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
