import random

import pytest

from polarize.hilbert import inclusion_exclusion_numerator, hilbert_numerator
from polarize.partitions import enumerate_families, is_maximal, satisfies_criterion
from polarize.sweeps import (
    maximal_families,
    oracle_sweep,
    partition_sweep,
    random_squarefree_ideal,
    sampled_partition_sweep,
    surjectivity_check,
    tree_sweep,
    triangle_sweep,
)


@pytest.mark.parametrize("n,d,passing", [(3, 2, 4), (4, 2, 29), (4, 3, 29)])
def test_small_partition_sweeps(n, d, passing):
    rep = partition_sweep(n, d)
    assert rep["ok"]
    assert rep["criterion_pass"] == rep["hilbert_pass"] == passing
    assert rep["betti_ok"] == rep["betti_checked"] == 2 * passing


def test_sweep_counts_match_slow_path():
    # the sweep works on bit masks; redo (4, 2) through PartitionFamily objects
    fams = list(enumerate_families(4, 2))
    slow = [f for f in fams if satisfies_criterion(f)]
    rep = partition_sweep(4, 2, betti=False)
    assert rep["families_checked"] == len(fams)
    assert rep["criterion_pass"] == len(slow)
    assert rep["maximal"] == sum(is_maximal(f) for f in slow) == len(maximal_families(4, 2))


def test_sampled_sweep_reproducible():
    a = sampled_partition_sweep(5, 3, 60, seed=7, betti=False)
    b = sampled_partition_sweep(5, 3, 60, seed=7, betti=False)
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b and a["ok"] and a["families_checked"] == 60


def test_triangle_sweep_d3():
    rep = triangle_sweep(3)
    assert rep["ok"] and rep["choices"] == 27
    assert rep["expected_face_counts"] == [10, 15, 6]


def test_tree_sweep_n4():
    rep = tree_sweep(4)
    assert rep["ok"] and rep["trees"] == 16
    assert rep["path_is_box"] and rep["star_is_standard"]


def test_surjectivity_n3():
    rep = surjectivity_check(3)
    assert rep["ok"] and rep["family_forms"] == rep["tree_forms"] == 3


def test_random_ideals_are_seeded():
    a = [random_squarefree_ideal(random.Random(5)) for _ in range(3)]
    b = [random_squarefree_ideal(random.Random(5)) for _ in range(3)]
    assert a == b
    for I in a:
        assert hilbert_numerator(I) == inclusion_exclusion_numerator(I)


def test_oracle_sweep_small():
    rep = oracle_sweep(100, seed=3)
    assert rep["ok"] and rep["mismatches"] == 0 and rep["ideals"] == 100
