"""Polarizations of (x_1, ..., x_n)^d and of square-free powers I_d.

Modules: ideals, hilbert, duality, betti, partitions, trees, graphs,
trianglegrid, cellres, sweeps, cli.
"""

from .betti import BettiTable, betti_table
from .cellres import LabeledCellComplex, is_acyclic, is_minimal, restrict, supports_resolution
from .duality import alexander_dual
from .hilbert import HilbertNumerator, hilbert_numerator, is_polarization
from .ideals import (
    Monomial,
    MonomialIdeal,
    VarRef,
    box_polarization,
    canonical_form,
    depolarize,
    isomorphic,
    maximal_ideal_power,
    minimalize,
    squarefree_power,
    standard_polarization,
)
from .partitions import (
    PartitionFamily,
    box_partition,
    d2_criterion,
    dual_partition,
    ideal_to_partition,
    is_maximal,
    partition_to_ideal,
    satisfies_criterion,
    single_variable_partition,
)
from .trees import LabeledTree, enumerate_spanning_trees, linear_relation_graph, tree_dual, tree_polarization
from .graphs import SimpleGraph, edge_ideal, split_vertex, valid_splits
from .trianglegrid import ChainSequence, TriangleChoice, build_delta_complex, construct_polarization, gamma_complex

__all__ = [
    "alexander_dual",
    "betti_table",
    "BettiTable",
    "box_partition",
    "box_polarization",
    "build_delta_complex",
    "canonical_form",
    "ChainSequence",
    "construct_polarization",
    "d2_criterion",
    "depolarize",
    "dual_partition",
    "edge_ideal",
    "enumerate_spanning_trees",
    "gamma_complex",
    "hilbert_numerator",
    "HilbertNumerator",
    "ideal_to_partition",
    "is_acyclic",
    "is_maximal",
    "is_minimal",
    "is_polarization",
    "isomorphic",
    "LabeledCellComplex",
    "LabeledTree",
    "linear_relation_graph",
    "maximal_ideal_power",
    "minimalize",
    "Monomial",
    "MonomialIdeal",
    "partition_to_ideal",
    "PartitionFamily",
    "restrict",
    "satisfies_criterion",
    "SimpleGraph",
    "single_variable_partition",
    "split_vertex",
    "squarefree_power",
    "standard_polarization",
    "supports_resolution",
    "tree_dual",
    "tree_polarization",
    "TriangleChoice",
    "valid_splits",
    "VarRef",
]
