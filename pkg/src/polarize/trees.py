"""Spanning trees of K_n and the polarizations of I_{n-1} they label.

Edge k (1-based position in ``edges``) carries the label k.  Cutting edge
e_k = (v, w) splits the tree in two; every vertex on v's side picks up
x_w^(k) and every vertex on w's side picks up x_v^(k).  The generator for a
vertex is the product of its n-1 labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .cellres import LabeledCellComplex, build_complex
from .ideals import Monomial, MonomialIdeal, VarRef

MAX_N = 8


@dataclass(frozen=True)
class LabeledTree:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a tree needs at least one vertex")
        if len(self.edges) != self.n - 1:
            raise ValueError(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(self.edges)}")
        for v, w in self.edges:
            if not (1 <= v <= self.n and 1 <= w <= self.n) or v == w:
                raise ValueError(f"bad edge {v}-{w}")
        if not nx.is_tree(self.graph):
            raise ValueError("edges do not form a spanning tree")

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        for k, (v, w) in enumerate(self.edges, start=1):
            g.add_edge(v, w, label=k)
        return g

    @property
    def edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def label(self, v: int, w: int) -> int:
        return self.graph.edges[v, w]["label"]

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "LabeledTree":
        try:
            return cls(int(data["n"]), tuple((int(v), int(w)) for v, w in data["edges"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed tree JSON: {exc}") from exc

    @classmethod
    def parse(cls, n: int, text: str) -> "LabeledTree":
        """``parse(3, "1-2,2-3")``"""
        edges = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                v, w = chunk.split("-")
                edges.append((int(v), int(w)))
            except ValueError as exc:
                raise ValueError(f"bad edge {chunk!r}, expected like 1-2") from exc
        return cls(n, tuple(edges))

    def __str__(self) -> str:
        return ",".join(f"{v}-{w}" for v, w in self.edges)


def path_tree(n: int) -> LabeledTree:
    return LabeledTree(n, tuple((i, i + 1) for i in range(1, n)))


def star_tree(n: int) -> LabeledTree:
    """Center n, e_i = (i, n)."""
    return LabeledTree(n, tuple((i, n) for i in range(1, n)))


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(1, n + 1) if degree[u] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [u for u in range(1, n + 1) if degree[u] == 1]
    edges.append((u, w))
    return edges


def enumerate_spanning_trees(n: int) -> list[LabeledTree]:
    """All n^(n-2) spanning trees of K_n, edges sorted with v < w and
    labeled in that order."""
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in 2..{MAX_N}, got {n}")
    trees = []
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        trees.append(LabeledTree(n, tuple(sorted(prufer_decode(seq, n)))))
    return sorted(trees, key=lambda t: t.edges)


def tree_generators(T: LabeledTree) -> dict[int, Monomial]:
    """Vertex v -> m_v."""
    labels: dict[int, list[VarRef]] = {v: [] for v in range(1, T.n + 1)}
    g = T.graph
    for k, (v, w) in enumerate(T.edges, start=1):
        h = g.copy()
        h.remove_edge(v, w)
        side_v = nx.node_connected_component(h, v)
        for u in range(1, T.n + 1):
            labels[u].append(VarRef(w, k) if u in side_v else VarRef(v, k))
    return {v: Monomial.of((x, 1) for x in xs) for v, xs in labels.items()}


def tree_polarization(T: LabeledTree) -> MonomialIdeal:
    return MonomialIdeal(tuple(tree_generators(T).values()))


def tree_dual(T: LabeledTree) -> MonomialIdeal:
    """x_i^(p) x_j^(q) where the path from i to j starts with e_p and ends with e_q."""
    g = T.graph
    gens = []
    for i, j in itertools.combinations(range(1, T.n + 1), 2):
        path = nx.shortest_path(g, i, j)
        p = g.edges[path[0], path[1]]["label"]
        q = g.edges[path[-2], path[-1]]["label"]
        gens.append(Monomial.of([(VarRef(i, p), 1), (VarRef(j, q), 1)]))
    return MonomialIdeal(tuple(gens))


def linear_relation_graph(ideal: MonomialIdeal) -> nx.Graph:
    """Nodes are generator positions (attribute ``monomial``); an edge joins two
    generators whose lcm has degree one more than theirs."""
    degrees = {g.degree for g in ideal.gens}
    if len(degrees) > 1:
        raise ValueError("linear relations need an equigenerated ideal")
    g = nx.Graph()
    for k, m in enumerate(ideal.gens):
        g.add_node(k, monomial=m)
    for (a, m), (b, n) in itertools.combinations(enumerate(ideal.gens), 2):
        if m.lcm(n).degree == m.degree + 1:
            g.add_edge(a, b)
    return g


def relation_edges_by_vertex(T: LabeledTree) -> frozenset[frozenset[int]]:
    """Linear relations of tree_polarization(T), read back on tree vertices."""
    gens = tree_generators(T)
    owner = {m: v for v, m in gens.items()}
    ideal = MonomialIdeal(tuple(gens.values()))
    g = linear_relation_graph(ideal)
    mono = nx.get_node_attributes(g, "monomial")
    return frozenset(frozenset((owner[mono[a]], owner[mono[b]])) for a, b in g.edges)


def tree_complex(T: LabeledTree) -> LabeledCellComplex:
    """T as a 1-dimensional labeled complex on the generators m_v."""
    gens = tree_generators(T)
    return build_complex([gens[v] for v in range(1, T.n + 1)], [(v - 1, w - 1) for v, w in T.edges])
