"""Edge ideals and vertex splitting.

Splitting a vertex i with link N(i) = A u B replaces i by two copies, one
joined to A and one to B.  This is a polarization step exactly when every
a in A is adjacent to every b in B.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .ideals import Monomial, MonomialIdeal, VarRef, minimalize

MAX_LINK = 20

Split = tuple[frozenset[VarRef], frozenset[VarRef]]


def _var(v) -> VarRef:
    if isinstance(v, VarRef):
        return v
    if isinstance(v, int):
        return VarRef(v)
    return VarRef(*v)


@dataclass(frozen=True)
class SimpleGraph:
    vertices: frozenset[VarRef]
    edges: frozenset[frozenset[VarRef]]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise ValueError("loops are not allowed")
            if not e <= self.vertices:
                raise ValueError(f"edge {sorted(e)} uses an unknown vertex")

    @classmethod
    def of(cls, vertices, edges) -> "SimpleGraph":
        vs = frozenset(_var(v) for v in vertices)
        es = frozenset(frozenset((_var(u), _var(v))) for u, v in edges)
        return cls(vs | frozenset(v for e in es for v in e), es)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls.of(range(1, n + 1), itertools.combinations(range(1, n + 1), 2))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.of(range(1, n + 1), ((i, i + 1) for i in range(1, n)))

    def neighbors(self, v) -> frozenset[VarRef]:
        v = _var(v)
        return frozenset(u for e in self.edges if v in e for u in e if u != v)

    def adjacent(self, u, v) -> bool:
        return frozenset((_var(u), _var(v))) in self.edges

    def sorted_edges(self) -> list[tuple[VarRef, VarRef]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in sorted(self.vertices)],
            "edges": [[list(u), list(v)] for u, v in self.sorted_edges()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SimpleGraph":
        """Edge endpoints are [base, copy] pairs or plain ints (copy 1)."""
        try:
            return cls.of([tuple(v) for v in data.get("vertices", [])], [(u if isinstance(u, int) else tuple(u), v if isinstance(v, int) else tuple(v)) for u, v in data["edges"]])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from exc


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    gens = [Monomial.of((v, 1) for v in e) for e in G.edges]
    return minimalize(gens, G.vertices)


def valid_splits(G: SimpleGraph, i) -> list[Split]:
    """Unordered bipartitions (A, B) of N(i) with every A-B pair adjacent.

    A always holds the smallest neighbor, so each split is listed once.
    """
    i = _var(i)
    if i not in G.vertices:
        raise ValueError(f"{i} is not a vertex")
    link = sorted(G.neighbors(i))
    if len(link) > MAX_LINK:
        raise ValueError(f"link of {i} has {len(link)} vertices, limit is {MAX_LINK}")
    if len(link) < 2:
        return []
    first, rest = link[0], link[1:]
    out = []
    for mask in range(2 ** len(rest) - 1):
        A = frozenset([first] + [v for k, v in enumerate(rest) if mask >> k & 1])
        B = frozenset(link) - A
        if split_witness(G, i, (A, B)) is None:
            out.append((A, B))
    return out


def split_witness(G: SimpleGraph, i, split: Split) -> Monomial | None:
    """x_a x_b for a non-adjacent a in A, b in B, or None if the split is valid.

    For a bad split, that monomial kills x_i - x_i' modulo the split ideal.
    """
    A, B = split
    for a in sorted(A):
        for b in sorted(B):
            if not G.adjacent(a, b):
                return Monomial.of([(a, 1), (b, 1)])
    return None


def split_vertex(G: SimpleGraph, i, split: Split) -> SimpleGraph:
    """Keep i on the A side and add a fresh copy of i for the B side."""
    i = _var(i)
    A = frozenset(_var(v) for v in split[0])
    B = frozenset(_var(v) for v in split[1])
    link = G.neighbors(i)
    if not A or not B or A & B or A | B != link:
        raise ValueError("split must be a bipartition of the link into nonempty parts")
    w = split_witness(G, i, (A, B))
    if w is not None:
        raise ValueError(f"invalid split: {w} is not an edge")
    fresh = VarRef(i.base, max(v.copy for v in G.vertices if v.base == i.base) + 1)
    edges = {e for e in G.edges if i not in e}
    edges |= {frozenset((i, a)) for a in A}
    edges |= {frozenset((fresh, b)) for b in B}
    return SimpleGraph(G.vertices | {fresh}, frozenset(edges))


def parse_split(text: str) -> tuple[list[int], list[int]]:
    """``"2|3,4"`` -> ([2], [3, 4])"""
    try:
        left, right = text.split("|")
        return [int(x) for x in left.split(",") if x.strip()], [int(x) for x in right.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"bad split {text!r}, expected like 2|3,4") from exc
