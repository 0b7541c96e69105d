"""Multigraded Betti numbers from upper Koszul simplicial complexes.

beta_{i,a}(I) = dim H~_{i-1}(K^a) where K^a is the complex of square-free
b <= a with x^(a-b) in I.  Only multidegrees in the lcm lattice of the
generators can carry Betti numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .hilbert import exponent_vectors
from .homology import simplicial_reduced_homology
from .ideals import Monomial, MonomialIdeal, VarRef


@dataclass(frozen=True)
class BettiTable:
    ranks: dict[tuple[int, Monomial], int]
    totals: dict[tuple[int, int], int] = field(init=False)

    def __post_init__(self):
        totals: dict[tuple[int, int], int] = {}
        for (i, a), r in self.ranks.items():
            key = (i, a.degree)
            totals[key] = totals.get(key, 0) + r
        object.__setattr__(self, "totals", dict(sorted(totals.items())))

    def total(self, i: int) -> int:
        return sum(r for (j, _), r in self.totals.items() if j == i)

    @property
    def total_betti(self) -> tuple[int, ...]:
        if not self.ranks:
            return ()
        top = max(i for i, _ in self.ranks)
        return tuple(self.total(i) for i in range(top + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.total_betti))

    def to_json(self) -> dict:
        return {
            "ranks": {f"{i}:{a}": r for (i, a), r in sorted(self.ranks.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key()))},
            "totals": {f"{i}:{j}": r for (i, j), r in self.totals.items()},
            "total_betti": list(self.total_betti),
        }


def lcm_lattice(vecs: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """All lcms of nonempty generator subsets."""
    seen = set(vecs)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in vecs:
                m = tuple(map(max, a, g))
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt
    return seen


def _koszul_facets(a: tuple[int, ...], gens: list[tuple[int, ...]]) -> list[int]:
    # K^a is the union of the full simplices on F_g = {v : a_v - 1 >= g_v}, g | a
    supp = [k for k, e in enumerate(a) if e]
    facets = set()
    for g in gens:
        if all(x <= y for x, y in zip(g, a)):
            f = 0
            for pos, k in enumerate(supp):
                if a[k] - 1 >= g[k]:
                    f |= 1 << pos
            facets.add(f)
    # keep the inclusion-maximal ones
    out = []
    for f in sorted(facets, key=lambda f: -f.bit_count()):
        if not any(f & h == f for h in out):
            out.append(f)
    return out


def _closure(facets: list[int]) -> set[int]:
    faces: set[int] = set()
    for f in facets:
        if f in faces:
            continue
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return faces


def _koszul_faces(a: tuple[int, ...], gens: list[tuple[int, ...]]) -> set[int]:
    return _closure(_koszul_facets(a, gens))


def _nerve(facets: list[int], cap: int) -> set[int] | None:
    """Sets of facets with a common vertex, or None past ``cap`` faces."""
    out = {0}
    stack = [(0, -1, -1)]  # (chosen facets mask, running intersection, last index)
    while stack:
        chosen, inter, last = stack.pop()
        for k in range(last + 1, len(facets)):
            nxt = facets[k] & inter
            if nxt:
                out.add(chosen | 1 << k)
                if len(out) > cap:
                    return None
                stack.append((chosen | 1 << k, nxt, k))
    return out


def koszul_homology(a: tuple[int, ...], gens: list[tuple[int, ...]]) -> dict[int, int]:
    """Reduced homology of the upper Koszul complex K^a.

    K^a is covered by simplices, so it has the homotopy type of the nerve of
    its maximal faces; whichever of the two is smaller gets used.
    """
    facets = _koszul_facets(a, gens)
    if len(facets) == 1:
        return {-1: 1} if facets[0] == 0 else {}
    faces = _closure(facets)
    nerve = _nerve(facets, len(faces))
    return simplicial_reduced_homology(nerve if nerve is not None else faces)


def betti_table(ideal: MonomialIdeal) -> BettiTable:
    if ideal.is_unit:
        raise ValueError("not a proper ideal")
    vecs, variables = exponent_vectors(ideal)
    ranks: dict[tuple[int, Monomial], int] = {}
    for a in lcm_lattice(vecs):
        for dim, r in koszul_homology(a, vecs).items():
            ranks[(dim + 1, _monomial(a, variables))] = r
    return BettiTable(ranks)


def _monomial(a: tuple[int, ...], variables: list[VarRef]) -> Monomial:
    return Monomial(tuple((variables[k], e) for k, e in enumerate(a) if e))
