"""The triangular grid of (x, y, z)^d and polarizations built from it.

Variables: x, y, z are bases 1, 2, 3, so x_k is ``VarRef(1, k)``.

A generator x^a y^b z^c sits at lattice point (a, b, c).  Up triangles are
m*{x, y, z} for m of degree d-1, down triangles m*{xy, xz, yz} for m of
degree d-2.  A :class:`TriangleChoice` picks, for every down triangle, which
edge is dropped:

    X drops (mxy, mxz),  Y drops (mxy, myz),  Z drops (mxz, myz).

The polarization is assembled one variable at a time from chains of subsets
s_{i,0} < s_{i,1} < ... < s_{i,i} = [i].  For the x part, row i holds
x^{i-j} y^j z^{d-i} (j = y-degree) and that generator's x part is the
product of x_k over k in [i] \\ s_{i,j}.  The y part swaps x and y; the z
part uses rows x^{d-i} z^{i-j} y^j.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

from .cellres import LabeledCellComplex, build_complex
from .ideals import Monomial, MonomialIdeal, VarRef

Exp = tuple[int, int, int]
LETTERS = "XYZ"
NAMES = "xyz"


def monomials(k: int) -> list[Exp]:
    """Exponent triples of degree k, graded-lex with x > y > z."""
    if k < 0:
        return []
    return [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]


def xyz_string(m: Monomial) -> str:
    """x1*x2*y1 style rendering for bases 1..3."""
    if not m.exps:
        return "1"
    parts = []
    for v, e in m.exps:
        s = f"{NAMES[v.base - 1]}{v.copy}"
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


def exp_string(a: Exp) -> str:
    parts = []
    for name, e in zip(NAMES, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class TriangleChoice:
    d: int
    letters: tuple[str, ...]  # one per down triangle, graded-lex order

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("need d >= 2")
        want = (self.d - 1) * self.d // 2
        if len(self.letters) != want:
            raise ValueError(f"d={self.d} has {want} down triangles, got {len(self.letters)} choices")
        for c in self.letters:
            if c not in LETTERS:
                raise ValueError(f"choice {c!r} is not one of X, Y, Z")

    @classmethod
    def parse(cls, d: int, text: str) -> "TriangleChoice":
        """``parse(3, "x,y,z")``; a single letter is repeated for every triangle."""
        letters = [c.strip().upper() for c in text.split(",") if c.strip()]
        if len(letters) == 1:
            letters = letters * ((d - 1) * d // 2)
        return cls(d, tuple(letters))

    @cached_property
    def table(self) -> dict[Exp, str]:
        return dict(zip(monomials(self.d - 2), self.letters))

    def at(self, m: Exp) -> str:
        return self.table[m]

    def removed_edge(self, m: Exp) -> tuple[Exp, Exp]:
        a, b, c = m
        mxy, mxz, myz = (a + 1, b + 1, c), (a + 1, b, c + 1), (a, b + 1, c + 1)
        return {"X": (mxy, mxz), "Y": (mxy, myz), "Z": (mxz, myz)}[self.at(m)]

    def __str__(self) -> str:
        return ",".join(self.letters)


def all_choices(d: int):
    k = (d - 1) * d // 2
    for letters in itertools.product(LETTERS, repeat=k):
        yield TriangleChoice(d, letters)


def choice_count(d: int) -> int:
    return 3 ** ((d - 1) * d // 2)


@dataclass(frozen=True)
class ChainSequence:
    i: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.sets) != self.i + 1 or self.sets[0] or self.sets[-1] != frozenset(range(1, self.i + 1)):
            raise ValueError(f"not a maximal chain in the subsets of [{self.i}]: {self}")
        for a, b in zip(self.sets, self.sets[1:]):
            if not (a < b and len(b - a) == 1):
                raise ValueError(f"not a maximal chain in the subsets of [{self.i}]: {self}")

    def primed(self, j: int) -> frozenset[int]:
        return self.sets[j] | {self.i + 1}

    def __str__(self) -> str:
        return " < ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.sets)


# axis = (primary, secondary, fixed) coordinate positions in an Exp
AXES = {"X": (0, 1, 2), "Y": (1, 0, 2), "Z": (2, 1, 0)}


def _point(axis, primary: int, secondary: int, fixed: int) -> Exp:
    out = [0, 0, 0]
    p, s, f = axis
    out[p], out[s], out[f] = primary, secondary, fixed
    return tuple(out)


def chains(c: TriangleChoice, letter: str) -> list[ChainSequence]:
    """s(1), ..., s(d) for one variable; the union rule fires on its own letter."""
    axis = AXES[letter]
    d = c.d
    out = [ChainSequence(1, (frozenset(), frozenset({1})))]
    for i in range(1, d):
        prev = out[-1]
        sets = [frozenset()]
        for j in range(i + 1):
            if j == i:
                nxt = prev.primed(i)
            else:
                tri = _point(axis, i - 1 - j, j, d - i - 1)
                if c.at(tri) == letter:
                    nxt = sets[j] | (prev.primed(j + 1) - prev.primed(j))
                else:
                    nxt = prev.primed(j)
            sets.append(nxt)
        out.append(ChainSequence(i + 1, tuple(sets)))
    return out


def polarized_generators(c: TriangleChoice) -> dict[Exp, Monomial]:
    d = c.d
    per_axis = {letter: chains(c, letter) for letter in LETTERS}
    out = {}
    for m in monomials(d):
        factors = []
        for base, letter in enumerate(LETTERS, start=1):
            p, s, f = AXES[letter]
            i = d - m[f]
            if i == 0:
                continue
            j = m[s]
            chain = per_axis[letter][i - 1]
            for k in sorted(set(range(1, i + 1)) - chain.sets[j]):
                factors.append((VarRef(base, k), 1))
        out[m] = Monomial.of(factors)
    return out


def construct_polarization(c: TriangleChoice) -> MonomialIdeal:
    return MonomialIdeal(tuple(polarized_generators(c).values()))


# planar embedding: x at the top, y bottom left, z bottom right
def coordinates(m: Exp) -> tuple[float, float]:
    a, b, c = m
    return (c - b) / 2 + 0.0, a * math.sqrt(3) / 2


def grid_edges(d: int) -> list[tuple[Exp, Exp]]:
    pts = set(monomials(d))
    out = set()
    for m in pts:
        for src, dst in itertools.permutations(range(3), 2):
            if m[src] == 0:
                continue
            n = list(m)
            n[src] -= 1
            n[dst] += 1
            n = tuple(n)
            out.add(tuple(sorted((m, n), key=_vertex_key)))
    return sorted(out, key=lambda e: (_vertex_key(e[0]), _vertex_key(e[1])))


def _vertex_key(m: Exp):
    return (-m[0], -m[1])


def up_triangles(d: int) -> list[tuple[Exp, Exp, Exp]]:
    out = []
    for a, b, c in monomials(d - 1):
        out.append(((a + 1, b, c), (a, b + 1, c), (a, b, c + 1)))
    return out


def down_triangles(d: int) -> list[tuple[Exp, Exp, Exp]]:
    out = []
    for a, b, c in monomials(d - 2):
        out.append(((a + 1, b + 1, c), (a + 1, b, c + 1), (a, b + 1, c + 1)))
    return out


def _complex(d: int, labels: dict[Exp, Monomial], removed: set[frozenset[Exp]]) -> LabeledCellComplex:
    verts = monomials(d)
    index = {m: k for k, m in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in grid_edges(d) if frozenset((u, v)) not in removed]
    polys = trace_faces([coordinates(m) for m in verts], edges)
    return build_complex([labels[m] for m in verts], edges, polys)


def gamma_complex(d: int) -> LabeledCellComplex:
    """All up and down triangles, labeled by the plain generators of (x,y,z)^d."""
    if d < 2:
        raise ValueError("need d >= 2")
    labels = {m: Monomial.plain(*m) for m in monomials(d)}
    return _complex(d, labels, set())


def build_delta_complex(c: TriangleChoice) -> LabeledCellComplex:
    """Drop the chosen edge of each down triangle, retrace faces, relabel."""
    removed = {frozenset(c.removed_edge(m)) for m in monomials(c.d - 2)}
    return _complex(c.d, polarized_generators(c), removed)


def trace_faces(points: list[tuple[float, float]], edges: list[tuple[int, int]]) -> list[list[int]]:
    """Bounded faces of a straight-line planar graph, as counterclockwise cycles.

    Neighbors are sorted by angle; walking each half-edge u->v and turning to
    the neighbor of v just clockwise of u keeps the face on the left.  The
    unbounded face is the one with negative signed area.
    """
    nbrs: dict[int, list[int]] = {k: [] for k in range(len(points))}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def angle(u, v):
        (x0, y0), (x1, y1) = points[u], points[v]
        return math.atan2(y1 - y0, x1 - x0)

    for u in nbrs:
        nbrs[u].sort(key=lambda v: angle(u, v))
    seen = set()
    faces = []
    for u, v in edges:
        for start in ((u, v), (v, u)):
            if start in seen:
                continue
            cyc = []
            a, b = start
            while (a, b) not in seen:
                seen.add((a, b))
                cyc.append(a)
                ring = nbrs[b]
                k = ring.index(a)
                a, b = b, ring[k - 1]
            area = 0.0
            for p, q in zip(cyc, cyc[1:] + cyc[:1]):
                area += points[p][0] * points[q][1] - points[q][0] * points[p][1]
            if area > 1e-9:
                if len(set(cyc)) != len(cyc):
                    raise ValueError(f"face boundary revisits a vertex: {cyc}")
                faces.append(cyc)
    return sorted(faces, key=lambda f: sorted(f))
