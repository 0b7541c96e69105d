"""Labeled polyhedral cell complexes and cellular resolution certificates.

Face 0 is always the empty face (dimension -1, label 1).  Face labels are the
lcm of the labels of their vertices, so a facet's label always divides its
face's label.  A labeled complex supports a resolution of the ideal spanned by
its vertex labels iff every restriction X_{<=b}, b in the lcm lattice, has
vanishing reduced homology; it is minimal iff no face shares its label with
one of its facets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .homology import chain_homology
from .ideals import Monomial, MonomialIdeal


@dataclass(frozen=True)
class Face:
    dim: int
    vertices: tuple[int, ...]
    facets: tuple[tuple[int, int], ...]  # (face index, sign)


@dataclass(frozen=True)
class LabeledCellComplex:
    faces: tuple[Face, ...]
    labels: tuple[Monomial, ...]

    def __post_init__(self):
        if not self.faces or self.faces[0].dim != -1:
            raise ValueError("face 0 must be the empty face")

    @cached_property
    def face_labels(self) -> tuple[Monomial, ...]:
        out = []
        for f in self.faces:
            m = Monomial()
            for v in f.vertices:
                m = m.lcm(self.labels[v])
            out.append(m)
        return tuple(out)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts in dimensions 0, 1, 2, ..."""
        top = max(f.dim for f in self.faces)
        return tuple(sum(1 for f in self.faces if f.dim == k) for k in range(top + 1))

    def cells(self, dim: int) -> list[int]:
        return [k for k, f in enumerate(self.faces) if f.dim == dim]

    def skeleton_edges(self) -> set[frozenset[int]]:
        return {frozenset(f.vertices) for f in self.faces if f.dim == 1}

    def boundary_squared_is_zero(self) -> bool:
        for f in self.faces:
            acc: dict[int, int] = {}
            for g, s in f.facets:
                for h, t in self.faces[g].facets:
                    acc[h] = acc.get(h, 0) + s * t
            if any(acc.values()):
                return False
        return True

    def homology(self) -> dict[int, int]:
        """Reduced cellular homology ranks over Q."""
        cells: dict[int, list[int]] = {}
        for k, f in enumerate(self.faces):
            cells.setdefault(f.dim, []).append(k)
        boundary = {k: dict(f.facets) for k, f in enumerate(self.faces)}
        return chain_homology(cells, boundary)

    def to_json(self) -> dict:
        return {
            "faces": [
                {"dim": f.dim, "facets": [list(p) for p in f.facets], "vertices": list(f.vertices)}
                for f in self.faces
            ],
            "labels": [m.to_json() for m in self.labels],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LabeledCellComplex":
        try:
            faces = tuple(
                Face(int(f["dim"]), tuple(int(v) for v in f["vertices"]), tuple((int(a), int(s)) for a, s in f["facets"]))
                for f in data["faces"]
            )
            labels = tuple(Monomial.from_json(m) for m in data["labels"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed complex JSON: {exc}") from exc
        return cls(faces, labels)


def build_complex(
    labels: list[Monomial],
    edges: list[tuple[int, int]] = (),
    polygons: list[list[int]] = (),
) -> LabeledCellComplex:
    """Complex of dimension <= 2 from vertex labels, edges and polygons.

    Edges are oriented from the smaller vertex index.  Each polygon is a cyclic
    vertex list whose consecutive pairs must be edges; it is oriented along
    that cycle.
    """
    faces = [Face(-1, (), ())]
    vface = {}
    for v in range(len(labels)):
        vface[v] = len(faces)
        faces.append(Face(0, (v,), ((0, 1),)))
    eface = {}
    for u, v in edges:
        a, b = min(u, v), max(u, v)
        if (a, b) in eface:
            raise ValueError(f"duplicate edge {a}-{b}")
        eface[(a, b)] = len(faces)
        faces.append(Face(1, (a, b), ((vface[b], 1), (vface[a], -1))))
    for cyc in polygons:
        facets = []
        for k, u in enumerate(cyc):
            v = cyc[(k + 1) % len(cyc)]
            a, b = min(u, v), max(u, v)
            if (a, b) not in eface:
                raise ValueError(f"polygon side {u}-{v} is not an edge")
            facets.append((eface[(a, b)], 1 if u == a else -1))
        faces.append(Face(2, tuple(sorted(cyc)), tuple(facets)))
    return LabeledCellComplex(tuple(faces), tuple(labels))


def simplicial_complex(labels: list[Monomial], maximal_faces: list[tuple[int, ...]]) -> LabeledCellComplex:
    """Full simplicial complex generated by ``maximal_faces`` (standard signs)."""
    all_faces: set[tuple[int, ...]] = set()
    for mf in maximal_faces:
        mf = tuple(sorted(mf))
        for k in range(1, len(mf) + 1):
            all_faces.update(combinations(mf, k))
    for v in range(len(labels)):
        all_faces.add((v,))
    ordered = sorted(all_faces, key=lambda f: (len(f), f))
    index = {(): 0}
    faces = [Face(-1, (), ())]
    for f in ordered:
        index[f] = len(faces)
        facets = tuple((index[f[:k] + f[k + 1:]], (-1) ** k) for k in range(len(f)))
        faces.append(Face(len(f) - 1, f, facets))
    return LabeledCellComplex(tuple(faces), tuple(labels))


def restrict(X: LabeledCellComplex, b: Monomial) -> LabeledCellComplex:
    """Subcomplex of faces whose label divides b (vertices renumbered)."""
    keep = [k for k, m in enumerate(X.face_labels) if m.divides(b)]
    return _subcomplex(X, keep)


def _subcomplex(X: LabeledCellComplex, keep: list[int]) -> LabeledCellComplex:
    keep_set = set(keep)
    if 0 not in keep_set:
        keep = [0] + keep
    new_index = {old: new for new, old in enumerate(keep)}
    vertices = sorted({v for k in keep for v in X.faces[k].vertices})
    vmap = {v: k for k, v in enumerate(vertices)}
    faces = []
    for k in keep:
        f = X.faces[k]
        faces.append(Face(f.dim, tuple(vmap[v] for v in f.vertices), tuple((new_index[g], s) for g, s in f.facets)))
    return LabeledCellComplex(tuple(faces), tuple(X.labels[v] for v in vertices))


@dataclass(frozen=True)
class Acyclicity:
    ok: bool
    empty: bool
    homology: dict[int, int]

    def __bool__(self) -> bool:
        return self.ok


def is_acyclic(X: LabeledCellComplex) -> Acyclicity:
    """Vanishing reduced homology; a complex with no vertices is flagged empty
    and reported non-acyclic."""
    if not any(f.dim >= 0 for f in X.faces):
        return Acyclicity(False, True, {-1: 1})
    h = X.homology()
    return Acyclicity(not h, False, h)


def lcm_lattice_of(labels) -> set[Monomial]:
    labels = list(labels)
    seen = set(labels)
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in labels:
                m = a.lcm(g)
                if m not in seen:
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class ResolutionCheck:
    ok: bool
    offending: Monomial | None
    homology: dict[int, int]
    checked: int

    def __bool__(self) -> bool:
        return self.ok


def supports_resolution(X: LabeledCellComplex, ideal: MonomialIdeal) -> ResolutionCheck:
    """Acyclicity of every restriction X_{<=b} over b in the lcm lattice."""
    if sorted(X.labels, key=Monomial.sort_key) != list(ideal.gens) or len(set(X.labels)) != len(X.labels):
        raise ValueError("vertex labels must be exactly the minimal generators of the ideal")
    face_labels = X.face_labels
    seen: set[frozenset[int]] = set()
    checked = 0
    for b in sorted(lcm_lattice_of(X.labels), key=Monomial.sort_key):
        keep = frozenset(k for k, m in enumerate(face_labels) if m.divides(b))
        if keep in seen:
            continue
        seen.add(keep)
        checked += 1
        res = is_acyclic(_subcomplex(X, sorted(keep)))
        if not res:
            return ResolutionCheck(False, b, res.homology, checked)
    return ResolutionCheck(True, None, {}, checked)


def is_minimal(X: LabeledCellComplex) -> bool:
    labels = X.face_labels
    for k, f in enumerate(X.faces):
        for g, _ in f.facets:
            if labels[g] == labels[k]:
                return False
    return True
