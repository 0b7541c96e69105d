"""Monomials over copy-indexed variables and monomial ideals.

A variable ``x_i^(j)`` is a :class:`VarRef` ``(base=i, copy=j)``; the plain
variable ``x_i`` is ``VarRef(i, 1)``.  Everything here is immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

import networkx as nx


class VarRef(NamedTuple):
    base: int
    copy: int = 1

    def __str__(self) -> str:
        return f"x{self.base}^({self.copy})"


@dataclass(frozen=True, repr=False)
class Monomial:
    """A monomial stored as a sorted tuple of ``(VarRef, exponent)`` pairs."""

    exps: tuple[tuple[VarRef, int], ...] = ()

    def __post_init__(self):
        for v, e in self.exps:
            if v.base < 1 or v.copy < 1:
                raise ValueError(f"bad variable {v!r}")
            if e < 1:
                raise ValueError(f"non-positive exponent for {v}")

    @classmethod
    def of(cls, exps: Mapping[VarRef, int] | Iterable[tuple[VarRef, int]]) -> "Monomial":
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[VarRef, int] = {}
        for v, e in items:
            v = VarRef(*v)
            acc[v] = acc.get(v, 0) + e
        return cls(tuple(sorted((v, e) for v, e in acc.items() if e)))

    @classmethod
    def squarefree(cls, variables: Iterable) -> "Monomial":
        return cls.of((VarRef(*v) if isinstance(v, tuple) else VarRef(v), 1) for v in variables)

    @classmethod
    def plain(cls, *exponents: int) -> "Monomial":
        """``plain(2, 1)`` is x1^2 x2 in uncopied variables."""
        return cls.of((VarRef(i + 1), e) for i, e in enumerate(exponents) if e)

    def as_dict(self) -> dict[VarRef, int]:
        return dict(self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> frozenset[VarRef]:
        return frozenset(v for v, _ in self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def exponent(self, v: VarRef) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    def divides(self, other: "Monomial") -> bool:
        od = dict(other.exps)
        return all(od.get(v, 0) >= e for v, e in self.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        acc = dict(self.exps)
        for v, e in other.exps:
            if e > acc.get(v, 0):
                acc[v] = e
        return Monomial(tuple(sorted(acc.items())))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.of(itertools.chain(self.exps, other.exps))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other, assuming other divides self."""
        acc = dict(self.exps)
        for v, e in other.exps:
            acc[v] -= e
        return Monomial(tuple(sorted((v, e) for v, e in acc.items() if e)))

    def depolarized(self) -> "Monomial":
        return Monomial.of((VarRef(v.base), e) for v, e in self.exps)

    def relabeled(self, mapping: Mapping[VarRef, VarRef]) -> "Monomial":
        return Monomial.of((mapping.get(v, v), e) for v, e in self.exps)

    def sort_key(self) -> tuple:
        return (self.degree, tuple((v.base, v.copy, e) for v, e in self.exps))

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.exps)

    __repr__ = __str__

    def to_json(self) -> list[list[int]]:
        return [[v.base, v.copy, e] for v, e in self.exps]

    @classmethod
    def from_json(cls, data) -> "Monomial":
        items = []
        for entry in data:
            if len(entry) == 2:
                b, c, e = entry[0], entry[1], 1
            elif len(entry) == 3:
                b, c, e = entry
            else:
                raise ValueError(f"bad monomial entry {entry!r}")
            items.append((VarRef(int(b), int(c)), int(e)))
        return cls.of(items)


def _sorted_gens(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(set(gens), key=Monomial.sort_key))


@dataclass(frozen=True, repr=False)
class MonomialIdeal:
    """Monomial ideal kept as its (sorted) minimal generating set.

    ``extra`` lists ambient variables that appear in no generator.  Equality
    compares generators only.
    """

    gens: tuple[Monomial, ...]
    extra: frozenset[VarRef] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "gens", _sorted_gens(self.gens))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.degree == 0 for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def variables(self) -> frozenset[VarRef]:
        out = set()
        for g in self.gens:
            out |= g.support
        return frozenset(out)

    @property
    def ambient(self) -> frozenset[VarRef]:
        return self.variables | self.extra

    @property
    def n(self) -> int:
        bases = [v.base for v in self.ambient]
        return max(bases) if bases else 0

    def copies(self) -> dict[int, list[int]]:
        """base -> sorted copy indices occurring in the ambient set."""
        out: dict[int, set[int]] = {}
        for v in self.ambient:
            out.setdefault(v.base, set()).add(v.copy)
        return {b: sorted(cs) for b, cs in sorted(out.items())}

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [g.to_json() for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        if not isinstance(data, dict) or "generators" not in data:
            raise ValueError("ideal JSON needs a 'generators' list")
        gens = [Monomial.from_json(g) for g in data["generators"]]
        ideal = minimalize(gens)
        n = int(data.get("n", ideal.n))
        if n < ideal.n:
            raise ValueError(f"declared n={n} but variable x{ideal.n} occurs")
        used = {v.base for v in ideal.variables}
        extra = frozenset(VarRef(i) for i in range(1, n + 1) if i not in used)
        return cls(ideal.gens, extra)


def minimalize(gens: Iterable[Monomial], extra: Iterable[VarRef] = ()) -> MonomialIdeal:
    """Inclusion-minimal generators of the ideal spanned by ``gens``.

    An empty input gives the zero ideal (``is_zero`` is set).
    """
    uniq = sorted(set(gens), key=Monomial.sort_key)
    kept: list[Monomial] = []
    for g in uniq:
        # sorted by degree, so only earlier (lower/equal degree) gens can divide g
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    ambient = set(extra)
    for g in uniq:
        ambient |= g.support
    used = set()
    for g in kept:
        used |= g.support
    return MonomialIdeal(tuple(kept), frozenset(ambient - used))


def squarefree_power(n: int, d: int) -> MonomialIdeal:
    """I_d: all square-free monomials of degree d in x_1..x_n."""
    gens = [Monomial.squarefree(s) for s in itertools.combinations(range(1, n + 1), d)]
    return minimalize(gens, (VarRef(i) for i in range(1, n + 1)))


def maximal_ideal_power(n: int, d: int) -> MonomialIdeal:
    """(x_1, ..., x_n)^d."""
    gens = []
    for combo in itertools.combinations_with_replacement(range(1, n + 1), d):
        gens.append(Monomial.of((VarRef(i), 1) for i in combo))
    return MonomialIdeal(tuple(gens))


def box_polarization(n: int, d: int) -> MonomialIdeal:
    """B_nd: x_{i1}^(1) x_{i2}^(2) ... x_{id}^(d) over i1 <= ... <= id."""
    gens = []
    for combo in itertools.combinations_with_replacement(range(1, n + 1), d):
        gens.append(Monomial.of((VarRef(i, k + 1), 1) for k, i in enumerate(combo)))
    return MonomialIdeal(tuple(gens))


def standard_polarization(ideal: MonomialIdeal) -> MonomialIdeal:
    """x_i^e -> x_i^(1) ... x_i^(e), generator-wise."""
    gens = []
    for g in ideal.gens:
        gens.append(Monomial.of((VarRef(v.base, k + 1), 1) for v, e in g.exps for k in range(e)))
    return MonomialIdeal(tuple(gens))


@dataclass(frozen=True)
class Depolarization:
    ideal: MonomialIdeal
    bijective: bool
    images: tuple[Monomial, ...]


def depolarize(ideal: MonomialIdeal) -> Depolarization:
    """Identify every copy x_i^(j) with x_i.

    ``bijective`` is True when distinct generators map to distinct minimal
    generators of the image.
    """
    images = tuple(g.depolarized() for g in ideal.gens)
    image = minimalize(images, (VarRef(v.base) for v in ideal.extra))
    bijective = len(set(images)) == len(images) and set(images) == set(image.gens)
    return Depolarization(image, bijective, images)


_CANON_ORDER_CAP = 5040


def canonical_form(ideal: MonomialIdeal) -> MonomialIdeal:
    """Representative of ``ideal`` under independent copy relabelings per base.

    Generators are ordered by their depolarized images (a relabeling
    invariant).  Within each base, copies are then ranked by their incidence
    pattern with respect to that ordering and renumbered 1..r.  Generators
    sharing an image are tried in every order and the smallest encoding wins.
    """
    by_image: dict[Monomial, list[Monomial]] = {}
    for g in ideal.gens:
        by_image.setdefault(g.depolarized(), []).append(g)
    groups = [by_image[k] for k in sorted(by_image, key=Monomial.sort_key)]
    n_orders = 1
    for grp in groups:
        for k in range(2, len(grp) + 1):
            n_orders *= k
    if n_orders > _CANON_ORDER_CAP:
        raise ValueError(f"too many tied generators to canonicalize ({n_orders} orders)")

    best = None
    for choice in itertools.product(*(itertools.permutations(g) for g in groups)):
        order = [g for grp in choice for g in grp]
        cand = _relabel_by_incidence(order)
        key = tuple(g.sort_key() for g in cand)
        if best is None or key < best[0]:
            best = (key, cand)
    gens = best[1] if best else ()
    extra = frozenset(VarRef(v.base) for v in ideal.extra)
    bases_used = {v.base for g in gens for v, _ in g.exps}
    return MonomialIdeal(tuple(gens), frozenset(v for v in extra if v.base not in bases_used))


def _relabel_by_incidence(order: list[Monomial]) -> tuple[Monomial, ...]:
    signature: dict[VarRef, list[tuple[int, int]]] = {}
    for k, g in enumerate(order):
        for v, e in g.exps:
            signature.setdefault(v, []).append((k, e))
    per_base: dict[int, list[VarRef]] = {}
    for v in signature:
        per_base.setdefault(v.base, []).append(v)
    mapping: dict[VarRef, VarRef] = {}
    for base, vs in per_base.items():
        vs.sort(key=lambda v: (signature[v], v.copy))
        for new_copy, v in enumerate(vs, start=1):
            mapping[v] = VarRef(base, new_copy)
    return tuple(sorted((g.relabeled(mapping) for g in order), key=Monomial.sort_key))


def same_up_to_copies(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    return canonical_form(a).gens == canonical_form(b).gens


def _incidence_graph(ideal: MonomialIdeal) -> nx.Graph:
    g = nx.Graph()
    for k, m in enumerate(ideal.gens):
        g.add_node(("g", k), kind="gen")
        for v, e in m.exps:
            g.add_node(("v", v), kind="var")
            g.add_edge(("g", k), ("v", v), exp=e)
    return g


def isomorphic(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True if some bijection of variables (any bases) carries a onto b."""
    if len(a.gens) != len(b.gens):
        return False
    if sorted(g.degree for g in a.gens) != sorted(g.degree for g in b.gens):
        return False
    return nx.is_isomorphic(
        _incidence_graph(a),
        _incidence_graph(b),
        node_match=lambda x, y: x["kind"] == y["kind"],
        edge_match=lambda x, y: x["exp"] == y["exp"],
    )


def ideal(*gens: Monomial | Iterable) -> MonomialIdeal:
    """Convenience constructor: each argument is a Monomial or an iterable of
    ``(base, copy)`` / ``(base, copy, exp)`` entries."""
    out = []
    for g in gens:
        if isinstance(g, Monomial):
            out.append(g)
        else:
            out.append(Monomial.from_json([list(e) for e in g]))
    return minimalize(out)


def to_masks(ideal: MonomialIdeal) -> tuple[list[int], list[VarRef]]:
    """Square-free generators as bitmasks over a sorted variable list."""
    if not ideal.is_squarefree:
        raise ValueError("bitmask encoding needs square-free generators")
    variables = sorted(ideal.ambient)
    index = {v: k for k, v in enumerate(variables)}
    masks = []
    for g in ideal.gens:
        m = 0
        for v, _ in g.exps:
            m |= 1 << index[v]
        masks.append(m)
    return masks, variables


def from_masks(masks: Iterable[int], variables: list[VarRef]) -> MonomialIdeal:
    gens = []
    for m in masks:
        gens.append(Monomial(tuple((variables[k], 1) for k in range(len(variables)) if m >> k & 1)))
    return minimalize(gens, variables)


def minimal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Antichain of inclusion-minimal masks, sorted."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept))
