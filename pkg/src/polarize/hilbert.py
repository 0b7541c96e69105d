"""Coarse Hilbert numerators of S/I and the polarization test built on them.

The numerator N(t) is defined by  HS(S/I; t) = N(t) / (1 - t)^#vars  and does
not depend on how many extra variables the ambient ring carries.

A sequence of degree-one forms is regular on a graded module exactly when
quotienting by it multiplies the Hilbert series by (1 - t) per form, so a
candidate whose depolarization is I is a polarization iff its numerator
equals that of I.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ideals import MonomialIdeal, VarRef, depolarize, minimal_masks, to_masks

Poly = tuple[int, ...]


def _trim(c: list[int]) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _add(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _one_minus_t_pow(k: int) -> Poly:
    if k == 0:
        return ()
    c = [0] * (k + 1)
    c[0] = 1
    c[k] = -1
    return tuple(c)


def _split_step(without_x: Poly, colon: Poly) -> Poly:
    # N(I) = (1 - t) N(gens avoiding x) + t N(I : x)
    a = [0] * (max(len(without_x), len(colon)) + 1)
    for i, x in enumerate(without_x):
        a[i] += x
        a[i + 1] -= x
    for i, x in enumerate(colon):
        a[i + 1] += x
    return _trim(a)


@dataclass(frozen=True)
class HilbertNumerator:
    coeffs: Poly

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        out = ""
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = "" if mon and abs(c) == 1 else str(abs(c))
            if not out:
                out = ("-" if c < 0 else "") + mag + mon
            else:
                out += (" - " if c < 0 else " + ") + mag + mon
        return out or "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


# ---- square-free generators as bitmasks --------------------------------------

@lru_cache(maxsize=1 << 18)
def sqfree_numerator(gens: tuple[int, ...]) -> Poly:
    """Numerator for minimal square-free generators given as sorted bitmasks."""
    if not gens:
        return (1,)
    if gens[0] == 0:
        return ()
    union = 0
    total = 0
    for g in gens:
        union |= g
        total += g.bit_count()
    if union.bit_count() == total:
        out: Poly = (1,)
        for g in gens:
            out = _mul(out, _one_minus_t_pow(g.bit_count()))
        return out
    counts: dict[int, int] = {}
    for g in gens:
        while g:
            low = g & -g
            counts[low] = counts.get(low, 0) + 1
            g ^= low
    x = max(counts, key=lambda b: (counts[b], -b))
    without = tuple(g for g in gens if not g & x)
    colon = minimal_masks(g & ~x for g in gens)
    return _split_step(sqfree_numerator(without), sqfree_numerator(colon))


# ---- general exponent vectors ------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _general_numerator(gens: tuple[tuple[int, ...], ...]) -> Poly:
    if not gens:
        return (1,)
    if not any(gens[0]):
        return ()
    nv = len(gens[0])
    occupied = [0] * nv
    for g in gens:
        for k, e in enumerate(g):
            if e:
                occupied[k] += 1
    if max(occupied) <= 1:
        out: Poly = (1,)
        for g in gens:
            out = _mul(out, _one_minus_t_pow(sum(g)))
        return out
    x = max(range(nv), key=lambda k: (occupied[k], -k))
    without = tuple(g for g in gens if not g[x])
    colon = _minimal_vectors(tuple(g[:x] + (max(g[x] - 1, 0),) + g[x + 1:]) for g in gens)
    return _split_step(_general_numerator(without), _general_numerator(colon))


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimal_vectors(vecs) -> tuple[tuple[int, ...], ...]:
    kept: list[tuple[int, ...]] = []
    for v in sorted(set(vecs), key=lambda v: (sum(v), v)):
        if not any(_divides(k, v) for k in kept):
            kept.append(v)
    return tuple(sorted(kept))


def exponent_vectors(ideal: MonomialIdeal) -> tuple[list[tuple[int, ...]], list[VarRef]]:
    variables = sorted(ideal.variables)
    index = {v: k for k, v in enumerate(variables)}
    vecs = []
    for g in ideal.gens:
        vec = [0] * len(variables)
        for v, e in g.exps:
            vec[index[v]] = e
        vecs.append(tuple(vec))
    return vecs, variables


def hilbert_numerator(ideal: MonomialIdeal) -> HilbertNumerator:
    """Numerator of the Hilbert series of S/I by pivot splitting on a variable
    shared by the most generators."""
    if ideal.is_unit:
        raise ValueError("not a proper ideal")
    if ideal.is_squarefree:
        masks, _ = to_masks(ideal)
        return HilbertNumerator(sqfree_numerator(minimal_masks(masks)))
    vecs, _ = exponent_vectors(ideal)
    return HilbertNumerator(_general_numerator(_minimal_vectors(vecs)))


def inclusion_exclusion_numerator(ideal: MonomialIdeal, max_gens: int = 20) -> HilbertNumerator:
    """Independent oracle: N(t) = sum over generator subsets G of
    (-1)^|G| t^deg(lcm G)."""
    if ideal.is_unit:
        raise ValueError("not a proper ideal")
    gens = list(ideal.gens)
    if len(gens) > max_gens:
        raise ValueError(f"{len(gens)} generators exceeds the inclusion-exclusion cap {max_gens}")
    vecs, _ = exponent_vectors(ideal)
    top = sum(max((v[k] for v in vecs), default=0) for k in range(len(vecs[0]) if vecs else 0))
    coeffs = [0] * (top + 1)

    def walk(start: int, cur: tuple[int, ...] | None, size: int) -> None:
        deg = sum(cur) if cur is not None else 0
        coeffs[deg] += -1 if size % 2 else 1
        for k in range(start, len(vecs)):
            nxt = vecs[k] if cur is None else tuple(map(max, cur, vecs[k]))
            walk(k + 1, nxt, size + 1)

    walk(0, None, 0)
    return HilbertNumerator(_trim(coeffs))


@dataclass(frozen=True)
class PolarizationCheck:
    ok: bool
    reason: str
    numerator_candidate: HilbertNumerator | None
    numerator_target: HilbertNumerator | None
    bijective: bool
    squarefree: bool

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "reason": self.reason,
            "numerator_candidate": None if self.numerator_candidate is None else self.numerator_candidate.to_json(),
            "numerator_target": None if self.numerator_target is None else self.numerator_target.to_json(),
            "bijective": self.bijective,
            "squarefree": self.squarefree,
        }


def is_polarization(candidate: MonomialIdeal, target: MonomialIdeal) -> PolarizationCheck:
    """Is ``candidate`` a polarization of ``target``?

    Requires (a) the depolarization to hit the minimal generators of ``target``
    bijectively and (b) equal Hilbert numerators, which is equivalent to the
    copy differences forming a regular sequence.
    """
    dep = depolarize(candidate)
    sq = candidate.is_squarefree
    if dep.ideal.gens != target.gens:
        return PolarizationCheck(False, "depolarization differs from target", None, None, dep.bijective, sq)
    if not dep.bijective:
        return PolarizationCheck(False, "depolarization is not a bijection on generators", None, None, False, sq)
    nc = hilbert_numerator(candidate)
    nt = hilbert_numerator(target)
    if nc != nt:
        return PolarizationCheck(False, "Hilbert numerators differ", nc, nt, True, sq)
    return PolarizationCheck(True, "ok", nc, nt, True, sq)


def numerator_of_masks(masks) -> Poly:
    return sqfree_numerator(minimal_masks(masks))

