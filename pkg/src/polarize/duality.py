"""Alexander duality for square-free monomial ideals.

D(I) is generated by the minimal transversals (hitting sets) of the
generator supports of I.
"""

from __future__ import annotations

from .ideals import MonomialIdeal, from_masks, minimal_masks, to_masks


def minimal_transversals(edges: list[int]) -> tuple[int, ...]:
    """Minimal hitting sets of a family of bitmasks (Berge's algorithm).

    Transversals of the first k edges are extended edge by edge and pruned
    back to an antichain after each step.
    """
    trans = [0]
    for e in edges:
        if e == 0:
            raise ValueError("an empty edge has no transversal")
        nxt = []
        for t in trans:
            if t & e:
                nxt.append(t)
                continue
            low = e
            while low:
                bit = low & -low
                nxt.append(t | bit)
                low ^= bit
        trans = list(minimal_masks(nxt))
    return tuple(trans)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """Square-free Alexander dual on the ideal's ambient variable set.

    The zero ideal dualizes to the zero ideal; the unit ideal is rejected.
    """
    if not ideal.is_squarefree:
        raise ValueError("Alexander duality needs a square-free ideal")
    if ideal.is_unit:
        raise ValueError("the unit ideal has no Alexander dual here")
    if ideal.is_zero:
        return MonomialIdeal((), ideal.extra)
    masks, variables = to_masks(ideal)
    return from_masks(minimal_transversals(masks), variables)

