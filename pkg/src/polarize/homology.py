"""Exact ranks and reduced homology over the rationals.

Matrices are sparse rows ``{column: int}``.  Elimination is fraction-free:
a row is combined with a pivot row as ``b*row - a*pivot`` and divided by the
gcd of its entries, which keeps every step invertible over Q.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given by its rows."""
    return len(pivot_columns(rows))


def pivot_columns(rows: Iterable[Mapping[int, int]]) -> set[int]:
    """Pivot columns of a row echelon form (pivot = smallest column)."""
    pivots: dict[int, dict[int, int]] = {}
    for src in rows:
        row = {c: v for c, v in src.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _normalize(row)
                break
            a, b = row[c], piv[c]
            if b == 1 or b == -1:
                f = a * b
                for k, v in piv.items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                new = {k: b * v for k, v in row.items()}
                for k, v in piv.items():
                    nv = new.get(k, 0) - a * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                row = _normalize(new) if new else new
    return set(pivots)


def chain_homology(
    cells: Mapping[int, list], boundary: Mapping[object, Mapping[object, int]]
) -> dict[int, int]:
    """Homology ranks of a finite chain complex.

    ``cells[k]`` lists the basis cells in degree k; ``boundary[c]`` maps a cell
    to its signed facets one degree lower.  Include a degree -1 cell (the empty
    face) to get reduced homology.
    """
    dims = sorted(cells)
    index = {k: {c: i for i, c in enumerate(cells[k])} for k in dims}
    ranks: dict[int, int] = {}
    for k in dims:
        if k - 1 not in index or not cells[k]:
            ranks[k] = 0
            continue
        lower = index[k - 1]
        ranks[k] = rank({lower[f]: s for f, s in boundary[c].items()} for c in cells[k])
    out = {}
    for k in dims:
        h = len(cells[k]) - ranks[k] - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def simplicial_reduced_homology(faces: Iterable[int]) -> dict[int, int]:
    """Reduced homology of a simplicial complex whose faces are bitmasks.

    The face set must be closed under subsets; the empty face (mask 0) is the
    degree -1 cell.  Returns ``{dimension: rank}`` with zeros dropped; an empty
    face set gives ``{}``.
    """
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    if not by_dim:
        return {}
    # Top-down with clearing: a (k-1)-face that is a pivot of d_k has its own
    # boundary row in the span of the remaining rows, so it can be skipped.
    ranks: dict[int, int] = {}
    cleared: set[int] = set()
    for k in sorted(by_dim, reverse=True):
        lower_faces = by_dim.get(k - 1)
        if lower_faces is None:
            ranks[k] = 0
            cleared = set()
            continue
        lower = {f: i for i, f in enumerate(lower_faces)}

        def rows(fs=by_dim[k], lower=lower, skip=cleared):
            for f in fs:
                if f in skip:
                    continue
                row = {}
                sign = 1
                rest = f
                while rest:
                    bit = rest & -rest
                    row[lower[f ^ bit]] = sign
                    sign = -sign
                    rest ^= bit
                yield row

        piv = pivot_columns(rows())
        ranks[k] = len(piv)
        cleared = {lower_faces[c] for c in piv}
    out = {}
    for k, fs in by_dim.items():
        h = len(fs) - ranks[k] - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out
