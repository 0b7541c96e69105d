"""Partition families encoding polarizations of square-free powers I_d.

For i in [n], Sigma_i^d is the set of (d-1)-subsets of [n] \\ {i}.  A family
orders a partition of each Sigma_i^d into parts P_{i,1}, ..., P_{i,r_i}; the
generator for a d-subset s is the product of x_i^(j) over i in s, where
s \\ {i} lies in P_{i,j}.

Internally a family is an *assignment*: for every i, a tuple giving the
(0-based) part label of each member of Sigma_i^d in a fixed order.  The
layout of those orders is shared with the sweep code in :mod:`.sweeps`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .ideals import Monomial, MonomialIdeal, VarRef, squarefree_power

Subset = frozenset[int]


@dataclass(frozen=True)
class Layout:
    """Index tables for fixed (n, d)."""

    n: int
    d: int
    gamma: tuple[tuple[int, ...], ...]
    sigma: tuple[tuple[tuple[int, ...], ...], ...]  # sigma[i-1] = sorted Sigma_i^d
    sigma_index: tuple[dict[tuple[int, ...], int], ...]
    # per generator s in gamma: ((i, index of s \ {i} in Sigma_i), ...)
    gen_slots: tuple[tuple[tuple[int, int], ...], ...]
    # per i: ((a, b, betas), ...) for a < b; each beta is a tuple of per-t
    # checks (t, idx of beta\{t}, idx of s u {i} \ {t} or -1, same for tau or -1)
    pair_checks: tuple[tuple[tuple[int, int, tuple], ...], ...]

    def subset(self, i: int, idx: int) -> tuple[int, ...]:
        return self.sigma[i - 1][idx]


@lru_cache(maxsize=None)
def layout(n: int, d: int) -> Layout:
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got n={n}, d={d}")
    ground = range(1, n + 1)
    gamma = tuple(itertools.combinations(ground, d))
    sigma = tuple(tuple(itertools.combinations([k for k in ground if k != i], d - 1)) for i in ground)
    sigma_index = tuple({s: k for k, s in enumerate(sig)} for sig in sigma)

    def idx(t: int, members) -> int:
        return sigma_index[t - 1][tuple(sorted(members))]

    gen_slots = tuple(tuple((i, idx(i, set(s) - {i})) for i in s) for s in gamma)
    pair_checks = []
    for i in ground:
        sig = sigma[i - 1]
        rows = []
        for a, b in itertools.combinations(range(len(sig)), 2):
            s, tau = set(sig[a]), set(sig[b])
            betas = []
            for beta in itertools.combinations(sorted(s | tau), d):
                checks = []
                for t in beta:
                    bt = idx(t, set(beta) - {t})
                    st = idx(t, (s | {i}) - {t}) if t in s else -1
                    tt = idx(t, (tau | {i}) - {t}) if t in tau else -1
                    checks.append((t - 1, bt, st, tt))
                betas.append(tuple(checks))
            rows.append((a, b, tuple(betas)))
        pair_checks.append(tuple(rows))
    return Layout(n, d, gamma, sigma, sigma_index, gen_slots, tuple(pair_checks))


Assignment = tuple[tuple[int, ...], ...]


def criterion_witness(lay: Layout, assign: Assignment) -> tuple[int, int, int] | None:
    """First (i, a, b) violating the partition criterion, or None.

    For members a, b of Sigma_i in different parts we need some d-subset beta
    of their union such that for every t in beta, beta \\ {t} shares a part of
    Sigma_t with (a u {i}) \\ {t} or with (b u {i}) \\ {t}.
    """
    for i0, rows in enumerate(lay.pair_checks):
        lab = assign[i0]
        for a, b, betas in rows:
            if lab[a] == lab[b]:
                continue
            for checks in betas:
                for t0, bt, st, tt in checks:
                    p = assign[t0][bt]
                    if not ((st >= 0 and assign[t0][st] == p) or (tt >= 0 and assign[t0][tt] == p)):
                        break
                else:
                    break
            else:
                return (i0 + 1, a, b)
    return None


def slot_bits(lay: Layout) -> tuple[tuple[int, ...], ...]:
    """bit for (i, part label) in the sweep's mask encoding: i-major blocks."""
    out = []
    offset = 0
    for sig in lay.sigma:
        out.append(tuple(1 << (offset + p) for p in range(len(sig))))
        offset += len(sig)
    return tuple(out)


def slot_variables(lay: Layout) -> list[VarRef]:
    return [VarRef(i + 1, p + 1) for i, sig in enumerate(lay.sigma) for p in range(len(sig))]


def assignment_masks(lay: Layout, bits, assign: Assignment) -> tuple[int, ...]:
    out = []
    for slots in lay.gen_slots:
        m = 0
        for i, k in slots:
            m |= bits[i - 1][assign[i - 1][k]]
        out.append(m)
    return tuple(sorted(out))


def restricted_growth_strings(m: int) -> list[tuple[int, ...]]:
    """Set partitions of an m-element ordered set, as restricted growth strings."""
    if m == 0:
        return [()]
    out = []

    def grow(prefix: list[int], top: int) -> None:
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for v in range(top + 2):
            prefix.append(v)
            grow(prefix, max(top, v))
            prefix.pop()

    grow([0], 0)
    return out


@dataclass(frozen=True, eq=False)
class PartitionFamily:
    """Ordered parts of every Sigma_i^d.  Equality ignores part order."""

    n: int
    d: int
    parts: tuple[tuple[frozenset[Subset], ...], ...]  # parts[i-1] = (P_{i,1}, ...)

    def __post_init__(self):
        lay = layout(self.n, self.d)
        if len(self.parts) != self.n:
            raise ValueError(f"need parts for all {self.n} indices, got {len(self.parts)}")
        for i, (sig, ps) in enumerate(zip(lay.sigma, self.parts), start=1):
            expected = {frozenset(s) for s in sig}
            seen: set[Subset] = set()
            for j, part in enumerate(ps, start=1):
                if not part:
                    raise ValueError(f"P_{{{i},{j}}} is empty")
                if part & seen:
                    raise ValueError(f"parts of Sigma_{i} overlap")
                if not part <= expected:
                    bad = sorted(sorted(s) for s in part - expected)
                    raise ValueError(f"P_{{{i},{j}}} has members outside Sigma_{i}: {bad}")
                seen |= part
            if seen != expected:
                missing = sorted(sorted(s) for s in expected - seen)
                raise ValueError(f"parts of Sigma_{i} miss {missing}")

    @classmethod
    def from_lists(cls, n: int, d: int, parts: dict[int, list[list]] | list) -> "PartitionFamily":
        """``parts[i]`` is a list of parts, each a list of subsets (int lists).
        Indices not given get a single part."""
        lay = layout(n, d)
        if not isinstance(parts, dict):
            parts = {i: p for i, p in enumerate(parts, start=1)}
        out = []
        for i in range(1, n + 1):
            if i in parts:
                out.append(tuple(frozenset(frozenset(s) for s in part) for part in parts[i]))
            else:
                out.append((frozenset(frozenset(s) for s in lay.sigma[i - 1]),))
        return cls(n, d, tuple(out))

    @classmethod
    def from_assignment(cls, n: int, d: int, assign: Assignment) -> "PartitionFamily":
        lay = layout(n, d)
        out = []
        for sig, lab in zip(lay.sigma, assign):
            r = max(lab) + 1 if lab else 0
            groups: list[set] = [set() for _ in range(r)]
            for s, p in zip(sig, lab):
                groups[p].add(frozenset(s))
            out.append(tuple(frozenset(g) for g in groups))
        return cls(n, d, tuple(out))

    def assignment(self) -> Assignment:
        lay = layout(self.n, self.d)
        out = []
        for sig, ps in zip(lay.sigma, self.parts):
            where = {s: j for j, part in enumerate(ps) for s in part}
            out.append(tuple(where[frozenset(s)] for s in sig))
        return tuple(out)

    def r(self, i: int) -> int:
        return len(self.parts[i - 1])

    def part(self, i: int, j: int) -> frozenset[Subset]:
        return self.parts[i - 1][j - 1]

    def part_index(self, i: int, member) -> int:
        member = frozenset(member)
        for j, part in enumerate(self.parts[i - 1], start=1):
            if member in part:
                return j
        raise KeyError(f"{sorted(member)} is not in Sigma_{i}^{self.d}")

    def key(self) -> tuple:
        return (self.n, self.d, tuple(frozenset(ps) for ps in self.parts))

    def __eq__(self, other) -> bool:
        return isinstance(other, PartitionFamily) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def is_trivial(self) -> bool:
        return all(len(ps) == 1 for ps in self.parts)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "parts": {
                str(i): [sorted(sorted(s) for s in part) for part in ps]
                for i, ps in enumerate(self.parts, start=1)
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "PartitionFamily":
        try:
            n, d = int(data["n"]), int(data["d"])
            parts = {int(i): p for i, p in data["parts"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed partition family JSON: {exc}") from exc
        return cls.from_lists(n, d, parts)

    def __str__(self) -> str:
        lines = []
        for i, ps in enumerate(self.parts, start=1):
            body = " | ".join(",".join("{" + ",".join(map(str, sorted(s))) + "}" for s in sorted(map(sorted, part))) for part in ps)
            lines.append(f"Sigma_{i}: {body}")
        return "\n".join(lines)


def trivial_partition(n: int, d: int) -> PartitionFamily:
    return PartitionFamily.from_lists(n, d, {})


def partition_to_ideal(P: PartitionFamily) -> MonomialIdeal:
    """One generator per d-subset s: prod over i in s of x_i^(j), s \\ {i} in P_{i,j}.

    This only builds the candidate; whether it is a polarization is decided by
    :func:`satisfies_criterion` or :func:`polarize.hilbert.is_polarization`.
    """
    lay = layout(P.n, P.d)
    assign = P.assignment()
    gens = []
    for s, slots in zip(lay.gamma, lay.gen_slots):
        gens.append(Monomial(tuple((VarRef(i, assign[i - 1][k] + 1), 1) for i, k in slots)))
    return MonomialIdeal(tuple(gens))


def ideal_to_partition(ideal: MonomialIdeal, n: int | None = None) -> PartitionFamily:
    """Read the partition family off a candidate polarization of I_d."""
    if not ideal.gens:
        raise ValueError("the zero ideal has no partition family")
    if not ideal.is_squarefree:
        raise ValueError("candidate must be square-free")
    d = ideal.gens[0].degree
    n = n if n is not None else ideal.n
    lay = layout(n, d)
    copy_of: dict[tuple[int, ...], dict[int, int]] = {}
    for g in ideal.gens:
        bases = [v.base for v, _ in g.exps]
        if len(set(bases)) != len(bases) or len(bases) != d:
            raise ValueError(f"generator {g} does not depolarize to a square-free degree-{d} monomial")
        s = tuple(sorted(bases))
        if s in copy_of:
            raise ValueError(f"two generators depolarize to x^{list(s)}")
        copy_of[s] = {v.base: v.copy for v, _ in g.exps}
    if set(copy_of) != set(lay.gamma):
        raise ValueError(f"expected one generator per {d}-subset of [{n}], got {len(copy_of)}")
    out = []
    for i, sig in enumerate(lay.sigma, start=1):
        labels = [copy_of[tuple(sorted(set(s) | {i}))][i] for s in sig]
        dense = {c: k for k, c in enumerate(sorted(set(labels)))}
        out.append(tuple(dense[c] for c in labels))
    return PartitionFamily.from_assignment(n, d, tuple(out))


def dual_partition(P: PartitionFamily) -> PartitionFamily:
    """Complement every member inside [n] \\ {i}, keeping part order."""
    n = P.n
    out = []
    for i, ps in enumerate(P.parts, start=1):
        rest = frozenset(range(1, n + 1)) - {i}
        out.append(tuple(frozenset(rest - s for s in part) for part in ps))
    return PartitionFamily(n, n - P.d + 1, tuple(out))


@dataclass(frozen=True)
class CriterionResult:
    ok: bool
    witness: tuple[int, tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.ok


def satisfies_criterion(P: PartitionFamily) -> CriterionResult:
    """Combinatorial polarization test, quantified over every i and every
    pair of members of Sigma_i lying in different parts.  A failure carries
    the offending (i, sigma, tau)."""
    lay = layout(P.n, P.d)
    w = criterion_witness(lay, P.assignment())
    if w is None:
        return CriterionResult(True)
    i, a, b = w
    return CriterionResult(False, (i, lay.subset(i, a), lay.subset(i, b)))


def d2_criterion(P: PartitionFamily) -> bool:
    """d = 2 form: whenever j is outside P_{i,s}, {i} u P_{i,s} sits inside a
    single part of Sigma_j (members read as elements)."""
    if P.d != 2:
        raise ValueError("d2_criterion needs d = 2")
    elems = [[{next(iter(s)) for s in part} for part in ps] for ps in P.parts]
    for i in range(1, P.n + 1):
        for part in elems[i - 1]:
            need = part | {i}
            for j in range(1, P.n + 1):
                if j == i or j in part:
                    continue
                if not any(need <= q for q in elems[j - 1]):
                    return False
    return True


def box_partition(n: int, d: int) -> PartitionFamily:
    """s lands in part r where r - 1 members of s are below i (empty parts dropped)."""
    lay = layout(n, d)
    out = []
    for i, sig in enumerate(lay.sigma, start=1):
        pos = tuple(sum(1 for x in s if x < i) for s in sig)
        out.append(_relabel_by_value(pos))
    return PartitionFamily.from_assignment(n, d, tuple(out))


def _relabel_by_value(values: tuple[int, ...]) -> tuple[int, ...]:
    dense = {v: k for k, v in enumerate(sorted(set(values)))}
    return tuple(dense[v] for v in values)


def single_variable_partition(n: int, d: int, i: int) -> PartitionFamily:
    """Split Sigma_i^d into singletons; leave every other Sigma whole."""
    if not 1 <= i <= n:
        raise ValueError(f"i={i} outside [1, {n}]")
    lay = layout(n, d)
    out = []
    for k, sig in enumerate(lay.sigma, start=1):
        out.append(tuple(range(len(sig))) if k == i else (0,) * len(sig))
    return PartitionFamily.from_assignment(n, d, tuple(out))


def one_step_refinements(P: PartitionFamily) -> Iterator[PartitionFamily]:
    """Every family obtained by splitting one part into two nonempty parts."""
    for i0, ps in enumerate(P.parts):
        for j, part in enumerate(ps):
            if len(part) < 2:
                continue
            members = sorted(part, key=sorted)
            first, rest = members[0], members[1:]
            for mask in range(2 ** len(rest) - 1):
                a = {first} | {m for k, m in enumerate(rest) if mask >> k & 1}
                b = part - a
                new = ps[:j] + (frozenset(a), frozenset(b)) + ps[j + 1:]
                yield PartitionFamily(P.n, P.d, P.parts[:i0] + (new,) + P.parts[i0 + 1:])


def is_maximal(P: PartitionFamily) -> bool:
    """A valid family is maximal iff no one-step refinement is valid."""
    if not satisfies_criterion(P):
        raise ValueError("is_maximal needs a family satisfying the criterion")
    return not any(satisfies_criterion(Q) for Q in one_step_refinements(P))


def enumerate_families(n: int, d: int) -> Iterator[PartitionFamily]:
    """Every partition family for (n, d), in restricted-growth order."""
    lay = layout(n, d)
    per = [restricted_growth_strings(len(sig)) for sig in lay.sigma]
    for assign in itertools.product(*per):
        yield PartitionFamily.from_assignment(n, d, assign)


def family_count(n: int, d: int) -> int:
    lay = layout(n, d)
    total = 1
    for sig in lay.sigma:
        total *= len(restricted_growth_strings(len(sig)))
    return total


def target_ideal(n: int, d: int) -> MonomialIdeal:
    return squarefree_power(n, d)
