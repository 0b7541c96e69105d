"""Exhaustive and sampled certification sweeps.

Each sweep returns a plain dict (JSON-ready).  ``progress`` is an optional
callable taking a short status string; the CLI points it at stderr.
"""

from __future__ import annotations

import itertools
import random
import time
from typing import Callable, Iterable

from .betti import betti_table
from .cellres import is_minimal, supports_resolution
from .duality import alexander_dual, minimal_transversals
from .hilbert import (
    hilbert_numerator,
    inclusion_exclusion_numerator,
    is_polarization,
    sqfree_numerator,
)
from .ideals import (
    Monomial,
    MonomialIdeal,
    VarRef,
    canonical_form,
    isomorphic,
    box_polarization,
    maximal_ideal_power,
    minimalize,
    standard_polarization,
    squarefree_power,
)
from .partitions import (
    Layout,
    PartitionFamily,
    assignment_masks,
    criterion_witness,
    ideal_to_partition,
    is_maximal,
    layout,
    partition_to_ideal,
    dual_partition,
    restricted_growth_strings,
    slot_bits,
)
from .trees import (
    enumerate_spanning_trees,
    path_tree,
    relation_edges_by_vertex,
    star_tree,
    linear_relation_graph,
    tree_complex,
    tree_dual,
    tree_polarization,
)
from .trianglegrid import (
    LETTERS,
    all_choices,
    build_delta_complex,
    chains,
    polarized_generators,
)

Progress = Callable[[str], None] | None

MAX_WITNESSES = 5


def _say(progress: Progress, msg: str) -> None:
    if progress is not None:
        progress(msg)


def _betti_totals(ideal: MonomialIdeal) -> dict[str, int]:
    return {f"{i}:{deg}": r for (i, deg), r in betti_table(ideal).totals.items()}


# ---- partition families ------------------------------------------------------

def _dual_permutation(lay: Layout, dlay: Layout) -> list[list[int]]:
    """perm[i][k] = index in Sigma_i^d of the complement of member k of Sigma_i^{d'}."""
    n = lay.n
    out = []
    for i in range(1, n + 1):
        rest = set(range(1, n + 1)) - {i}
        out.append([lay.sigma_index[i - 1][tuple(sorted(rest - set(s)))] for s in dlay.sigma[i - 1]])
    return out


def _dual_masks(lay: Layout, dlay: Layout, bits, assign) -> tuple[int, ...]:
    """Generators of pol(dual(P)) on the same bit layout as pol(P)."""
    n = lay.n
    out = []
    for tau in dlay.gamma:
        comp = tuple(k for k in range(1, n + 1) if k not in tau)
        m = 0
        for i in tau:
            m |= bits[i - 1][assign[i - 1][lay.sigma_index[i - 1][comp]]]
        out.append(m)
    return tuple(sorted(out))


def d2_assignment_ok(lay: Layout, assign) -> bool:
    """d = 2 criterion on a raw assignment (members of Sigma_i are singletons)."""
    n = lay.n
    for i in range(1, n + 1):
        sig = lay.sigma[i - 1]
        labels = assign[i - 1]
        for p in set(labels):
            group = {sig[k][0] for k, lab in enumerate(labels) if lab == p} | {i}
            for j in range(1, n + 1):
                if j in group:
                    continue
                jl = assign[j - 1]
                jidx = lay.sigma_index[j - 1]
                if len({jl[jidx[(e,)]] for e in group}) != 1:
                    return False
    return True


def _family_sweep(
    n: int,
    d: int,
    assignments: Iterable,
    total: int,
    betti: bool,
    progress: Progress,
) -> dict:
    lay = layout(n, d)
    d_dual = n - d + 1
    dlay = layout(n, d_dual)
    bits = slot_bits(lay)
    perm = _dual_permutation(lay, dlay)
    target = squarefree_power(n, d)
    target_num = hilbert_numerator(target).coeffs
    target_totals = _betti_totals(target) if betti else None
    dual_totals = _betti_totals(squarefree_power(n, d_dual)) if betti else None

    checked = crit_pass = hilb_pass = 0
    dual_agree = d2_agree = 0
    duality_exact = duality_ok = 0
    betti_ok = betti_checked = 0
    maximal = 0
    disagreements: list[dict] = []
    duality_failures: list[dict] = []
    betti_failures: list[dict] = []
    dual_failures: list[dict] = []
    d2_failures: list[dict] = []
    passing: list[PartitionFamily] = []
    start = time.time()
    step = max(total // 20, 1)

    for assign in assignments:
        checked += 1
        if checked % step == 0:
            _say(progress, f"({n},{d}) {checked}/{total} families, {crit_pass} pass, {time.time() - start:.1f}s")
        witness = criterion_witness(lay, assign)
        crit = witness is None
        masks = assignment_masks(lay, bits, assign)
        num = sqfree_numerator(masks)
        hilb = num == target_num
        crit_pass += crit
        hilb_pass += hilb
        if crit != hilb and len(disagreements) < MAX_WITNESSES:
            fam = PartitionFamily.from_assignment(n, d, assign)
            disagreements.append({
                "family": fam.to_json(),
                "criterion": crit,
                "criterion_witness": None if witness is None else [witness[0], list(lay.subset(*witness[:2])), list(lay.subset(witness[0], witness[2]))],
                "numerator_candidate": list(num),
                "numerator_target": list(target_num),
            })
        elif crit != hilb:
            disagreements.append({})

        dassign = tuple(tuple(assign[i][k] for k in perm[i]) for i in range(n))
        dcrit = criterion_witness(dlay, dassign) is None
        if dcrit == crit:
            dual_agree += 1
        elif len(dual_failures) < MAX_WITNESSES:
            dual_failures.append(PartitionFamily.from_assignment(n, d, assign).to_json())

        if d == 2:
            if d2_assignment_ok(lay, assign) == crit:
                d2_agree += 1
            elif len(d2_failures) < MAX_WITNESSES:
                d2_failures.append(PartitionFamily.from_assignment(n, d, assign).to_json())

        if not (crit and hilb):
            continue
        fam = PartitionFamily.from_assignment(n, d, assign)
        passing.append(fam)
        dual_exact = tuple(sorted(minimal_transversals(list(masks)))) == _dual_masks(lay, dlay, bits, assign)
        if dual_exact:
            duality_exact += 1
            duality_ok += 1
        else:
            pol = partition_to_ideal(fam)
            lhs = canonical_form(alexander_dual(pol))
            rhs = canonical_form(partition_to_ideal(dual_partition(fam)))
            if lhs.gens == rhs.gens:
                duality_ok += 1
            elif len(duality_failures) < MAX_WITNESSES:
                duality_failures.append({"family": fam.to_json(), "dual_of_ideal": lhs.to_json(), "ideal_of_dual": rhs.to_json()})
        if betti:
            pol = partition_to_ideal(fam)
            for ideal, want in ((pol, target_totals), (alexander_dual(pol), dual_totals)):
                betti_checked += 1
                got = _betti_totals(ideal)
                if got == want:
                    betti_ok += 1
                elif len(betti_failures) < MAX_WITNESSES:
                    betti_failures.append({"ideal": ideal.to_json(), "totals": got, "expected": want})

    for fam in passing:
        maximal += is_maximal(fam)

    report = {
        "n": n,
        "d": d,
        "families_checked": checked,
        "criterion_pass": crit_pass,
        "hilbert_pass": hilb_pass,
        "disagreements": len(disagreements),
        "disagreement_witnesses": [w for w in disagreements if w],
        "duality_ok": duality_ok,
        "duality_exact": duality_exact,
        "duality_failures": duality_failures,
        "dual_criterion_agree": dual_agree,
        "dual_criterion_failures": dual_failures,
        "maximal": maximal,
        "elapsed": round(time.time() - start, 3),
    }
    if d == 2:
        report["d2_agree"] = d2_agree
        report["d2_failures"] = d2_failures
    if betti:
        report["betti_checked"] = betti_checked
        report["betti_ok"] = betti_ok
        report["betti_failures"] = betti_failures
    report["ok"] = (
        not disagreements
        and duality_ok == crit_pass
        and dual_agree == checked
        and (d != 2 or d2_agree == checked)
        and (not betti or betti_ok == betti_checked)
    )
    return report


def partition_sweep(n: int, d: int, betti: bool = True, progress: Progress = None) -> dict:
    """Every partition family for (n, d)."""
    lay = layout(n, d)
    per = [restricted_growth_strings(len(s)) for s in lay.sigma]
    total = 1
    for p in per:
        total *= len(p)
    sqfree_numerator.cache_clear()
    report = _family_sweep(n, d, itertools.product(*per), total, betti, progress)
    report["mode"] = "exhaustive"
    sqfree_numerator.cache_clear()
    return report


def sampled_partition_sweep(n: int, d: int, samples: int, seed: int, betti: bool = True, progress: Progress = None) -> dict:
    """Uniformly random partition families (independent uniform set partition per i)."""
    lay = layout(n, d)
    rng = random.Random(seed)
    per = [restricted_growth_strings(len(s)) for s in lay.sigma]
    draws = [tuple(rng.choice(p) for p in per) for _ in range(samples)]
    report = _family_sweep(n, d, draws, samples, betti, progress)
    report["mode"] = "sampled"
    report["seed"] = seed
    return report


def maximal_families(n: int, d: int) -> list[PartitionFamily]:
    lay = layout(n, d)
    per = [restricted_growth_strings(len(s)) for s in lay.sigma]
    out = []
    for assign in itertools.product(*per):
        if criterion_witness(lay, assign) is None:
            fam = PartitionFamily.from_assignment(n, d, assign)
            if is_maximal(fam):
                out.append(fam)
    return out


# ---- triangular grid -------------------------------------------------------

def _monotone(c, gens: dict) -> bool:
    """x parts along fixed z (or fixed y) with growing x-degree form a divisibility chain."""
    d = c.d
    for base in range(3):
        others = [k for k in range(3) if k != base]
        for fixed in others:
            free = [k for k in others if k != fixed][0]
            for fval in range(d + 1):
                seq = []
                for e in range(d - fval + 1):
                    m = [0, 0, 0]
                    m[base], m[fixed], m[free] = e, fval, d - fval - e
                    g = gens[tuple(m)]
                    seq.append(Monomial(tuple((v, k) for v, k in g.exps if v.base == base + 1)))
                if not all(a.divides(b) for a, b in zip(seq, seq[1:])):
                    return False
    return True


def triangle_sweep(d: int, betti: bool = True, progress: Progress = None) -> dict:
    target = maximal_ideal_power(3, d)
    target_totals = _betti_totals(target) if betti else None
    expected_f = ((d + 1) * (d + 2) // 2, d * (d + 2), d * (d + 1) // 2)
    counts = {k: 0 for k in ("polarization", "resolution", "minimal", "boundary", "face_counts", "betti", "skeleton", "monotone", "chains")}
    failures: list[dict] = []
    canon = set()
    start = time.time()
    total = 3 ** ((d - 1) * d // 2)
    step = max(total // 10, 1)
    for k, c in enumerate(all_choices(d), start=1):
        if k % step == 0:
            _say(progress, f"triangle d={d}: {k}/{total}, {time.time() - start:.1f}s")
        try:
            for letter in LETTERS:
                chains(c, letter)
            counts["chains"] += 1
        except ValueError:
            pass
        gens = polarized_generators(c)
        ideal = MonomialIdeal(tuple(gens.values()))
        X = build_delta_complex(c)
        res = {
            "polarization": bool(is_polarization(ideal, target)),
            "resolution": bool(supports_resolution(X, ideal)),
            "minimal": is_minimal(X),
            "boundary": X.boundary_squared_is_zero(),
            "face_counts": X.f_vector() == expected_f,
            "monotone": _monotone(c, gens),
        }
        lg = linear_relation_graph(ideal)
        index = {m: v for v, m in enumerate(X.labels)}
        mono = {node: data["monomial"] for node, data in lg.nodes(data=True)}
        rel = {frozenset((index[mono[a]], index[mono[b]])) for a, b in lg.edges}
        res["skeleton"] = rel == X.skeleton_edges()
        if betti:
            bt = betti_table(ideal)
            res["betti"] = bt.total_betti == X.f_vector() and {f"{i}:{g}": r for (i, g), r in bt.totals.items()} == target_totals
        else:
            res["betti"] = True
        for key, val in res.items():
            counts[key] += val
        if not all(res.values()) and len(failures) < MAX_WITNESSES:
            failures.append({"choice": str(c), "failed": [k for k, v in res.items() if not v]})
        canon.add(canonical_form(ideal).gens)
    return {
        "d": d,
        "choices": total,
        "checks": counts,
        "expected_face_counts": list(expected_f),
        "distinct_canonical_forms": len(canon),
        "failures": failures,
        "elapsed": round(time.time() - start, 3),
        "ok": all(v == total for v in counts.values()),
    }


# ---- trees -----------------------------------------------------------------

def tree_sweep(n: int, betti: bool = True, progress: Progress = None) -> dict:
    target = squarefree_power(n, n - 1)
    target2 = squarefree_power(n, 2)
    totals = _betti_totals(target) if betti else None
    totals2 = _betti_totals(target2) if betti else None
    keys = ("polarization", "relation_graph", "maximal", "dual_formula", "dual_polarization", "cellular", "betti")
    counts = {k: 0 for k in keys}
    failures = []
    canon = set()
    start = time.time()
    trees = enumerate_spanning_trees(n)
    for T in trees:
        pol = tree_polarization(T)
        dual = tree_dual(T)
        res = {
            "polarization": bool(is_polarization(pol, target)),
            "relation_graph": relation_edges_by_vertex(T) == T.edge_set,
            "dual_formula": alexander_dual(pol) == dual,
            "dual_polarization": bool(is_polarization(dual, target2)),
        }
        fam = ideal_to_partition(pol, n)
        res["maximal"] = res["polarization"] and is_maximal(fam)
        X = tree_complex(T)
        res["cellular"] = bool(supports_resolution(X, pol)) and is_minimal(X) and X.f_vector() == (n, n - 1)
        if betti:
            res["betti"] = _betti_totals(pol) == totals and _betti_totals(dual) == totals2
        else:
            res["betti"] = True
        for key, val in res.items():
            counts[key] += val
        if not all(res.values()) and len(failures) < MAX_WITNESSES:
            failures.append({"tree": T.to_json(), "failed": [k for k, v in res.items() if not v]})
        canon.add(canonical_form(pol).gens)
    _say(progress, f"trees n={n}: {len(trees)} done, {time.time() - start:.1f}s")
    report = {
        "n": n,
        "trees": len(trees),
        "checks": counts,
        "distinct_canonical_forms": len(canon),
        "failures": failures,
        "elapsed": round(time.time() - start, 3),
    }
    report["ok"] = all(v == len(trees) for v in counts.values()) and len(canon) == len(trees)
    if n == 4:
        report["path_is_box"] = isomorphic(tree_dual(path_tree(4)), box_polarization(3, 2))
        report["star_is_standard"] = isomorphic(tree_dual(star_tree(4)), standard_polarization(maximal_ideal_power(3, 2)))
        report["ok"] = report["ok"] and report["path_is_box"] and report["star_is_standard"]
    return report


def surjectivity_check(n: int = 4, progress: Progress = None) -> dict:
    """Canonical forms of maximal valid (n, 2) families vs tree duals."""
    fams = maximal_families(n, 2)
    from_families = {canonical_form(partition_to_ideal(f)).gens for f in fams}
    from_trees = {canonical_form(tree_dual(T)).gens for T in enumerate_spanning_trees(n)}
    _say(progress, f"surjectivity n={n}: {len(from_families)} family forms, {len(from_trees)} tree forms")
    return {
        "n": n,
        "maximal_families": len(fams),
        "family_forms": len(from_families),
        "tree_forms": len(from_trees),
        "only_in_families": [[str(g) for g in k] for k in sorted(from_families - from_trees, key=str)],
        "only_in_trees": [[str(g) for g in k] for k in sorted(from_trees - from_families, key=str)],
        "ok": from_families == from_trees,
    }


# ---- oracle self-consistency -------------------------------------------------

def random_squarefree_ideal(rng: random.Random, max_vars: int = 8, max_gens: int = 10) -> MonomialIdeal:
    nv = rng.randint(1, max_vars)
    ng = rng.randint(1, max_gens)
    gens = []
    for _ in range(ng):
        size = rng.randint(1, nv)
        gens.append(Monomial.squarefree(rng.sample(range(1, nv + 1), size)))
    return minimalize(gens, (VarRef(i) for i in range(1, nv + 1)))


def oracle_sweep(count: int = 1000, seed: int = 0, progress: Progress = None) -> dict:
    rng = random.Random(seed)
    start = time.time()
    mismatches = []
    for k in range(count):
        ideal = random_squarefree_ideal(rng)
        a = hilbert_numerator(ideal)
        b = inclusion_exclusion_numerator(ideal)
        if a != b:
            mismatches.append({"ideal": ideal.to_json(), "recursion": a.to_json(), "inclusion_exclusion": b.to_json()})
    _say(progress, f"oracle: {count} ideals, {time.time() - start:.1f}s")
    return {
        "ideals": count,
        "seed": seed,
        "mismatches": len(mismatches),
        "witnesses": mismatches[:MAX_WITNESSES],
        "elapsed": round(time.time() - start, 3),
        "ok": not mismatches,
    }
