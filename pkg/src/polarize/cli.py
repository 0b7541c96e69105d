"""Command line entry point.

Every command prints one JSON report on stdout; progress goes to stderr.
Exit codes: 0 when the report is ok, 1 when it is not (or the input is
malformed), 2 when two independent oracles disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import sweeps
from .betti import betti_table
from .cellres import LabeledCellComplex, is_minimal, supports_resolution
from .duality import alexander_dual
from .graphs import SimpleGraph, edge_ideal, parse_split, split_vertex, split_witness, valid_splits
from .hilbert import hilbert_numerator, inclusion_exclusion_numerator, is_polarization
from .ideals import MonomialIdeal, VarRef, maximal_ideal_power, squarefree_power
from .partitions import (
    PartitionFamily,
    dual_partition,
    enumerate_families,
    is_maximal,
    partition_to_ideal,
    satisfies_criterion,
)
from .trees import LabeledTree, tree_dual, tree_polarization
from .trianglegrid import (
    TriangleChoice,
    build_delta_complex,
    construct_polarization,
    coordinates,
    monomials,
    xyz_string,
)

EXIT_OK, EXIT_FAIL, EXIT_DISAGREE = 0, 1, 2


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _write_json(path: str, data) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _ideal_report(ideal: MonomialIdeal) -> dict:
    return {"json": ideal.to_json(), "text": str(ideal)}


# ---- commands ----------------------------------------------------------------

def cmd_dual(args) -> dict:
    ideal = MonomialIdeal.from_json(_read_json(args.input))
    dual = alexander_dual(ideal)
    if args.emit:
        _write_json(args.emit, dual.to_json())
    return {"ok": True, "ideal": _ideal_report(ideal), "dual": _ideal_report(dual), "self_dual": dual == ideal}


def cmd_check_polarization(args) -> dict:
    cand = MonomialIdeal.from_json(_read_json(args.candidate))
    target = MonomialIdeal.from_json(_read_json(args.target))
    res = is_polarization(cand, target)
    out = res.to_json()
    if args.betti and res.ok:
        a, b = betti_table(cand).total_betti, betti_table(target).total_betti
        out["betti_candidate"], out["betti_target"] = list(a), list(b)
        if a != b:
            out["ok"] = False
            out["exit"] = EXIT_DISAGREE
    return out


def cmd_check_partition(args) -> dict:
    fam = PartitionFamily.from_json(_read_json(args.input))
    res = satisfies_criterion(fam)
    out = {
        "family": fam.to_json(),
        "criterion": res.ok,
        "witness": None if res.ok else {"i": res.witness[0], "sigma": list(res.witness[1]), "tau": list(res.witness[2])},
        "ideal": _ideal_report(partition_to_ideal(fam)),
    }
    if res.ok:
        out["maximal"] = is_maximal(fam)
    ok = res.ok
    if args.verify:
        hil = is_polarization(partition_to_ideal(fam), squarefree_power(fam.n, fam.d))
        out["hilbert"] = hil.to_json()
        if hil.ok != res.ok:
            out["ok"] = False
            out["exit"] = EXIT_DISAGREE
            return out
    out["ok"] = ok
    return out


def cmd_dualize_partition(args) -> dict:
    fam = PartitionFamily.from_json(_read_json(args.input))
    dual = dual_partition(fam)
    if args.emit:
        _write_json(args.emit, dual.to_json())
    out = {"ok": True, "family": fam.to_json(), "dual": dual.to_json()}
    if args.verify:
        lhs = alexander_dual(partition_to_ideal(fam))
        rhs = partition_to_ideal(dual)
        out["dual_of_ideal_matches"] = lhs == rhs
        out["ok"] = lhs == rhs
    return out


def cmd_enumerate_partitions(args) -> dict:
    fams = []
    checked = passing = 0
    disagreements = []
    target = squarefree_power(args.n, args.d)
    for fam in enumerate_families(args.n, args.d):
        checked += 1
        ok = satisfies_criterion(fam).ok
        if args.verify:
            hil = is_polarization(partition_to_ideal(fam), target).ok
            if hil != ok:
                disagreements.append(fam.to_json())
        if not ok:
            continue
        passing += 1
        if args.maximal_only and not is_maximal(fam):
            continue
        fams.append(fam.to_json())
    out = {"ok": not disagreements, "n": args.n, "d": args.d, "families_checked": checked, "criterion_pass": passing, "listed": len(fams), "families": fams}
    if args.verify:
        out["disagreements"] = len(disagreements)
        out["disagreement_witnesses"] = disagreements[:5]
        if disagreements:
            out["exit"] = EXIT_DISAGREE
    return out


def cmd_tree(args) -> dict:
    if args.input:
        T = LabeledTree.from_json(_read_json(args.input))
    else:
        if args.n is None or args.edges is None:
            raise UsageError("tree needs --input or both --n and --edges")
        T = LabeledTree.parse(args.n, args.edges)
    ideal = tree_dual(T) if args.dual else tree_polarization(T)
    out = {"ok": True, "tree": T.to_json(), "ideal": _ideal_report(ideal)}
    if args.emit:
        _write_json(args.emit, ideal.to_json())
    if args.emit_svg:
        from .plotting import draw_tree

        draw_tree(T, args.emit_svg, title=f"tree {T}")
        out["svg"] = args.emit_svg
    if args.verify:
        target = squarefree_power(T.n, 2 if args.dual else T.n - 1)
        res = is_polarization(ideal, target)
        formula = alexander_dual(tree_polarization(T)) == tree_dual(T)
        out["polarization"] = res.to_json()
        out["dual_formula"] = formula
        out["ok"] = res.ok and formula
    return out


def _graph(args) -> SimpleGraph:
    if args.input:
        return SimpleGraph.from_json(_read_json(args.input))
    if args.complete:
        return SimpleGraph.complete(args.complete)
    if args.path:
        return SimpleGraph.path(args.path)
    raise UsageError("graph needs --input, --complete N or --path N")


def _vertex(text: str) -> VarRef:
    try:
        if "^" in text:
            b, c = text.split("^")
            return VarRef(int(b), int(c))
        return VarRef(int(text))
    except ValueError as exc:
        raise UsageError(f"bad vertex {text!r}, expected like 3 or 3^2") from exc


def _split_json(split) -> list:
    return [[list(v) for v in sorted(part)] for part in split]


def cmd_graph_splits(args) -> dict:
    G = _graph(args)
    i = _vertex(args.at)
    splits = valid_splits(G, i)
    return {"ok": True, "graph": G.to_json(), "at": list(i), "splits": [_split_json(s) for s in splits], "count": len(splits)}


def cmd_graph_split(args) -> dict:
    G = _graph(args)
    i = _vertex(args.at)
    left, right = parse_split(args.parts)
    pick = lambda xs: frozenset(VarRef(x) for x in xs)  # noqa: E731
    split = (pick(left), pick(right))
    w = split_witness(G, i, split)
    if w is not None:
        return {"ok": False, "reason": "link is not complete bipartite across the split", "witness": str(w)}
    H = split_vertex(G, i, split)
    if args.emit:
        _write_json(args.emit, H.to_json())
    res = is_polarization(edge_ideal(H), edge_ideal(G))
    return {"ok": res.ok, "graph": H.to_json(), "ideal": _ideal_report(edge_ideal(H)), "polarization": res.to_json()}


def cmd_triangle(args) -> dict:
    c = TriangleChoice.parse(args.d, args.choices)
    ideal = construct_polarization(c)
    X = build_delta_complex(c)
    out = {
        "ok": True,
        "d": c.d,
        "choices": list(c.letters),
        "ideal": {"json": ideal.to_json(), "text": [xyz_string(g) for g in ideal.gens]},
        "face_counts": list(X.f_vector()),
    }
    if args.emit:
        _write_json(args.emit, ideal.to_json())
    if args.emit_complex:
        _write_json(args.emit_complex, X.to_json())
    if args.emit_svg:
        from .plotting import draw_complex

        draw_complex(X, [coordinates(m) for m in monomials(c.d)], args.emit_svg, label=xyz_string, title=f"d={c.d}: {c}")
        out["svg"] = args.emit_svg
    if args.verify:
        pol = is_polarization(ideal, maximal_ideal_power(3, c.d))
        res = supports_resolution(X, ideal)
        mini = is_minimal(X)
        bt = betti_table(ideal).total_betti
        out["polarization"] = pol.to_json()
        out["resolution"] = {"ok": res.ok, "offending": None if res.ok else str(res.offending), "restrictions_checked": res.checked}
        out["minimal"] = mini
        out["betti"] = list(bt)
        out["ok"] = pol.ok and res.ok and mini
        if res.ok and mini and bt != X.f_vector():
            out["ok"] = False
            out["exit"] = EXIT_DISAGREE
    return out


def cmd_betti(args) -> dict:
    ideal = MonomialIdeal.from_json(_read_json(args.input))
    table = betti_table(ideal)
    return {"ok": True, "ideal": _ideal_report(ideal), **table.to_json(), "euler_characteristic": table.euler_characteristic()}


def cmd_hilbert(args) -> dict:
    ideal = MonomialIdeal.from_json(_read_json(args.input))
    num = hilbert_numerator(ideal)
    out = {"ok": True, "ideal": _ideal_report(ideal), "numerator": num.to_json(), "text": str(num)}
    if args.verify:
        other = inclusion_exclusion_numerator(ideal)
        out["inclusion_exclusion"] = other.to_json()
        if other != num:
            out["ok"] = False
            out["exit"] = EXIT_DISAGREE
    return out


def cmd_certify(args) -> dict:
    X = LabeledCellComplex.from_json(_read_json(args.complex))
    ideal = MonomialIdeal.from_json(_read_json(args.ideal))
    res = supports_resolution(X, ideal)
    mini = is_minimal(X)
    out = {
        "ok": res.ok,
        "resolution": res.ok,
        "offending": None if res.ok else {"multidegree": str(res.offending), "homology": {str(k): v for k, v in res.homology.items()}},
        "restrictions_checked": res.checked,
        "minimal": mini,
        "boundary_squared_zero": X.boundary_squared_is_zero(),
        "face_counts": list(X.f_vector()),
    }
    if res.ok and mini:
        bt = betti_table(ideal).total_betti
        out["betti"] = list(bt)
        if bt != X.f_vector():
            out["ok"] = False
            out["exit"] = EXIT_DISAGREE
    return out


def cmd_sweep(args) -> dict:
    kind = args.kind
    betti = not args.no_betti
    if kind in ("duality", "partitions"):
        if args.samples:
            rep = sweeps.sampled_partition_sweep(args.n, args.d, args.samples, args.seed, betti, _progress)
        else:
            rep = sweeps.partition_sweep(args.n, args.d, betti, _progress)
        if rep["disagreements"]:
            rep["exit"] = EXIT_DISAGREE
        return rep
    if kind == "triangles":
        return sweeps.triangle_sweep(args.d, betti, _progress)
    if kind == "trees":
        return sweeps.tree_sweep(args.n, betti, _progress)
    if kind == "surjectivity":
        return sweeps.surjectivity_check(args.n, _progress)
    if kind == "oracle":
        rep = sweeps.oracle_sweep(args.count, args.seed, _progress)
        if rep["mismatches"]:
            rep["exit"] = EXIT_DISAGREE
        return rep
    raise UsageError(f"unknown sweep {kind!r}")


# ---- parser ------------------------------------------------------------------

def build_parser() -> Parser:
    p = Parser(prog="polarize", description="Polarizations of powers of the maximal ideal: build, check, dualize, certify.")
    sub = p.add_subparsers(dest="command", parser_class=Parser)
    sub.required = True

    s = sub.add_parser("dual", help="Alexander dual of a square-free ideal")
    s.add_argument("--input", required=True)
    s.add_argument("--emit")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("check", help="check a polarization or a partition family")
    chk = s.add_subparsers(dest="what", parser_class=Parser)
    chk.required = True
    c = chk.add_parser("polarization")
    c.add_argument("--candidate", required=True)
    c.add_argument("--target", required=True)
    c.add_argument("--betti", action="store_true", help="also compare total Betti numbers")
    c.set_defaults(func=cmd_check_polarization)
    c = chk.add_parser("partition")
    c.add_argument("--input", required=True)
    c.add_argument("--verify", action="store_true", help="compare the criterion with the Hilbert oracle")
    c.set_defaults(func=cmd_check_partition)

    s = sub.add_parser("dualize", help="dual partition family")
    dz = s.add_subparsers(dest="what", parser_class=Parser)
    dz.required = True
    c = dz.add_parser("partition")
    c.add_argument("--input", required=True)
    c.add_argument("--emit")
    c.add_argument("--verify", action="store_true")
    c.set_defaults(func=cmd_dualize_partition)

    s = sub.add_parser("enumerate", help="enumerate valid partition families")
    en = s.add_subparsers(dest="what", parser_class=Parser)
    en.required = True
    c = en.add_parser("partitions")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--maximal-only", action="store_true")
    c.add_argument("--verify", action="store_true")
    c.set_defaults(func=cmd_enumerate_partitions)

    s = sub.add_parser("tree", help="polarization (or its dual) from a labeled spanning tree")
    s.add_argument("--n", type=int)
    s.add_argument("--edges", help="e.g. 1-2,2-3; edge k gets label k")
    s.add_argument("--input")
    s.add_argument("--dual", action="store_true")
    s.add_argument("--emit")
    s.add_argument("--emit-svg")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_tree)

    s = sub.add_parser("graph", help="edge-ideal vertex splitting")
    gr = s.add_subparsers(dest="what", parser_class=Parser)
    gr.required = True
    for name, func in (("splits", cmd_graph_splits), ("split", cmd_graph_split)):
        c = gr.add_parser(name)
        src = c.add_mutually_exclusive_group()
        src.add_argument("--input")
        src.add_argument("--complete", type=int, metavar="N")
        src.add_argument("--path", type=int, metavar="N")
        c.add_argument("--at", required=True, help="vertex, e.g. 1 or 1^2")
        if name == "split":
            c.add_argument("--parts", required=True, help="e.g. 2|3,4")
            c.add_argument("--emit")
        c.set_defaults(func=func)

    s = sub.add_parser("triangle", help="polarization of (x,y,z)^d from down-triangle choices")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--choices", required=True, help="X/Y/Z per down triangle in graded-lex order, or one letter for all")
    s.add_argument("--emit")
    s.add_argument("--emit-complex")
    s.add_argument("--emit-svg")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_triangle)

    for name, func in (("betti", cmd_betti), ("hilbert", cmd_hilbert)):
        s = sub.add_parser(name)
        s.add_argument("--input", required=True)
        if name == "hilbert":
            s.add_argument("--verify", action="store_true", help="compare with inclusion-exclusion")
        s.set_defaults(func=func)

    s = sub.add_parser("certify", help="check that a labeled complex supports a (minimal) resolution")
    s.add_argument("--complex", required=True)
    s.add_argument("--ideal", required=True)
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("sweep", help="exhaustive or sampled certification sweeps")
    s.add_argument("kind", choices=["duality", "partitions", "triangles", "trees", "surjectivity", "oracle"])
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--samples", type=int, default=0, help="sample this many families instead of all")
    s.add_argument("--count", type=int, default=1000, help="oracle sweep size")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--no-betti", action="store_true")
    s.set_defaults(func=cmd_sweep)
    return p


def execute(argv: list[str]) -> tuple[dict, int]:
    """Run one command; returns (report, exit code)."""
    start = time.time()
    try:
        args = build_parser().parse_args(argv)
        report = args.func(args)
    except UsageError as exc:
        return {"command": list(argv), "ok": False, "error": str(exc)}, EXIT_FAIL
    except (ValueError, KeyError, TypeError) as exc:
        return {"command": list(argv), "ok": False, "error": f"{type(exc).__name__}: {exc}"}, EXIT_FAIL
    code = report.pop("exit", EXIT_OK if report.get("ok") else EXIT_FAIL)
    report = {"command": list(argv), **report, "timing": round(time.time() - start, 3)}
    return report, code


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] in ("-h", "--help") or not argv:
        build_parser().print_help()
        return EXIT_OK if argv else EXIT_FAIL
    report, code = execute(argv)
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    if code and "error" in report:
        print(f"error: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
