"""Command-line front end.

Exit status: 0 when every required verdict passes, 1 when a verdict fails or
is not applicable, 2 for unreadable or invalid input and exceeded bounds.
Without ``--input`` the bundled eight-object example is used.
"""
from __future__ import annotations

import argparse
import sys

from .descriptive import set_description
from .document import (
    ReportDocument,
    StructureDocument,
    load_document,
    load_example,
    parse_document,
    render_report,
)
from .errors import InputError, NearnessError, PreconditionError, ResourceError
from .morphisms import (
    check_hom_properties,
    check_kernel_ideal,
    check_nearness_hom,
    first_iso_check,
    kernel,
)
from .quotient import CosetSpace, build_quotient_ring, check_quotient_hypothesis
from .search import search_structures
from .structures import (
    AxiomReport,
    StructureCandidate,
    _jsonable,
    check_element_props,
    check_ideal,
    check_intersection_theorem,
    check_near_group,
    check_nearness_ring,
    check_subnearness_ring,
    classify_units,
)


# -- report assembly ----------------------------------------------------------


def _take(doc: ReportDocument, rep: AxiomReport, prefix: str = "", required: bool = True):
    for k, v in rep.verdicts.items():
        key = f"{prefix}{k}"
        doc.verdicts[key] = v
        if required and k not in rep.optional:
            doc.required.append(key)
    for k, v in rep.witnesses.items():
        doc.witnesses[f"{prefix}{k}"] = _jsonable(v)
    doc.counterexamples.extend(
        c.to_dict() | {"axiom": f"{prefix}{c.axiom}"} for c in rep.counterexamples
    )
    doc.notes.extend(rep.anomalies)
    if rep.audit:
        doc.witnesses[f"{prefix}audit"] = _jsonable(rep.audit)


def _grid(op, rows, cols, cells):
    return {"op": op, "rows": [str(r) for r in rows], "cols": [str(c) for c in cols],
            "cells": [[str(c) for c in row] for row in cells]}


def _restriction_tables(doc: ReportDocument, R: StructureCandidate, expected: dict):
    order = R.order
    for which in ("add", "mul"):
        table = R.add if which == "add" else R.mul
        if table is None:
            continue
        cells = table.to_matrix(order)
        doc.tables[f"{R.name} {which}"] = _grid(table.name, order, order, cells)
        want = expected.get(R.name, {}).get(which)
        if want is not None and want != [[str(c) for c in row] for row in cells]:
            doc.deviations.append({"item": f"{R.name} {which} table", "printed": want,
                                   "computed": [[str(c) for c in row] for row in cells]})


def _coset_deviations(doc: ReportDocument, space: CosetSpace, key: str, expected: dict, reps):
    printed = expected.get("cosets", {}).get(key, {})
    descs = expected.get("coset_descriptions", {}).get(key, {})
    system = space.system
    for x in reps:
        c = space.coset(x)
        computed = system.sort(c.members)
        if c.label in printed and set(printed[c.label]) != set(computed):
            doc.deviations.append({"item": f"{c.label} members", "printed": printed[c.label],
                                   "computed": [str(m) for m in computed]})
        if c.label in descs:
            want = {tuple(d) for d in descs[c.label]}
            have = set(set_description(system, c.members))
            if want != have:
                doc.deviations.append({"item": f"description of {c.label}",
                                       "printed": sorted(list(d) for d in want),
                                       "computed": sorted(list(d) for d in have)})


# -- commands -----------------------------------------------------------------


def cmd_approx(args, doc: StructureDocument) -> ReportDocument:
    system = doc.system
    X = doc.subset(args.set)
    res = system.approximate(X)
    out = ReportDocument(f"approx --set {args.set}")
    out.witnesses = {
        "set": system.sort(X),
        "lower": system.sort(res.lower),
        "upper": system.sort(res.upper),
        "boundary": system.sort(res.boundary),
        "partitions": {",".join(p.probes): [system.sort(c) for c in p.classes]
                       for p in system.partitions_family()},
    }
    return out


def cmd_verify(args, doc: StructureDocument) -> ReportDocument:
    kind = args.what
    if kind in ("hom",):
        return cmd_hom(args, doc)
    R = doc.structure(args.carrier)
    out = ReportDocument(f"verify {kind} --carrier {args.carrier}")
    expected = doc.expected_tables.get("restrictions", {})
    if kind == "ring":
        _take(out, check_nearness_ring(R))
        _restriction_tables(out, R, expected)
    elif kind == "near-group":
        rep = check_near_group(R, args.op, anomalies="report")
        _take(out, rep)
        out.verdicts["uniqueness"] = "fail" if rep.anomalies else "pass"
        out.required.append("uniqueness")
    elif kind == "semigroup":
        from .structures import check_near_semigroup
        _take(out, check_near_semigroup(R, args.op))
    elif kind in ("subring", "ideal"):
        sub = _need(args, "sub")
        out.command += f" --sub {sub}"
        S = doc.subset(sub)
        if kind == "subring":
            _take(out, check_subnearness_ring(S, R, sub))
        else:
            out.command += f" --side {args.side}"
            _take(out, check_ideal(S, R, args.side, sub))
        _restriction_tables(out, R.restrict(S, sub), expected)
    elif kind == "units":
        _take(out, classify_units(R))
    elif kind == "element-props":
        _take(out, check_element_props(R))
    elif kind == "intersection":
        names = _need(args, "parts").split(",")
        out.command += f" --parts {args.parts} --kind {args.kind}"
        _take(out, check_intersection_theorem([doc.subset(n) for n in names], R, args.kind))
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown check {kind!r}")
    return out


def _need(args, name):
    value = getattr(args, name, None)
    if not value:
        raise InputError(f"--{name} is required for this command")
    return value


def _hom_setup(args, doc):
    src = doc if args.source is None else _load(args.source)
    dst = src if args.target is None else _load(args.target)
    R1 = src.structure(args.from_carrier)
    R2 = dst.structure(args.to_carrier)
    if args.map not in src.maps:
        raise InputError(f"no map named {args.map!r}", "maps")
    return src.mapping(args.map, R1, R2), R1, R2


def cmd_hom(args, doc) -> ReportDocument:
    m, R1, R2 = _hom_setup(args, doc)
    out = ReportDocument(f"verify hom --map {args.map}")
    rep = check_nearness_hom(m, R1, R2, strict=args.strict)
    _take(out, rep)
    out.witnesses["map"] = {str(k): str(v) for k, v in sorted(m.mapping.items(), key=lambda kv: R1.space.index(kv[0]))}
    if rep.ok:
        out.witnesses["kernel"] = R1.space.sort(kernel(m, R1, R2))
        _take(out, check_hom_properties(m, R1, R2), "properties/", required=False)
        _take(out, check_kernel_ideal(m, R1, R2), "kernel/", required=False)
    return out


def cmd_iso(args, doc) -> ReportDocument:
    m, R1, R2 = _hom_setup(args, doc)
    out = ReportDocument(f"iso-check --map {args.map}")
    res = first_iso_check(m, R1, R2)
    _take(out, res.report)
    if res.quotient is not None:
        q = res.quotient
        classes, add, mul = q.collapsed()
        labels = ["{" + ",".join(str(x) for x in R1.space.sort(c)) + "}" for c in classes]
        out.tables["quotient ⊕ (equal cosets identified)"] = _grid("⊕", labels, labels, [[labels[k] for k in row] for row in add])
        out.tables["quotient ⊙ (equal cosets identified)"] = _grid("⊙", labels, labels, [[labels[k] for k in row] for row in mul])
        im = res.image
        for which in ("add", "mul"):
            t = im.op(which)
            out.tables[f"image {which}"] = _grid(t.name, im.order, im.order, t.to_matrix(im.order))
    return out


def cmd_cosets(args, doc) -> ReportDocument:
    R = doc.structure(args.carrier)
    S = doc.subset(args.sub)
    space = CosetSpace(R, S, args.sub)
    reps = R.upper_order if args.extended else R.order
    out = ReportDocument(f"cosets --carrier {args.carrier} --sub {args.sub}" + (" --extended" if args.extended else ""))
    out.witnesses["cosets"] = {space.coset(x).label: space.system.sort(space.coset(x).members) for x in reps}
    out.witnesses["descriptions"] = {
        space.coset(x).label: sorted(list(d) for d in set_description(space.system, space.coset(x).members))
        for x in reps
    }
    sub_rep = check_subnearness_ring(S, R, args.sub)
    if not sub_rep.ok:
        out.notes.append(f"{args.sub} is not a verified subnearness ring of {args.carrier}")
    _coset_deviations(out, space, f"{args.carrier}/{args.sub}", doc.expected_tables, reps)
    return out


def cmd_quotient(args, doc) -> ReportDocument:
    R = doc.structure(args.carrier)
    S = doc.subset(args.sub)
    candidates = "powerset" if args.candidates == "powerset" else None
    out = ReportDocument(f"quotient --carrier {args.carrier} --sub {args.sub}")
    hyp = check_quotient_hypothesis(R, S, candidates, args.sub)
    _take(out, hyp, "hypothesis/")
    key = f"{args.carrier}/{args.sub}"
    space = CosetSpace(R, S, args.sub, candidates)
    _coset_deviations(out, space, key, doc.expected_tables, R.upper_order)
    if not hyp.ok:
        return out
    q = build_quotient_ring(R, S, candidates, args.sub)
    _take(out, q.report, "quotient/")
    labels = q.labels
    out.tables["⊕"] = _grid("⊕", labels, labels, q.label_table("add"))
    out.tables["⊙"] = _grid("⊙", labels, labels, q.label_table("mul"))
    expected = doc.expected_tables.get("quotients", {}).get(key, {})
    for which in ("add", "mul"):
        want = expected.get(which)
        have = q.label_table(which)
        if want is not None and want != have:
            out.deviations.append({"item": f"quotient {which} table", "printed": want, "computed": have})
    return out


def cmd_search(args, doc) -> ReportDocument:
    res = search_structures(args.size, args.seed, args.exhaustive, args.samples)
    mode = "--exhaustive" if args.exhaustive else f"--seed {args.seed}"
    out = ReportDocument(f"search --size {args.size} {mode}")
    data = res.to_dict()
    exceptions = data.pop("theorem_exceptions")
    out.witnesses = _jsonable(data)
    out.witnesses["theorem_exceptions"] = exceptions
    out.verdicts["found"] = "pass" if res.ring_models else "fail"
    out.verdicts["near_group_theorems"] = "pass" if not any(exceptions.values()) else "fail"
    out.required.append("near_group_theorems")
    if res.near_group_anomalies:
        out.notes.append(
            f"{res.near_group_anomalies} near-group candidates rejected for a non-unique identity or inverse")
    return out


# -- entry point ---------------------------------------------------------------


def _load(path) -> StructureDocument:
    if path is None:
        return load_example()
    if path == "-":
        return parse_document(sys.stdin.read(), "<stdin>")
    return load_document(path)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default=argparse.SUPPRESS,
                        help="structure document (JSON); '-' reads stdin; default: bundled example")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="nearness", parents=[common],
                                description="Verify algebraic structures on nearness approximation spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("approx", parents=[common], help="lower/upper approximation and boundary of a subset")
    a.add_argument("--set", required=True)
    a.set_defaults(run=cmd_approx)

    v = sub.add_parser("verify", parents=[common], help="axiom checks")
    v.add_argument("what", choices=("ring", "near-group", "semigroup", "subring", "ideal", "units",
                                    "element-props", "intersection", "hom"))
    v.add_argument("--carrier", default="R")
    v.add_argument("--sub")
    v.add_argument("--side", choices=("left", "right", "both"), default="both")
    v.add_argument("--op", choices=("add", "mul"), default="add")
    v.add_argument("--parts", help="comma-separated subset names")
    v.add_argument("--kind", choices=("subring", "ideal"), default="subring")
    _hom_args(v, required=False)
    v.set_defaults(run=cmd_verify)

    c = sub.add_parser("cosets", parents=[common], help="weak cosets of a carrier by a subset")
    c.add_argument("--carrier", default="R")
    c.add_argument("--sub", required=True)
    c.add_argument("--extended", action="store_true", help="representatives from the upper approximation")
    c.set_defaults(run=cmd_cosets)

    q = sub.add_parser("quotient", parents=[common], help="weak-coset quotient nearness ring")
    q.add_argument("--carrier", default="R")
    q.add_argument("--sub", required=True)
    q.add_argument("--candidates", choices=("cosets", "powerset"), default="cosets")
    q.set_defaults(run=cmd_quotient)

    i = sub.add_parser("iso-check", parents=[common], help="restricted first isomorphism theorem")
    _hom_args(i, required=True)
    i.set_defaults(run=cmd_iso)

    s = sub.add_parser("search", parents=[common], help="search small tables for hidden nearness rings")
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--exhaustive", action="store_true")
    s.add_argument("--samples", type=int, default=200)
    s.set_defaults(run=cmd_search)
    return p


def _hom_args(parser, required):
    parser.add_argument("--map", required=required)
    parser.add_argument("--from", dest="source", help="source document (default: --input)")
    parser.add_argument("--to", dest="target", help="target document (default: the source)")
    parser.add_argument("--from-carrier", default="R")
    parser.add_argument("--to-carrier", default="R")
    parser.add_argument("--strict", action="store_true", help="also bind the laws on upper-approximation pairs")


def run(argv=None) -> tuple[int, str]:
    """Parse ``argv``, run the command and return ``(exit_code, rendered_output)``."""
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    try:
        doc = None if args.command == "search" else _load(getattr(args, "input", None))
        if args.command == "verify" and args.what == "hom":
            _need(args, "map")
        rep = args.run(args, doc)
    except (InputError, ResourceError) as exc:
        return 2, f"error: {exc}\n"
    except PreconditionError as exc:
        return 1, f"precondition failed: {exc}\n"
    except NearnessError as exc:
        return 1, f"structural failure: {exc}\n"
    return (0 if rep.ok else 1), render_report(rep, fmt)


def main(argv=None) -> int:
    code, text = run(argv)
    stream = sys.stdout if code != 2 else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
