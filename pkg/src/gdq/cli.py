"""Command line front end: ``gdq <command> ...``.

Exit codes: 0 success, 1 invalid input, 2 a numeric cross-check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import (GDPresentation, build_presentation, cartan_matrix,
                      dimension, gabriel_quiver)
from .classify import classify, random_sweep, exhaustive_sweep
from .disks import contract, expand, find_disks, select_disks
from .fields import Field
from .formats import (format_tq, format_triangulation_quiver, load_presentation,
                      parse_tq, read_tq, read_tri, to_dot, validate_tq)
from .homology import (InconsistencyError, gabriel_two_regular, primitive_walk,
                       reduced_walk_avoids_relations, simple_periodicity,
                       tube_census, walk_is_bipartite)
from .quiver_core import (InvalidInputError, SearchBudgetError, corner_words,
                          enumerate_triangulation_quivers)
from .surface import quiver_from_surface, validate_triangulation


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def section(self, name: str, lines: list[str], data: dict) -> None:
        if self.fmt == "json":
            print(json.dumps({"section": name, **data}, sort_keys=True, default=str), file=self.stream)
        else:
            print(name, file=self.stream)
            for line in lines:
                print("  " + line, file=self.stream)


def _field(args) -> Field | None:
    value = args.field if args.field is not None else os.environ.get("GDQ_FIELD")
    return None if value in (None, "") else Field(int(value))


def _load(args) -> GDPresentation:
    return read_tq(args.path, _field(args))


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    path = Path(args.path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".tri":
        from .formats import parse_tri
        report = validate_triangulation(parse_tri(text))
        kind = "surface triangulation"
    else:
        raw = parse_tq(text)
        report = validate_tq(raw)
        kind = "presentation"
        if report:
            p = load_presentation(raw)
            kind = ("triangulation quiver" if p.is_triangulation_type else
                    f"generalized presentation ({len(p.one_vertices)} 1-vertices, "
                    f"{len(p.two_cycles())} f'-2-cycles)")
    if report:
        print(f"valid {kind}")
        if path.suffix != ".tri":
            print("note: surface realization is not reconstructed (out of scope)")
        return 0
    print(f"invalid {kind}")
    for problem in report.problems:
        print(f"  - {problem}")
    return 1


def cmd_from_surface(args) -> int:
    s = read_tri(args.path)
    report = validate_triangulation(s)
    if not report:
        print("invalid surface triangulation", file=sys.stderr)
        for problem in report.problems:
            print(f"  - {problem}", file=sys.stderr)
        return 1
    tq = quiver_from_surface(s)
    p = build_presentation(tq, 1, None, _field(args) or Field(0))
    _write(format_tq(p, f"from surface {Path(args.path).name}: {len(s.triangles)} triangles, "
                        f"boundary {{{', '.join(s.boundary)}}}"), args.output)
    return 0


def analyze(p: GDPresentation, out: Output) -> None:
    q = p.quiver
    disks = find_disks(p)
    lines = [f"vertices={len(q.vertices)} arrows={len(q.arrows)} one_vertices={len(p.one_vertices)} "
             f"two_cycles={len(p.two_cycles())} disks={len(disks)}"]
    lines += [f"g-orbit ({' '.join(o)}) n={len(o)} m={p.weights[o[0]]}" for o in p.orbits]
    lines += [f"f-cycle ({' '.join(c)})" for c in p.fprime_cycles()]
    out.section("ORBITS", lines, {
        "vertices": len(q.vertices), "arrows": len(q.arrows), "one_vertices": list(p.one_vertices),
        "two_cycles": len(p.two_cycles()), "disks": len(disks),
        "orbits": [{"arrows": list(o), "n": len(o), "m": p.weights[o[0]]} for o in p.orbits],
        "f_cycles": [list(c) for c in p.fprime_cycles()]})

    basis = p.basis
    proj = {v: len(basis.of_vertex(v)) for v in sorted(q.vertices)}
    out.section("DIMENSION", [f"dim={len(basis)} formula={dimension(p)}"]
                + [f"P_{v}={d}" for v, d in proj.items()],
                {"dim": len(basis), "formula": dimension(p), "projectives": proj})

    C = cartan_matrix(p)
    out.section("CARTAN", [f"order {' '.join(C.vertices)}"] + str(C).splitlines() + [f"det={C.determinant}"],
                {"vertices": list(C.vertices), "matrix": [list(r) for r in C.rows], "det": C.determinant})

    tc = tube_census(p)
    out.section("TUBES", [f"rank3={tc.rank3_count} rank1_arrows={tc.rank1_arrow_count} "
                          f"period2_pairs={tc.period2_pairs}"],
                {"rank3": tc.rank3_count, "rank1_arrows": tc.rank1_arrow_count,
                 "period2_pairs": tc.period2_pairs, "periods": dict(sorted(tc.periods.items()))})

    sp = simple_periodicity(p)
    reg = gabriel_two_regular(p)
    out.section("SIMPLES", [f"S_{v}={k}" for v, k in sp.items()] + [f"gabriel_2_regular={str(reg).lower()}"],
                {"simples": sp, "gabriel_2_regular": reg,
                 "gabriel_arrows": len(gabriel_quiver(p).arrows)})

    walks = []
    if p.is_triangulation_type:
        for a in sorted(q.arrow_ids):
            if q.is_loop(a):
                continue
            w = primitive_walk(p, a)
            walks.append({"start": a, "length": len(w.steps), "closed": w.closed,
                          "bipartite": walk_is_bipartite(w.steps),
                          "reduced_ok": reduced_walk_avoids_relations(p, w)})
        lines = [f"{w['start']}: length={w['length']} closed={str(w['closed']).lower()} "
                 f"bipartite={str(w['bipartite']).lower()} reduced_ok={str(w['reduced_ok']).lower()}"
                 for w in walks]
    else:
        lines = ["not defined for presentations with 1-vertices or f'-2-cycles"]
    out.section("WALKS", lines, {"walks": walks})

    rep = classify(p)
    out.section("GROWTH", [rep.record()], {"record": rep.record(), "growth": rep.growth,
                                           "det": rep.cartan_det, "strict": rep.strict_dihedral,
                                           "family": str(rep.family) if rep.family else None})


def cmd_analyze(args) -> int:
    analyze(_load(args), Output(args.format))
    return 0


def cmd_contract(args) -> int:
    p = _load(args)
    disks = select_disks(p, args.disks)
    for d in disks:
        print(f"contracting {d}", file=sys.stderr)
    _write(format_tq(contract(p, disks)), args.output)
    return 0


def cmd_expand(args) -> int:
    p = _load(args)
    ex = expand(p)
    for d in ex.disks:
        print(f"created {d}", file=sys.stderr)
    _write(format_tq(ex.presentation()), args.output)
    return 0


def cmd_classify(args) -> int:
    print(classify(_load(args)).record())
    return 0


def cmd_enumerate(args) -> int:
    quivers = enumerate_triangulation_quivers(args.max_vertices)
    for k, tq in enumerate(quivers, 1):
        words = " ".join("(" + " ".join(w) + ")" for w in corner_words(tq))
        if args.format == "json":
            print(json.dumps({"index": k, "vertices": len(tq.quiver.vertices), "corner_words": words,
                              "tq": format_triangulation_quiver(tq)}, sort_keys=True))
        else:
            print(f"# quiver {k}: {len(tq.quiver.vertices)} vertices, f-orbits as vertex words {words}")
            print(format_triangulation_quiver(tq))
    return 0


def cmd_sweep(args) -> int:
    fld = _field(args) or Field(0)
    if args.random:
        report = random_sweep(args.random, args.seed, args.min_vertices, args.max_vertices or 7,
                              args.max_weight, fld)
    else:
        weights = [int(x) for x in args.weights.split(",")]
        borders = [x for x in args.borders.split(",")]
        report = exhaustive_sweep(args.max_vertices or 3, weights, borders, fld)
    if args.format == "json":
        for label, rec in report.records:
            print(json.dumps({"instance": label, "record": rec}, sort_keys=True))
    print(report.summary())
    for exc in report.exceptions:
        print(f"EXCEPTION {exc}")
    return 2 if report.exceptions else 0


def cmd_export_dot(args) -> int:
    _write(to_dot(_load(args), Path(args.path).stem), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=int, default=None,
                        help="0 for the rationals or a prime p (default: file value or $GDQ_FIELD)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-o", "--output", default=None, help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="gdq", description="Triangulation quivers and their algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, helptext, path=True):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if path:
            sp.add_argument("path")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "validate a .tq or .tri file")
    add("from-surface", cmd_from_surface, "build the triangulation quiver of a .tri surface")
    add("analyze", cmd_analyze, "full report on a .tq presentation")
    sp = add("contract", cmd_contract, "contract 2-triangle disks")
    sp.add_argument("--disks", default="all", help="'all' or comma separated disk numbers")
    add("expand", cmd_expand, "re-expand 1-vertices and f'-2-cycles")
    add("classify", cmd_classify, "one-line classification record")
    sp = add("enumerate", cmd_enumerate, "list triangulation quivers up to isomorphism", path=False)
    sp.add_argument("--max-vertices", type=int, required=True)
    sp = add("sweep", cmd_sweep, "classify every small weighted instance", path=False)
    sp.add_argument("--max-vertices", type=int, default=None)
    sp.add_argument("--min-vertices", type=int, default=4)
    sp.add_argument("--weights", default="1,2")
    sp.add_argument("--borders", default="0,1")
    sp.add_argument("--random", type=int, default=0, help="sample this many random instances instead")
    sp.add_argument("--max-weight", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    add("export-dot", cmd_export_dot, "Graphviz rendering coloured by f-orbits")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 2
    except (InvalidInputError, SearchBudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
