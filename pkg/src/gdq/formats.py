"""Reading and writing ``.tq`` presentations, ``.tri`` surfaces and DOT graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .algebra import GDPresentation, validate_presentation
from .fields import Field
from .quiver_core import (InvalidInputError, Quiver, TriangulationQuiver,
                          ValidationReport, cycles_of, validate_triangulation_quiver)
from .surface import SurfaceTriangulation



def parse_cycles(tokens: Iterable[str]) -> list[tuple[str, ...]]:
    """Cycle notation over whitespace separated tokens.

    Only a leading ``(`` and a trailing ``)`` on a token delimit cycles, so
    identifiers may themselves contain parentheses, e.g. ``via(1,3):4>2``.
    """
    cycles, cur = [], None
    for tok in tokens:
        if cur is None:
            if not tok.startswith("("):
                raise ValueError("f must be written in cycle notation")
            cur, tok = [], tok[1:]
        closes = tok.endswith(")")
        if closes:
            tok = tok[:-1]
        if tok:
            cur.append(tok)
        if closes:
            if not cur:
                raise ValueError("empty cycle in f")
            cycles.append(tuple(cur))
            cur = None
    if cur is not None:
        raise ValueError("unterminated cycle in f")
    return cycles


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()[0], line.split()[1:], line


@dataclass
class RawTQ:
    """A ``.tq`` file as written, before any validation."""

    vertices: list[str] = field(default_factory=list)
    arrows: list[tuple[str, str, str]] = field(default_factory=list)
    cycles: list[tuple[str, ...]] = field(default_factory=list)
    weights: dict[str, int] = field(default_factory=dict)
    border: dict[str, str] = field(default_factory=dict)
    field: int = 0

    @property
    def fmap(self) -> dict[str, str]:
        f = {}
        for cyc in self.cycles:
            for i, x in enumerate(cyc):
                if x in f:
                    raise InvalidInputError(f"{x} appears twice in the f cycles")
                f[x] = cyc[(i + 1) % len(cyc)]
        return f


def parse_tq(text: str) -> RawTQ:
    raw = RawTQ()
    for no, key, args, line in _lines(text):
        try:
            if key == "vertices":
                raw.vertices += args
            elif key == "arrow":
                a, s, t = args
                raw.arrows.append((a, s, t))
            elif key == "f":
                raw.cycles += parse_cycles(args)
            elif key == "weight":
                a, m = args
                raw.weights[a] = int(m)
            elif key == "border":
                v, c = args
                raw.border[v] = c
            elif key == "field":
                (p,) = args
                raw.field = int(p)
            else:
                raise ValueError(f"unknown keyword {key!r}")
        except ValueError as exc:
            raise InvalidInputError(f"line {no}: {exc}") from None
    return raw


def validate_tq(raw: RawTQ) -> ValidationReport:
    """Validate a parsed ``.tq``; every problem becomes a report line."""
    try:
        q = Quiver(tuple(raw.vertices), tuple(raw.arrows))
        f = raw.fmap
    except InvalidInputError as exc:
        return ValidationReport(exc.problems or [str(exc)])
    cycles = cycles_of_safe(f)
    two_regular = all(len(q.out_arrows(v)) == 2 and len(q.in_arrows(v)) == 2 for v in q.vertices)
    if two_regular and all(len(c) != 2 for c in cycles):
        problems = validate_triangulation_quiver(q, f).problems
    else:
        problems = [p for p in validate_presentation(q, f).problems if "longer than 3" not in p]
        problems += [f"f^3 != id on cycle ({' '.join(c)})" for c in cycles if len(c) > 3]
    if not problems:
        try:
            load_presentation(raw)
        except (InvalidInputError, ValueError, ZeroDivisionError) as exc:
            problems.append(str(exc))
    return ValidationReport(problems)


def cycles_of_safe(f):
    try:
        return cycles_of(f)
    except InvalidInputError:
        return []


def load_presentation(raw: RawTQ, field: Field | None = None) -> GDPresentation:
    """Weights default to 1 on orbits without a ``weight`` line."""
    fld = field if field is not None else Field(raw.field)
    q = Quiver(tuple(raw.vertices), tuple(raw.arrows))
    f = raw.fmap
    skeleton = GDPresentation(q, f, 1, {}, fld)
    weights = {}
    for orb in skeleton.orbits:
        given = {raw.weights[a] for a in orb if a in raw.weights}
        weights[orb[0]] = given.pop() if len(given) == 1 else (1 if not given else None)
        if weights[orb[0]] is None:
            raise InvalidInputError(f"conflicting weights on the orbit of {orb[0]}")
    unknown = sorted(set(raw.weights) - set(q.arrow_ids))
    if unknown:
        raise InvalidInputError("weight lines for unknown arrows " + ", ".join(unknown))
    return GDPresentation(q, f, weights, dict(raw.border), fld)


def read_tq(path, field: Field | None = None) -> GDPresentation:
    with open(path, encoding="utf-8") as fh:
        return load_presentation(parse_tq(fh.read()), field)


def format_tq(p: GDPresentation, comment: str | None = None) -> str:
    """Canonical text: sorted ids, cycles from their least element, every orbit weight."""
    q = p.quiver
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append("vertices " + " ".join(sorted(q.vertices)))
    for a, s, t in sorted(q.arrows):
        out.append(f"arrow {a} {s} {t}")
    out.append("f " + " ".join("(" + " ".join(c) + ")" for c in cycles_of(p.fprime)))
    for orb in sorted(p.orbits, key=lambda o: min(o)):
        out.append(f"weight {min(orb)} {p.weights[orb[0]]}")
    for v in sorted(p.border):
        if p.border[v]:
            out.append(f"border {v} {p.border[v]}")
    out.append(f"field {p.field.characteristic}")
    return "\n".join(out) + "\n"


def format_triangulation_quiver(tq: TriangulationQuiver, comment: str | None = None) -> str:
    return format_tq(GDPresentation(tq.quiver, tq.f), comment)


def parse_tri(text: str) -> SurfaceTriangulation:
    edges, tris = [], []
    for no, key, args, _ in _lines(text):
        if key == "edges":
            edges += args
        elif key == "triangle":
            if len(args) != 3:
                raise InvalidInputError(f"line {no}: a triangle lists exactly three edges")
            tris.append(tuple(args))
        else:
            raise InvalidInputError(f"line {no}: unknown keyword {key!r}")
    return SurfaceTriangulation(tuple(edges), tuple(tris))


def read_tri(path) -> SurfaceTriangulation:
    with open(path, encoding="utf-8") as fh:
        return parse_tri(fh.read())


def format_tri(s: SurfaceTriangulation) -> str:
    lines = ["edges " + " ".join(s.edges)]
    lines += ["triangle " + " ".join(t) for t in s.triangles]
    return "\n".join(lines) + "\n"


_PALETTE = ("#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666")


def to_dot(p: GDPresentation, name: str = "Q") -> str:
    """DOT digraph, one colour per f'-cycle; 2-cycles dashed, fixed loops bold."""
    q = p.quiver
    lines = [f'digraph "{name}" {{']
    for v in sorted(q.vertices):
        shape = "box" if v in p.one_vertices else "circle"
        lines.append(f'  "{v}" [shape={shape}];')
    for k, cyc in enumerate(cycles_of(p.fprime)):
        colour = _PALETTE[k % len(_PALETTE)]
        style = {1: "bold", 2: "dashed"}.get(len(cyc), "solid")
        for a in cyc:
            if a not in p.gprime:
                continue
            lines.append(f'  "{q.source(a)}" -> "{q.target(a)}" '
                         f'[label="{a}", color="{colour}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
