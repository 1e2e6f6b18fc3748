"""Directed triangulated surfaces and the triangulation quivers they define."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .quiver_core import (InvalidInputError, Quiver, TriangulationQuiver,
                          ValidationReport)


def _normalise_triangle(tri: Sequence[str]) -> tuple[str, str, str]:
    """Self-folded triangles are rotated to (a a b); others keep their listed order."""
    a, b, c = (str(x) for x in tri)
    if a == c and a != b:
        return (a, a, b)
    if b == c and a != b:
        return (b, b, a)
    return (a, b, c)


@dataclass(frozen=True)
class SurfaceTriangulation:
    edges: tuple[str, ...]
    triangles: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(str(e) for e in self.edges))
        tris = []
        for t in self.triangles:
            if len(t) != 3:
                raise InvalidInputError(f"triangle {tuple(t)} does not have three edges")
            tris.append(_normalise_triangle(t))
        object.__setattr__(self, "triangles", tuple(tris))

    def incidence(self) -> Counter:
        return Counter(e for t in self.triangles for e in t)

    @property
    def boundary(self) -> tuple[str, ...]:
        inc = self.incidence()
        return tuple(sorted(e for e in set(self.edges) if inc[e] == 1))

    def reversed(self) -> "SurfaceTriangulation":
        return SurfaceTriangulation(self.edges, tuple((a, c, b) for a, b, c in self.triangles))


def validate_triangulation(s: SurfaceTriangulation) -> ValidationReport:
    problems = []
    edges = set(s.edges)
    dup = [e for e, k in Counter(s.edges).items() if k > 1]
    if dup:
        problems.append("edges listed twice: " + ", ".join(sorted(dup)))
    if len(edges) < 2:
        problems.append(f"needs at least 2 distinct edges, found {len(edges)}")
    for k, t in enumerate(s.triangles, 1):
        unknown = [e for e in t if e not in edges]
        if unknown:
            problems.append(f"triangle {k} {t} uses unknown edges " + ", ".join(unknown))
        if len(set(t)) == 1:
            problems.append(f"triangle {k} {t} repeats one edge three times")
    inc = s.incidence()
    for e in sorted(edges):
        if inc[e] not in (1, 2):
            problems.append(f"edge {e} has incidence {inc[e]} (must be 1 or 2)")
    return ValidationReport(problems)


def quiver_from_surface(s: SurfaceTriangulation) -> TriangulationQuiver:
    """Arrows "t<k>:a>b" for the k-th triangle, boundary loops "bd:a"."""
    report = validate_triangulation(s)
    if not report:
        raise InvalidInputError("invalid surface triangulation", report.problems)
    arrows, f = [], {}
    for k, tri in enumerate(s.triangles, 1):
        names = [f"t{k}:{tri[i]}>{tri[(i + 1) % 3]}" for i in range(3)]
        for i in range(3):
            arrows.append((names[i], tri[i], tri[(i + 1) % 3]))
            f[names[i]] = names[(i + 1) % 3]
    for e in s.boundary:
        a = f"bd:{e}"
        arrows.append((a, e, e))
        f[a] = a
    return TriangulationQuiver(Quiver(tuple(sorted(s.edges)), tuple(arrows)), f)


def border_consistency(s: SurfaceTriangulation, tq: TriangulationQuiver) -> bool:
    return set(tq.border()) == set(s.boundary)
