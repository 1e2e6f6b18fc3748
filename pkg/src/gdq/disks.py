"""Two-triangle disks: detection, contraction of their 2-cycle vertices, expansion.

A disk is a pair of f-triangles (theta eps mu) and (sigma rho xi) glued
along a 2-cycle c <-> d::

    theta: a -> c   eps: c -> d   mu: d -> a
    sigma: c -> b   rho: b -> d   xi: d -> c

Contracting the disk deletes c and d and keeps the composites
theta*sigma (a -> b) and rho*mu (b -> a), whose products in either order vanish.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .algebra import GDPresentation
from .fields import QQ, Field
from .quiver_core import InvalidInputError, Quiver, TriangulationQuiver


@dataclass(frozen=True, order=True)
class TwoTriangleDisk:
    c: str
    d: str
    a: str
    b: str
    theta: str
    eps: str
    mu: str
    sigma: str
    rho: str
    xi: str

    @property
    def arrows(self) -> frozenset[str]:
        return frozenset((self.theta, self.eps, self.mu, self.sigma, self.rho, self.xi))

    @property
    def inner_vertices(self) -> tuple[str, str]:
        return (self.c, self.d)

    @property
    def forward_name(self) -> str:
        return f"via({self.c},{self.d}):{self.a}>{self.b}"

    @property
    def backward_name(self) -> str:
        return f"via({self.d},{self.c}):{self.b}>{self.a}"

    def __str__(self):
        return (f"disk c={self.c} d={self.d} a={self.a} b={self.b} "
                f"({self.theta} {self.eps} {self.mu})({self.sigma} {self.rho} {self.xi})")


def _structure(obj):
    if isinstance(obj, TriangulationQuiver):
        return obj.quiver, obj.f
    return obj.quiver, obj.fprime


def find_disks(obj: TriangulationQuiver | GDPresentation) -> list[TwoTriangleDisk]:
    """Every 2-triangle disk, with 2-cycle vertices ordered c < d."""
    q, f = _structure(obj)
    arrows = set(q.arrow_ids)
    out = []
    for eps in sorted(arrows):
        c, d = q.source(eps), q.target(eps)
        if not c < d:
            continue
        mu = f[eps]
        if mu not in arrows:
            continue
        theta = f[mu]
        if theta not in arrows or f[theta] != eps:
            continue
        a = q.target(mu)
        for xi in q.out_arrows(d):
            if q.target(xi) != c:
                continue
            sigma = f[xi]
            if sigma not in arrows:
                continue
            rho = f[sigma]
            if rho not in arrows or f[rho] != xi:
                continue
            b = q.target(sigma)
            if a == b or {a, b} & {c, d}:
                continue
            six = {theta, eps, mu, sigma, rho, xi}
            if len(six) != 6:
                continue
            out.append(TwoTriangleDisk(c, d, a, b, theta, eps, mu, sigma, rho, xi))
    return sorted(out)


def select_disks(obj, spec: str | Sequence[int] | None) -> list[TwoTriangleDisk]:
    """``"all"``, a comma separated list of 1-based positions, or a list of ints."""
    found = find_disks(obj)
    if spec is None or spec == "all":
        return found
    if isinstance(spec, str):
        spec = [int(x) for x in spec.split(",") if x.strip()]
    try:
        return [found[i - 1] for i in spec]
    except IndexError:
        raise InvalidInputError(f"disk ids must lie in 1..{len(found)}") from None


def check_family(obj, disks: Iterable[TwoTriangleDisk]) -> list[TwoTriangleDisk]:
    disks = sorted(disks)
    present = set(find_disks(obj))
    problems = [f"{d} is not a disk of the presentation" for d in disks if d not in present]
    used_arrows: set[str] = set()
    inner: set[str] = set()
    for d in disks:
        if d.arrows & used_arrows:
            problems.append(f"{d} overlaps another disk")
        if set(d.inner_vertices) & inner:
            problems.append(f"{d} shares a 2-cycle vertex with another disk")
        used_arrows |= d.arrows
        inner |= set(d.inner_vertices)
    if problems:
        raise InvalidInputError("invalid disk family", problems)
    return disks


def contract(p: GDPresentation, disks: Iterable[TwoTriangleDisk]) -> GDPresentation:
    """The presentation of e A e where e omits the 2-cycle vertices of the disks."""
    disks = check_family(p, disks)
    if not disks:
        return p
    q = p.quiver
    drop_v = {v for d in disks for v in d.inner_vertices}
    drop_a = set().union(*(d.arrows for d in disks))
    arrows = [x for x in q.arrows if x[0] not in drop_a]
    fp = {k: v for k, v in p.fprime.items() if k not in drop_a}
    weights = {a: m for a, m in p.weights.items() if a not in drop_a}
    for d in disks:
        fwd, bwd = d.forward_name, d.backward_name
        if fwd in fp or bwd in fp:
            raise InvalidInputError(f"composite name {fwd} already in use")
        arrows += [(fwd, d.a, d.b), (bwd, d.b, d.a)]
        fp[fwd], fp[bwd] = bwd, fwd
        weights[fwd] = p.weights[d.theta]
        weights[bwd] = p.weights[d.rho]
    verts = tuple(v for v in q.vertices if v not in drop_v)
    border = {v: c for v, c in p.border.items() if v not in drop_v}
    return GDPresentation(Quiver(verts, tuple(arrows)), fp, weights, border, p.field)


@dataclass(frozen=True)
class Expansion:
    quiver: TriangulationQuiver
    disks: tuple[TwoTriangleDisk, ...]
    weights: Mapping[str, int]
    border: Mapping[str, object]
    field: Field = QQ

    def presentation(self) -> GDPresentation:
        return GDPresentation(self.quiver.quiver, self.quiver.f, dict(self.weights), dict(self.border), self.field)


_VIA = re.compile(r"^via\(([^,()]+),([^,()]+)\):([^>]+)>(.+)$")


def _disk_names(p: GDPresentation, x: str, y: str):
    """Choose the forward arrow of a 2-cycle and the inner vertex names."""
    mx, my = _VIA.match(x), _VIA.match(y)
    if mx and my and (mx.group(1), mx.group(2)) == (my.group(2), my.group(1)):
        fwd = x if mx.group(1) < mx.group(2) else y
        m = mx if fwd == x else my
        return fwd, (y if fwd == x else x), m.group(1), m.group(2)
    fwd, bwd = sorted((x, y))
    return fwd, bwd, f"c[{fwd}]", f"d[{fwd}]"


def expand(p: GDPresentation) -> Expansion:
    """Undo contractions: loops at 1-vertices, fresh disks for f'-2-cycles."""
    q = p.quiver
    verts = list(q.vertices)
    arrows = list(q.arrows)
    fp = dict(p.fprime)
    weights = dict(p.weights)
    taken = set(q.vertices) | set(q.arrow_ids)

    def fresh(name):
        if name in taken:
            raise InvalidInputError(f"expansion name {name!r} collides with an existing id")
        taken.add(name)
        return name

    for v in p.one_vertices:
        gam = q.out_arrows(v)[0]
        dlt = q.in_arrows(v)[0]
        loop = fresh(f"loop:{v}")
        arrows.append((loop, v, v))
        del fp[v]
        fp[loop], fp[gam], fp[dlt] = gam, dlt, loop
        weights[loop] = 1
    disks = []
    for x, y in p.two_cycles():
        fwd, bwd, c, d = _disk_names(p, x, y)
        a, b = q.source(fwd), q.target(fwd)
        verts += [fresh(c), fresh(d)]
        name = lambda u, w: fresh(f"D[{c},{d}]:{u}>{w}")
        th, ep, mu = name(a, c), name(c, d), name(d, a)
        si, rh, xi = name(c, b), name(b, d), name(d, c)
        arrows = [t for t in arrows if t[0] not in (fwd, bwd)]
        arrows += [(th, a, c), (ep, c, d), (mu, d, a), (si, c, b), (rh, b, d), (xi, d, c)]
        del fp[fwd], fp[bwd]
        fp.update({th: ep, ep: mu, mu: th, si: rh, rh: xi, xi: si})
        mf, mb = weights.pop(fwd), weights.pop(bwd)
        weights.update({th: mf, si: mf, rh: mb, mu: mb, ep: 1, xi: 1})
        disks.append(TwoTriangleDisk(c, d, a, b, th, ep, mu, si, rh, xi))
    tq = TriangulationQuiver(Quiver(tuple(verts), tuple(arrows)), fp)
    return Expansion(tq, tuple(sorted(disks)), weights, dict(p.border), p.field)
