"""Shared builders for the test-suite: named instances and random generators."""

from __future__ import annotations

import random

from gdq import catalog
from gdq.algebra import GDPresentation, build_presentation
from gdq.disks import check_family, contract, find_disks
from gdq.fields import QQ
from gdq.quiver_core import Quiver, random_triangulation_quiver


def named_presentations():
    """(label, presentation) for every named instance used by the docs."""
    out = [
        ("triangle", catalog.triangle_algebra()),
        ("triangle b=(2,0,0)", catalog.triangle_algebra(2, 0, 0)),
        ("markov", catalog.markov_algebra()),
        ("markov m=2", catalog.markov_algebra(2)),
        ("two_disk", catalog.two_disk_algebra()),
        ("two_disk m,n,p,q=2,1,3,1", catalog.two_disk_algebra(2, 1, 3, 1)),
    ]
    for n in (2, 3, 4):
        out.append((f"chain{n}", catalog.disk_chain_algebra(n)))
    for r in (1, 2, 3):
        for s in (1, 2, 3):
            out.append((f"Lambda({r},{s},0)", catalog.lambda_algebra(r, s, 0)))
            out.append((f"Lambda({r},{s},1)", catalog.lambda_algebra(r, s, 1)))
    for params in ((1, 1, 1), (1, 2, 3), (3, 1, 2), (2, 2, 2)):
        out.append((f"Gamma{params}", catalog.gamma_algebra(*params)))
        out.append((f"Omega{params}", catalog.omega_algebra(*params)))
    return out


def contracted_presentations():
    out = []
    p = catalog.two_disk_algebra()
    out.append(("two_disk contracted", contract(p, find_disks(p))))
    p = catalog.two_disk_algebra(2, 3, 1, 1, 1)
    out.append(("two_disk m,n=2,3 b=1 contracted", contract(p, find_disks(p))))
    for n in (2, 3, 4):
        p = catalog.disk_chain_algebra(n, 2, 1)
        out.append((f"chain{n} contracted", contract(p, find_disks(p))))
    return out


def remove_unit_loops(p: GDPresentation, loops) -> GDPresentation:
    """Delete g-fixed, f-non-fixed loops of weight 1; their vertices become 1-vertices."""
    q = p.quiver
    fp = dict(p.fprime)
    for loop in loops:
        v = q.source(loop)
        out = fp[loop]
        into = next(x for x in fp if fp[x] == loop)
        del fp[loop]
        fp[v] = out
        fp[into] = v
    arrows = tuple(x for x in q.arrows if x[0] not in set(loops))
    weights = {a: m for a, m in p.weights.items() if a not in set(loops)}
    return GDPresentation(Quiver(q.vertices, arrows), fp, weights, dict(p.border), p.field)


def unit_loops(p: GDPresentation):
    """Loops with g(loop) = loop, f(loop) != loop and weight 1."""
    q = p.quiver
    return [a for a in q.arrow_ids
            if q.is_loop(a) and p.gprime[a] == a and p.fprime[a] != a and p.weights[a] == 1]


def random_weighted(rng: random.Random, n: int, max_weight: int = 3, borders=(0, 1, 2),
                    field=QQ) -> GDPresentation:
    tq = random_triangulation_quiver(n, rng)
    m = {o[0]: rng.randint(1, max_weight) for o in tq.orbit_data.orbits}
    b = {v: rng.choice(borders) for v in tq.border()}
    return build_presentation(tq, m, b, field)


def random_disk_bearing(rng: random.Random, max_weight: int = 3):
    """A random weighted triangulation algebra with at least one disk, plus a disk family.

    Disk-internal orbits get weight 1 (contraction forgets them).
    """
    while True:
        n = rng.randint(4, 9)
        tq = random_triangulation_quiver(n, rng, loop_bias=0.15)
        disks = find_disks(tq)
        if not disks:
            continue
        rng.shuffle(disks)
        family = []
        for d in disks:
            try:
                check_family(tq, family + [d])
            except ValueError:
                continue
            if rng.random() < 0.7 or not family:
                family.append(d)
        inner = {d.eps for d in family} | {d.xi for d in family}
        m = {}
        for orb in tq.orbit_data.orbits:
            m[orb[0]] = 1 if inner & set(orb) else rng.randint(1, max_weight)
        b = {v: rng.choice((0, 1)) for v in tq.border()}
        return build_presentation(tq, m, b), sorted(family)
