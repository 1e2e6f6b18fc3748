"""Syzygies of arrow modules, tube census, periodic simples and bipartite walks.

For an arrow ``a`` the right ideal ``U(a) = aA`` is uniserial of dimension
``m_a * n_a``, and its syzygy is ``U(f'(a))``.  Everything below is checked
numerically against the multiplication table rather than taken on faith.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import (BasisPath, Element, GDPresentation, build_presentation,
                      cycle_A, gabriel_quiver)
from .fields import rank
from .quiver_core import InvalidInputError, TriangulationQuiver, cycles_of


class InconsistencyError(RuntimeError):
    """A numeric cross-check disagreed with the combinatorial prediction."""


def _span_rank(p: GDPresentation, elements) -> int:
    return rank((x.terms for x in elements), p.field)


def right_ideal_dimension(p: GDPresentation, z: Element, vertex: str | None = None) -> int:
    """dim zA; ``vertex`` restricts the multipliers to paths starting there."""
    paths = p.basis if vertex is None else p.basis.of_vertex(vertex)
    return _span_rank(p, (z * p.element({x: 1}) for x in paths))


def left_kernel_dimension(p: GDPresentation, z: Element, vertex: str) -> int:
    """Dimension of the kernel of x -> z x on the projective at ``vertex``."""
    return len(p.basis.of_vertex(vertex)) - right_ideal_dimension(p, z, vertex)


@dataclass(frozen=True)
class ArrowModule:
    arrow: str
    vertex: str
    dimension: int


def arrow_module(p: GDPresentation, a: str) -> ArrowModule:
    q = p.quiver
    dim = right_ideal_dimension(p, p.arrow(a), q.target(a))
    if dim != p.cycle_length(a):
        raise InconsistencyError(f"dim U({a}) = {dim}, expected {p.cycle_length(a)}")
    return ArrowModule(a, q.source(a), dim)


def kernel_generator(p: GDPresentation, a: str) -> Element:
    """Generator of the kernel of left multiplication by ``a`` on P_{t(a)}."""
    nxt = p.fprime[a]
    if nxt not in p.gprime:
        return p.omega(nxt)
    if nxt == a and p.b(p.quiver.source(a)):
        v = p.quiver.source(a)
        return p.arrow(a) - p.b(v) * p.path(cycle_A(p, p.bar(a)), start=v)
    return p.arrow(nxt)


def syzygy_arrow(p: GDPresentation, a: str, check: bool = True) -> str:
    """f'(a): the arrow (or 1-vertex) whose module is the syzygy of U(a)."""
    nxt = p.fprime[a]
    if check:
        q = p.quiver
        t = q.target(a)
        z = kernel_generator(p, a)
        if p.arrow(a) * z:
            raise InconsistencyError(f"{a} times the kernel generator is not zero")
        kdim = left_kernel_dimension(p, p.arrow(a), t)
        gdim = right_ideal_dimension(p, z)
        if kdim != gdim:
            raise InconsistencyError(f"kernel of {a} has dim {kdim}, generator spans {gdim}")
        expected = 1 if nxt not in p.gprime else p.cycle_length(nxt)
        if kdim != expected or kdim + p.cycle_length(a) != len(p.basis.of_vertex(t)):
            raise InconsistencyError(f"dimension bookkeeping fails at {a}")
    return nxt


def syzygy_item(p: GDPresentation, item: str, check: bool = True) -> str:
    """Omega on arrows and 1-vertices: the simple at a 1-vertex maps to its out-arrow."""
    if item in p.gprime:
        return syzygy_arrow(p, item, check)
    out = p.fprime[item]
    if check:
        rad = len(p.basis.of_vertex(item)) - 1
        if rad != p.cycle_length(out):
            raise InconsistencyError(f"rad P_{item} has dim {rad}, U({out}) has {p.cycle_length(out)}")
    return out


def omega_period(p: GDPresentation, item: str, check: bool = True, limit: int = 12) -> int:
    x = item
    for k in range(1, limit + 1):
        x = syzygy_item(p, x, check)
        if x == item:
            return k
    raise InconsistencyError(f"no syzygy period found for {item} within {limit} steps")


@dataclass(frozen=True)
class TubeCensus:
    rank3_count: int
    rank1_arrow_count: int
    period2_pairs: int
    periods: Mapping[str, int] = field(default_factory=dict)


def tube_census(p: GDPresentation, check: bool = True) -> TubeCensus:
    cycles = cycles_of(p.fprime)
    periods = {}
    for cyc in cycles:
        for a in cyc:
            if a in p.gprime:
                periods[a] = omega_period(p, a, check)
                if periods[a] != len(cyc):
                    raise InconsistencyError(f"period of U({a}) is {periods[a]}, f' cycle has length {len(cyc)}")
    lens = [len(c) for c in cycles]
    return TubeCensus(lens.count(3), lens.count(1), lens.count(2), periods)


def tau_arrow(p: GDPresentation, a: str) -> str:
    """tau = Omega^2 on arrow modules of an f'-3-cycle."""
    return syzygy_item(p, syzygy_item(p, a))


def gabriel_out_degrees(p: GDPresentation) -> dict[str, int]:
    """dim e_v (rad / rad^2), computed from the multiplication table.

    rad^2 is spanned by products (arrow) * (radical basis path).
    """
    basis = p.basis
    radical = [p.element({x: 1}) for x in basis if x.kind != "e"]
    out = {}
    for v in p.quiver.vertices:
        rad_v = [x for x in basis.of_vertex(v) if x.kind != "e"]
        squares = []
        for a in p.quiver.out_arrows(v):
            ea = p.arrow(a)
            squares += [prod for y in radical if (prod := ea * y)]
        out[v] = len(rad_v) - _span_rank(p, squares)
    return out


def simple_periodicity(p: GDPresentation) -> dict[str, str]:
    """"periodic" exactly at the 1-vertices of the Gabriel quiver."""
    gq = gabriel_quiver(p)
    return {v: ("periodic" if len(gq.out_arrows(v)) == 1 else "non-periodic") for v in sorted(gq.vertices)}


def gabriel_two_regular(p: GDPresentation) -> bool:
    gq = gabriel_quiver(p)
    return all(len(gq.out_arrows(v)) == 2 and len(gq.in_arrows(v)) == 2 for v in gq.vertices)


# ---------------------------------------------------------------------------
# bipartite walks

@dataclass(frozen=True)
class BipartiteWalk:
    """Steps are (arrow, +1) or (arrow, -1) for an inverse arrow."""

    steps: tuple[tuple[str, int], ...]
    reduced: tuple[tuple[str, int], ...]
    closed: bool


def _step_ends(p, step):
    a, sgn = step
    s, t = p.quiver.source(a), p.quiver.target(a)
    return (s, t) if sgn > 0 else (t, s)


def walk_is_closed(p, steps) -> bool:
    ends = [_step_ends(p, s) for s in steps]
    joined = all(ends[i][1] == ends[(i + 1) % len(ends)][0] for i in range(len(ends)))
    return bool(steps) and joined


def walk_is_bipartite(steps) -> bool:
    return len(steps) % 2 == 0 and all(steps[i][1] != steps[(i + 1) % len(steps)][1]
                                       for i in range(len(steps)))


def walk_has_backtrack(steps) -> bool:
    n = len(steps)
    return any(steps[i][0] == steps[(i + 1) % n][0] and steps[i][1] != steps[(i + 1) % n][1]
               for i in range(n))


def primitive_walk(tq: TriangulationQuiver | GDPresentation, a: str) -> BipartiteWalk:
    """The closed walk a (a*)^-1 h(a) (h(a)*)^-1 ... with h(x) = bar(x*)."""
    p = tq if isinstance(tq, GDPresentation) else build_presentation(tq)
    if not p.is_triangulation_type:
        raise InvalidInputError("primitive walks are defined on triangulation quivers")
    if p.quiver.is_loop(a):
        raise InvalidInputError(f"{a} is a loop; walks start at a non-loop arrow")
    steps = []
    x = a
    while True:
        steps += [(x, 1), (p.star(x), -1)]
        x = p.bar(p.star(x))
        if x == a:
            break
        if len(steps) > 4 * len(p.quiver.arrows):
            raise InconsistencyError("h does not return to the start")
    drop = {y for y in p.quiver.arrow_ids if p.cycle_length(y) == 1}
    reduced = tuple(s for s in steps if s[0] not in drop)
    return BipartiteWalk(tuple(steps), reduced, walk_is_closed(p, steps))


def walk_runs(steps) -> list[tuple[int, tuple[str, ...]]]:
    """Maximal same-direction runs of a cyclic walk, each as a forward path."""
    n = len(steps)
    if n == 0:
        return []
    start = next((i for i in range(n) if steps[i][1] != steps[i - 1][1]), 0)
    rot = steps[start:] + steps[:start]
    runs, cur = [], [rot[0]]
    for s in rot[1:]:
        if s[1] == cur[-1][1]:
            cur.append(s)
        else:
            runs.append(cur)
            cur = [s]
    runs.append(cur)
    out = []
    for r in runs:
        arrows = tuple(x for x, _ in r)
        out.append((r[0][1], arrows if r[0][1] > 0 else arrows[::-1]))
    return out


def path_is_nonzero_mod_socle(p: GDPresentation, path) -> bool:
    """True when the path is a proper prefix of its B-cycle (nonzero in A/soc A)."""
    if not path:
        return True
    if len(path) >= p.cycle_length(path[0]):
        return False
    return all(p.gprime[path[i]] == path[i + 1] for i in range(len(path) - 1))


def reduced_walk_avoids_relations(p: GDPresentation, walk: BipartiteWalk) -> bool:
    return all(path_is_nonzero_mod_socle(p, path) for _, path in walk_runs(list(walk.reduced)))


# ---------------------------------------------------------------------------

def growth_class(p: GDPresentation) -> str:
    from .classify import match_family
    fam = match_family(p)
    if fam is not None and fam.polynomial:
        return "polynomial"
    return "nonpolynomial"
