"""Quivers, triangulation quivers and the permutations f, bar and g.

A triangulation quiver is a 2-regular quiver ``Q`` with a permutation ``f``
of its arrows such that ``f`` maps an arrow to one starting where it ends
and ``f**3`` is the identity.  Helpers here also cover the more general
"f-structures" used by contracted presentations, where ``f`` may send an
arrow entering a vertex of valency one to that vertex.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Sequence


class InvalidInputError(ValueError):
    """Raised when data does not describe the requested object."""

    def __init__(self, message: str, problems: Sequence[str] = ()):
        super().__init__(message if not problems else message + ": " + "; ".join(problems))
        self.problems = list(problems)


class SearchBudgetError(ValueError):
    """Raised when an exhaustive search is asked to go beyond its size limit."""


@dataclass
class ValidationReport:
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        return "invalid:\n" + "\n".join("  - " + p for p in self.problems)


def cycles_of(perm: Mapping[str, str]) -> list[tuple[str, ...]]:
    """Cycles of a finite permutation, each starting at its least element, sorted."""
    seen: set[str] = set()
    out = []
    for start in sorted(perm):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            if x in seen or x not in perm:
                raise InvalidInputError("not a permutation", [f"{start!r} does not return to itself"])
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def format_cycles(cycles: Iterable[Sequence[str]]) -> str:
    return " ".join("(" + " ".join(c) + ")" for c in cycles)


@dataclass(frozen=True)
class Quiver:
    """Finite quiver; ``arrows`` holds ``(arrow_id, source, target)`` triples."""

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple((str(a), str(s), str(t)) for a, s, t in self.arrows))
        problems = []
        vs = Counter(self.vertices)
        problems += [f"duplicate vertex {v!r}" for v, k in vs.items() if k > 1]
        ids = Counter(a for a, _, _ in self.arrows)
        problems += [f"duplicate arrow {a!r}" for a, k in ids.items() if k > 1]
        for a, s, t in self.arrows:
            for v in (s, t):
                if v not in vs:
                    problems.append(f"arrow {a!r} uses undeclared vertex {v!r}")
        if problems:
            raise InvalidInputError("malformed quiver", problems)
        src = {a: s for a, s, _ in self.arrows}
        tgt = {a: t for a, _, t in self.arrows}
        outs: dict[str, list[str]] = {v: [] for v in self.vertices}
        ins: dict[str, list[str]] = {v: [] for v in self.vertices}
        for a, s, t in self.arrows:
            outs[s].append(a)
            ins[t].append(a)
        object.__setattr__(self, "_src", src)
        object.__setattr__(self, "_tgt", tgt)
        object.__setattr__(self, "_out", {v: tuple(sorted(x)) for v, x in outs.items()})
        object.__setattr__(self, "_in", {v: tuple(sorted(x)) for v, x in ins.items()})

    @property
    def arrow_ids(self) -> tuple[str, ...]:
        return tuple(a for a, _, _ in self.arrows)

    def source(self, a: str) -> str:
        return self._src[a]

    def target(self, a: str) -> str:
        return self._tgt[a]

    def out_arrows(self, v: str) -> tuple[str, ...]:
        return self._out[v]

    def in_arrows(self, v: str) -> tuple[str, ...]:
        return self._in[v]

    def is_loop(self, a: str) -> bool:
        return self._src[a] == self._tgt[a]

    def components(self) -> list[set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for _, s, t in self.arrows:
            adj[s].add(t)
            adj[t].add(s)
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in adj[x] - comp:
                    comp.add(y)
                    stack.append(y)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple((a, t, s) for a, s, t in self.arrows))

    def sorted(self) -> "Quiver":
        return Quiver(tuple(sorted(self.vertices)), tuple(sorted(self.arrows)))


def validate_triangulation_quiver(q: Quiver, f: Mapping[str, str]) -> ValidationReport:
    """Collect every violated condition; never raises on bad ``f``."""
    problems = []
    if len(q.vertices) < 2:
        problems.append(f"needs at least 2 vertices, found {len(q.vertices)}")
    for v in q.vertices:
        o, i = len(q.out_arrows(v)), len(q.in_arrows(v))
        if (o, i) != (2, 2):
            problems.append(f"not 2-regular at vertex {v}: {o} outgoing, {i} incoming")
    arrows = set(q.arrow_ids)
    f = dict(f)
    if set(f) != arrows or set(f.values()) != arrows or len(set(f.values())) != len(f):
        missing = sorted(arrows - set(f))
        extra = sorted(set(f) - arrows)
        detail = []
        if missing:
            detail.append("f undefined on " + ", ".join(missing))
        if extra:
            detail.append("f defined on unknown arrows " + ", ".join(extra))
        if not detail:
            detail.append("f is not a bijection of the arrows")
        problems.append("f is not a permutation of the arrows: " + "; ".join(detail))
    else:
        bad = [a for a in sorted(arrows) if q.source(f[a]) != q.target(a)]
        if bad:
            problems.append("s(f(a)) != t(a) for arrows " + ", ".join(bad))
        for cyc in cycles_of(f):
            if len(cyc) not in (1, 3):
                problems.append(f"f^3 != id on cycle {format_cycles([cyc])}")
    if q.vertices and not q.is_connected():
        problems.append("quiver is not connected")
    return ValidationReport(problems)


@dataclass(frozen=True)
class OrbitData:
    bar: dict[str, str]
    g: dict[str, str]
    orbits: tuple[tuple[str, ...], ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def orbit_of(self, a: str) -> tuple[str, ...]:
        for o in self.orbits:
            if a in o:
                return o
        raise KeyError(a)


@dataclass(frozen=True)
class TriangulationQuiver:
    """A 2-regular quiver with its permutation ``f``.

    Construction refuses anything the validator rejects except a
    disconnected quiver, which stays representable (see ``connected``).
    """

    quiver: Quiver
    f: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "f", dict(self.f))
        report = validate_triangulation_quiver(self.quiver, self.f)
        fatal = [p for p in report.problems if p != "quiver is not connected"]
        if fatal:
            raise InvalidInputError("not a triangulation quiver", fatal)

    @property
    def connected(self) -> bool:
        return self.quiver.is_connected()

    @cached_property
    def orbit_data(self) -> OrbitData:
        return compute_orbit_data(self)

    @property
    def bar(self) -> dict[str, str]:
        return self.orbit_data.bar

    @property
    def g(self) -> dict[str, str]:
        return self.orbit_data.g

    def star(self, a: str) -> str:
        """The other arrow ending where ``a`` ends."""
        x, y = self.quiver.in_arrows(self.quiver.target(a))
        return y if x == a else x

    def f_cycles(self) -> list[tuple[str, ...]]:
        return cycles_of(self.f)

    def border(self) -> list[str]:
        """Vertices carrying an f-fixed loop."""
        return sorted(self.quiver.source(a) for a, b in self.f.items() if a == b)

    def opposite(self) -> "TriangulationQuiver":
        inv = {b: a for a, b in self.f.items()}
        return TriangulationQuiver(self.quiver.opposite(), inv)


def compute_orbit_data(tq: TriangulationQuiver) -> OrbitData:
    q = tq.quiver
    bar = {}
    for v in q.vertices:
        x, y = q.out_arrows(v)
        bar[x], bar[y] = y, x
    g = {a: bar[tq.f[a]] for a in q.arrow_ids}
    return OrbitData(bar, g, tuple(cycles_of(g)))


def f_orbit_census(tq: TriangulationQuiver) -> tuple[int, int, int]:
    lens = Counter(len(c) for c in tq.f_cycles())
    return lens[1], lens[2], lens[3]


# ---------------------------------------------------------------------------
# isomorphism and canonical forms
#
# An "f-structure" is a quiver whose vertices have (out, in) valency (1, 1)
# or (2, 2) with a map fmap on arrows whose value is either an arrow starting
# at the target, or the target vertex itself when that vertex has valency 1.
# Triangulation quivers and generalized presentations are both f-structures.


class _Frame:
    def __init__(self, q: Quiver, fmap: Mapping[str, str],
                 arrow_label: Callable[[str], object] | None = None,
                 vertex_label: Callable[[str], object] | None = None):
        self.q = q
        arrows = set(q.arrow_ids)
        self.f = {a: (b if b in arrows else None) for a, b in fmap.items()}
        self.finv = {b: a for a, b in self.f.items() if b is not None}
        self.g = {}
        for a in q.arrow_ids:
            outs = q.out_arrows(q.target(a))
            if len(outs) == 1:
                self.g[a] = outs[0]
            else:
                self.g[a] = outs[1] if outs[0] == self.f[a] else outs[0]
        self.ginv = {b: a for a, b in self.g.items()}
        self.arrow_label = arrow_label or (lambda a: None)
        self.vertex_label = vertex_label or (lambda v: None)

    def _other(self, pair, a):
        if len(pair) != 2:
            return None
        return pair[1] if pair[0] == a else pair[0]

    def neighbours(self, a: str) -> tuple:
        q = self.q
        return (
            self.f[a],
            self.finv.get(a),
            self.g[a],
            self.ginv.get(a),
            self._other(q.out_arrows(q.source(a)), a),
            self._other(q.in_arrows(q.target(a)), a),
        )

    def traverse(self, start: str):
        """Discovery order of arrows and vertices from ``start`` plus a code."""
        q = self.q
        alab = {start: 0}
        vlab: dict[str, int] = {}
        order = [start]
        queue = deque([start])
        code = []
        while queue:
            a = queue.popleft()
            for v in (q.source(a), q.target(a)):
                if v not in vlab:
                    vlab[v] = len(vlab)
            row = [vlab[q.source(a)], vlab[q.target(a)]]
            for b in self.neighbours(a):
                if b is None:
                    row.append(-1)
                    continue
                if b not in alab:
                    alab[b] = len(alab)
                    order.append(b)
                    queue.append(b)
                row.append(alab[b])
            row.append(repr(self.arrow_label(a)))
            code.append(tuple(row))
        vorder = sorted(vlab, key=vlab.get)
        code.append(tuple(repr(self.vertex_label(v)) for v in vorder))
        return order, vorder, tuple(code)


@dataclass(frozen=True)
class Isomorphism:
    vertex_map: dict[str, str]
    arrow_map: dict[str, str]


def _component_frames(q, fmap, arrow_label, vertex_label):
    frame = _Frame(q, fmap, arrow_label, vertex_label)
    comps = []
    for comp in q.components():
        arrows = sorted(a for a in q.arrow_ids if q.source(a) in comp)
        comps.append((comp, arrows))
    return frame, comps


def _canonical_start(frame: _Frame, arrows: Sequence[str]):
    best = None
    for a in arrows:
        _, _, code = frame.traverse(a)
        if best is None or code < best[0]:
            best = (code, a)
    return best


def canonical_code(q: Quiver, fmap: Mapping[str, str],
                   arrow_label=None, vertex_label=None) -> tuple:
    """Isomorphism invariant that determines the labelled f-structure."""
    frame, comps = _component_frames(q, fmap, arrow_label, vertex_label)
    codes = []
    for comp, arrows in comps:
        if not arrows:
            codes.append(((), (repr(frame.vertex_label(next(iter(comp)))),)))
        else:
            codes.append(_canonical_start(frame, arrows)[0])
    return tuple(sorted(codes))


def structure_isomorphism(q1: Quiver, f1: Mapping[str, str], q2: Quiver, f2: Mapping[str, str],
                          arrow_label1=None, arrow_label2=None,
                          vertex_label1=None, vertex_label2=None) -> Isomorphism | None:
    """Bijection of vertices and arrows commuting with s, t, f and the labels."""
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return None
    fr1, comps1 = _component_frames(q1, f1, arrow_label1, vertex_label1)
    fr2, comps2 = _component_frames(q2, f2, arrow_label2, vertex_label2)
    if len(comps1) != len(comps2):
        return None
    if any(not arrows for _, arrows in comps1 + comps2):
        # isolated vertices only arise in degenerate input
        if len(comps1) > 1 or comps1[0][1] or comps2[0][1]:
            return None
        v1, v2 = next(iter(comps1[0][0])), next(iter(comps2[0][0]))
        if fr1.vertex_label(v1) != fr2.vertex_label(v2):
            return None
        return Isomorphism({v1: v2}, {})
    if len(comps1) == 1:
        start = min(comps1[0][1])
        order1, vorder1, code1 = fr1.traverse(start)
        for b in sorted(comps2[0][1]):
            order2, vorder2, code2 = fr2.traverse(b)
            if code1 == code2:
                return Isomorphism(dict(zip(vorder1, vorder2)), dict(zip(order1, order2)))
        return None
    vmap, amap = {}, {}
    remaining = list(comps2)
    for comp, arrows in comps1:
        code, a = _canonical_start(fr1, arrows)
        for k, (comp2, arrows2) in enumerate(remaining):
            hit = _canonical_start(fr2, arrows2)
            if hit[0] == code:
                o1, v1, _ = fr1.traverse(a)
                o2, v2, _ = fr2.traverse(hit[1])
                vmap.update(zip(v1, v2))
                amap.update(zip(o1, o2))
                del remaining[k]
                break
        else:
            return None
    return Isomorphism(vmap, amap)


def quiver_isomorphic(a: TriangulationQuiver, b: TriangulationQuiver) -> Isomorphism | None:
    return structure_isomorphism(a.quiver, a.f, b.quiver, b.f)


# ---------------------------------------------------------------------------
# corner words, enumeration and random generation
#
# Each f-orbit of a triangulation quiver reads as a cyclic word of vertices:
# (x y z) for a 3-cycle x->y->z->x and (x) for a fixed loop at x.  Every
# vertex occurs exactly twice among the words, and any such multiset of
# words gives back a triangulation quiver.

def triangulation_quiver_from_words(vertices: Sequence[str], words: Sequence[Sequence[str]]) -> TriangulationQuiver:
    arrows, f = [], {}
    k = 0
    for w in words:
        if len(w) == 1:
            a = f"bd:{w[0]}"
            if a in f:
                a += ":2"
            arrows.append((a, w[0], w[0]))
            f[a] = a
            continue
        if len(w) != 3:
            raise InvalidInputError(f"corner word {tuple(w)} must have length 1 or 3")
        k += 1
        names = [f"t{k}:{w[i]}>{w[(i + 1) % 3]}" for i in range(3)]
        for i in range(3):
            arrows.append((names[i], w[i], w[(i + 1) % 3]))
            f[names[i]] = names[(i + 1) % 3]
    return TriangulationQuiver(Quiver(tuple(vertices), tuple(arrows)), f)


def corner_words(tq: TriangulationQuiver) -> list[tuple[str, ...]]:
    q = tq.quiver
    return [tuple(q.source(a) for a in cyc) for cyc in tq.f_cycles()]


def _word_partitions(n: int) -> Iterator[list[tuple[int, ...]]]:
    counts = [2] * n

    def rec(blocks):
        v = next((i for i in range(n) if counts[i]), None)
        if v is None:
            yield list(blocks)
            return
        counts[v] -= 1
        blocks.append((v,))
        yield from rec(blocks)
        blocks.pop()
        for x in range(n):
            if not counts[x]:
                continue
            counts[x] -= 1
            for y in range(n):
                if not counts[y] or (y == v and x != v):
                    continue
                counts[y] -= 1
                blocks.append((v, x, y))
                yield from rec(blocks)
                blocks.pop()
                counts[y] += 1
            counts[x] += 1
        counts[v] += 1

    yield from rec([])


MAX_ENUMERATION_VERTICES = 6


def enumerate_triangulation_quivers(max_vertices: int, min_vertices: int = 2) -> list[TriangulationQuiver]:
    """All connected triangulation quivers up to isomorphism, smallest first."""
    if max_vertices < 2:
        raise SearchBudgetError("triangulation quivers need at least 2 vertices")
    if max_vertices > MAX_ENUMERATION_VERTICES:
        raise SearchBudgetError(
            f"search budget: enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices, "
            f"got {max_vertices}")
    out = []
    for n in range(max(2, min_vertices), max_vertices + 1):
        names = [str(i + 1) for i in range(n)]
        found = {}
        for blocks in _word_partitions(n):
            words = [tuple(names[i] for i in w) for w in blocks]
            tq = triangulation_quiver_from_words(names, words)
            if not tq.connected:
                continue
            code = canonical_code(tq.quiver, tq.f)
            if code not in found:
                found[code] = tq
        out += [found[c] for c in sorted(found)]
    return out


def random_corner_words(n: int, rng: random.Random, loop_bias: float = 0.25) -> list[tuple[str, ...]]:
    slots = [str(i + 1) for i in range(n) for _ in range(2)]
    rng.shuffle(slots)
    words = []
    while slots:
        if len(slots) < 3 or rng.random() < loop_bias:
            words.append((slots.pop(),))
        else:
            words.append((slots.pop(), slots.pop(), slots.pop()))
    return words


def random_triangulation_quiver(n: int, rng: random.Random, loop_bias: float = 0.25) -> TriangulationQuiver:
    """Uniform-ish random connected triangulation quiver on ``n`` vertices."""
    if n < 2:
        raise InvalidInputError("triangulation quivers need at least 2 vertices")
    names = [str(i + 1) for i in range(n)]
    while True:
        tq = triangulation_quiver_from_words(names, random_corner_words(n, rng, loop_bias))
        if tq.connected:
            return tq


def all_structure_isomorphisms(q1: Quiver, f1: Mapping[str, str], q2: Quiver, f2: Mapping[str, str]) -> Iterator[Isomorphism]:
    """Every isomorphism between two connected f-structures."""
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return
    if not (q1.is_connected() and q2.is_connected()):
        raise InvalidInputError("all_structure_isomorphisms needs connected quivers")
    fr1, fr2 = _Frame(q1, f1), _Frame(q2, f2)
    start = min(q1.arrow_ids)
    order1, vorder1, code1 = fr1.traverse(start)
    for b in sorted(q2.arrow_ids):
        order2, vorder2, code2 = fr2.traverse(b)
        if code1 == code2:
            yield Isomorphism(dict(zip(vorder1, vorder2)), dict(zip(order1, order2)))
